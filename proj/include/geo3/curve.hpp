// geo3/curve.hpp — differential geometry of space curves: derivatives,
// regularity, arc length, curvature/torsion with the Frenet frame, osculating
// objects, global shape tests, and reconstruction of a curve from prescribed
// curvature and torsion.
//
// Conventions: κ = ‖γ'×γ''‖/‖γ'‖³ is unsigned; τ = det(γ',γ'',γ''')/‖γ'×γ''‖²
// (a right-handed helix has τ > 0); T = γ'/‖γ'‖, N = T'/‖T'‖, B = T×N.
// Where ‖γ'×γ''‖ ≤ 1e−9 the torsion and the (N, B) pair are reported as
// undefined rather than NaN.
#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "geo3/error.hpp"
#include "geo3/expr.hpp"
#include "geo3/integrate.hpp"
#include "geo3/models.hpp"
#include "geo3/ode.hpp"
#include "geo3/vec.hpp"

namespace geo3 {

inline constexpr double kSpeedEps = 1e-9;     // below this, a point is singular
inline constexpr double kFrameEps = 1e-9;     // ‖γ'×γ''‖ cutoff for τ and (N, B)

/// A point with an orthonormal moving frame attached.
struct FrameState {
  Vec3 p{};
  Vec3 T{1.0, 0.0, 0.0};
  Vec3 N{0.0, 1.0, 0.0};
  Vec3 B{0.0, 0.0, 1.0};
};

struct CurveDerivs {
  Vec3 p, d1, d2, d3;
};

/// γ and its first three derivatives at t, computed by jet evaluation.
inline CurveDerivs derivatives(const CurveModel& c, double t) {
  const Vec3T<Jet1> j = c.jets(t);
  return {jet_order(j, 0), jet_order(j, 1), jet_order(j, 2), jet_order(j, 3)};
}

struct RegularityReport {
  bool regular = false;
  double min_speed = 0.0;
  double worst_t = 0.0;
  std::vector<std::string> notes;  // per-sample evaluation failures
};

/// Minimum speed over uniformly spaced samples; irregular below 1e−9.
inline RegularityReport is_regular(const CurveModel& c, int samples) {
  if (samples < 2) throw GeomError("is_regular needs at least 2 samples");
  RegularityReport r;
  r.min_speed = std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    const double t = c.t0 + (c.t1 - c.t0) * i / (samples - 1);
    try {
      const Vec3T<Jet1> j = c.jets(t);
      const double speed = norm(jet_order(j, 1));
      if (speed < r.min_speed) {
        r.min_speed = speed;
        r.worst_t = t;
      }
    } catch (const DomainError& e) {
      r.notes.push_back("t=" + detail::format_double(t) + ": " + e.what());
    }
  }
  if (!std::isfinite(r.min_speed)) throw GeomError("no sample point could be evaluated");
  r.regular = r.min_speed > kSpeedEps;
  return r;
}

struct Line3 {
  Vec3 point, direction;
  Vec3 at(double u) const { return point + u * direction; }
};

/// u ↦ γ(t0) + u·γ'(t0).
inline Line3 tangent_line(const CurveModel& c, double t0) {
  const CurveDerivs d = derivatives(c, t0);
  if (norm(d.d1) <= kSpeedEps)
    throw GeomError("tangent line undefined: zero speed at t=" + detail::format_double(t0));
  return {d.p, d.d1};
}

/// ∫_a^b ‖γ'‖ by adaptive quadrature.
inline double arc_length(const CurveModel& c, double a, double b, double abs_tol = 1e-10) {
  return integrate([&](double t) { return norm(jet_order(c.jets(t), 1)); }, a, b, abs_tol);
}

/// Solve arc_length(base, t) = s for t ∈ [base, t1] (monotone bisection +
/// Newton, to 1e−10 in arc length).
inline double param_by_arc_length(const CurveModel& c, double s, double base) {
  if (s < 0.0) throw GeomError("arc length must be non-negative");
  if (s == 0.0) return base;
  const double total = arc_length(c, base, c.t1, 1e-12);
  if (s > total + 1e-9)
    throw GeomError("arc length " + detail::format_double(s) + " exceeds curve length " +
                    detail::format_double(total));
  double lo = base, hi = c.t1;
  // running value of arc_length(base, t) at the current iterate
  double t = base + (c.t1 - base) * std::min(1.0, s / total);
  double acc = arc_length(c, base, t, 1e-13);
  for (int iter = 0; iter < 200; ++iter) {
    const double f = acc - s;
    if (std::fabs(f) <= 1e-10) return t;
    if (f > 0.0) hi = t;
    else lo = t;
    const double speed = norm(jet_order(c.jets(t), 1));
    double next = speed > kSpeedEps ? t - f / speed : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    acc += arc_length(c, t, next, 1e-13);  // integrate() signs reversed intervals itself
    t = next;
    if (hi - lo < 1e-14 * (1.0 + std::fabs(t))) return t;
  }
  return t;
}

struct CurvatureReport {
  double speed = 0.0;
  double kappa = 0.0;
  bool tau_defined = false;
  double tau = 0.0;
  bool frame_defined = false;  // N and B; T is defined whenever speed > 0
  Vec3 T{}, N{}, B{};
};

/// κ, τ and the Frenet frame at t.
inline CurvatureReport curvature_torsion(const CurveModel& c, double t) {
  const Vec3T<Jet1> j = c.jets(t);
  const Vec3 d1 = jet_order(j, 1), d2 = jet_order(j, 2), d3 = jet_order(j, 3);
  CurvatureReport r;
  r.speed = norm(d1);
  if (r.speed <= kSpeedEps)
    throw GeomError("curvature undefined: zero speed at t=" + detail::format_double(t));
  const Vec3 cr = cross(d1, d2);
  const double ncr = norm(cr);
  r.kappa = ncr / (r.speed * r.speed * r.speed);
  r.T = d1 / r.speed;
  if (ncr > kFrameEps) {
    r.tau_defined = true;
    r.tau = det3(d1, d2, d3) / (ncr * ncr);
    // N = T'/‖T'‖ computed in jet arithmetic
    const Vec3T<Jet1> tj = normalized(shifted(j));
    const Vec3 tprime = jet_order(tj, 1);
    r.frame_defined = true;
    r.N = normalized(tprime);
    r.B = cross(r.T, r.N);
  }
  return r;
}

struct Plane3 {
  Vec3 point, normal;
};

/// Plane through γ(t0) spanned by T and N (normal B).
inline Plane3 osculating_plane(const CurveModel& c, double t0) {
  const CurvatureReport r = curvature_torsion(c, t0);
  if (!r.frame_defined)
    throw GeomError("osculating plane undefined: curvature vanishes at t=" +
                    detail::format_double(t0));
  return {c.point(t0), r.B};
}

struct Circle3 {
  Vec3 center;
  double radius = 0.0;
};

/// Center γ(t0) + N/κ, radius 1/κ.
inline Circle3 osculating_circle(const CurveModel& c, double t0) {
  const CurvatureReport r = curvature_torsion(c, t0);
  if (!r.frame_defined)
    throw GeomError("osculating circle undefined: curvature vanishes at t=" +
                    detail::format_double(t0));
  return {c.point(t0) + (1.0 / r.kappa) * r.N, 1.0 / r.kappa};
}

struct ShapeReport {
  bool planar = false;
  bool general_helix = false;
  bool spherical = false;
  Vec3 sphere_center{};
  double sphere_residual = 0.0;
  double max_abs_tau = 0.0;
  double ratio_stdev = 0.0;
  int excluded_samples = 0;
  std::vector<std::string> warnings;
};

/// Global classification from uniformly spaced interior samples:
/// planar (τ ≈ 0), general helix (τ/κ constant), spherical (all normal
/// planes pass through one point).
inline ShapeReport shape_tests(const CurveModel& c, int samples) {
  if (samples < 4) throw GeomError("shape_tests needs at least 4 samples");
  ShapeReport rep;
  std::vector<double> taus, ratios;
  std::vector<Vec3> tangents, points;
  double max_kappa = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double t = c.t0 + (c.t1 - c.t0) * (i + 0.5) / samples;
    try {
      const CurvatureReport r = curvature_torsion(c, t);
      if (!r.tau_defined) {
        ++rep.excluded_samples;
        rep.warnings.push_back("t=" + detail::format_double(t) +
                               ": torsion undefined (curvature too small), sample excluded");
        continue;
      }
      max_kappa = std::max(max_kappa, r.kappa);
      taus.push_back(r.tau);
      ratios.push_back(r.tau / r.kappa);
      tangents.push_back(r.T);
      points.push_back(c.point(t));
    } catch (const GeomError& e) {
      ++rep.excluded_samples;
      rep.warnings.push_back(std::string(e.what()) + ", sample excluded");
    }
  }
  if (taus.empty()) throw GeomError("shape_tests: no usable samples");

  for (double tau : taus) rep.max_abs_tau = std::max(rep.max_abs_tau, std::fabs(tau));
  rep.planar = rep.max_abs_tau <= 1e-6 * (1.0 + max_kappa);

  double mean = 0.0;
  for (double r : ratios) mean += r;
  mean /= static_cast<double>(ratios.size());
  double var = 0.0;
  for (double r : ratios) var += (r - mean) * (r - mean);
  rep.ratio_stdev = std::sqrt(var / static_cast<double>(ratios.size()));
  rep.general_helix = rep.ratio_stdev <= 1e-6 * (1.0 + std::fabs(mean));

  // Least-squares point on all normal planes: T_i · (c − γ_i) = 0. The system
  // is rank-deficient for planar curves, so regularize toward the minimal-norm
  // solution.
  Mat3 A{};
  Vec3 b{};
  for (std::size_t i = 0; i < tangents.size(); ++i) {
    A += outer(tangents[i], tangents[i]);
    b += tangents[i] * dot(tangents[i], points[i]);
  }
  const double ridge = 1e-9 * (1.0 + (A.m[0][0] + A.m[1][1] + A.m[2][2]) / 3.0);
  for (int k = 0; k < 3; ++k) A.m[k][k] += ridge;
  rep.sphere_center = solve3(A, b);
  for (std::size_t i = 0; i < tangents.size(); ++i)
    rep.sphere_residual =
        std::max(rep.sphere_residual, std::fabs(dot(tangents[i], rep.sphere_center - points[i])));
  rep.spherical = rep.sphere_residual <= 1e-6;
  return rep;
}

struct FrameSample {
  double s = 0.0;
  Vec3 p, T, N, B;
};

namespace detail {

inline void check_orthonormal(const FrameState& f) {
  const double errs[] = {std::fabs(dot(f.T, f.T) - 1.0), std::fabs(dot(f.N, f.N) - 1.0),
                         std::fabs(dot(f.B, f.B) - 1.0), std::fabs(dot(f.T, f.N)),
                         std::fabs(dot(f.T, f.B)),       std::fabs(dot(f.N, f.B))};
  for (double e : errs)
    if (e > 1e-9) throw GeomError("initial frame is not orthonormal");
}

inline void gram_schmidt(Vec3& T, Vec3& N, Vec3& B) {
  T = normalized(T);
  N = normalized(N - dot(N, T) * T);
  B = normalized(B - dot(B, T) * T - dot(B, N) * N);
}

}  // namespace detail

/// Integrate γ' = T, T' = κN, N' = −κT + τB, B' = −τN from `init` over
/// [s0, s1] (arc-length parameter). Fixed-step RK4 with at least 1000 steps
/// per unit of s; the frame is re-orthonormalized after every step. κ must be
/// positive on the range. Every step is emitted, including the initial state.
inline std::vector<FrameSample> reconstruct(const Expr& kappa, const Expr& tau, double s0,
                                            double s1, const FrameState& init = {}) {
  if (!(s1 > s0)) throw GeomError("reconstruct: need s1 > s0");
  detail::check_orthonormal(init);
  auto kappa_at = [&](double s) {
    const double k = kappa.eval({s});
    if (!(k > 0.0))
      throw GeomError("reconstruct: curvature must be positive (got " + detail::format_double(k) +
                      " at s=" + detail::format_double(s) + ")");
    return k;
  };
  auto tau_at = [&](double s) { return tau.eval({s}); };
  kappa_at(s0);  // validate before starting

  const double span = s1 - s0;
  const int n = std::max(1, static_cast<int>(std::ceil(span * 1000.0)));
  const double h = span / n;

  auto pack = [](const Vec3& p, const Vec3& T, const Vec3& N, const Vec3& B) {
    return std::array<double, 12>{p.x, p.y, p.z, T.x, T.y, T.z, N.x, N.y, N.z, B.x, B.y, B.z};
  };
  auto vec = [](const std::array<double, 12>& y, int k) {
    return Vec3{y[3 * k], y[3 * k + 1], y[3 * k + 2]};
  };
  auto rhs = [&](double s, const std::array<double, 12>& y) {
    const double k = kappa_at(s), tv = tau_at(s);
    const Vec3 T = vec(y, 1), N = vec(y, 2), B = vec(y, 3);
    const Vec3 dT = k * N;
    const Vec3 dN = -k * T + tv * B;
    const Vec3 dB = -tv * N;
    return std::array<double, 12>{T.x,  T.y,  T.z,  dT.x, dT.y, dT.z,
                                  dN.x, dN.y, dN.z, dB.x, dB.y, dB.z};
  };

  std::vector<FrameSample> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  std::array<double, 12> y = pack(init.p, init.T, init.N, init.B);
  out.push_back({s0, init.p, init.T, init.N, init.B});
  for (int i = 0; i < n; ++i) {
    const double s = s0 + h * i;
    y = rk4_step(rhs, s, y, h);
    Vec3 T = vec(y, 1), N = vec(y, 2), B = vec(y, 3);
    detail::gram_schmidt(T, N, B);
    y = pack(vec(y, 0), T, N, B);
    out.push_back({s0 + h * (i + 1), vec(y, 0), T, N, B});
  }
  return out;
}

struct PlanarSample {
  double s = 0.0;
  double angle = 0.0;  // φ(s) = ∫ κ
  Vec3 p{};
};

/// Unit-speed planar curve with prescribed curvature:
/// φ(s) = ∫_{base}^{s} κ, γ(s) = (∫ cos φ, ∫ sin φ, 0), starting at the
/// origin with tangent (1, 0, 0) at s = base. Nested adaptive quadrature,
/// accumulated interval by interval over a uniform grid of n+1 samples.
inline std::vector<PlanarSample> planar_from_curvature(const Expr& kappa, double s0, double s1,
                                                       double base, int n = 2000) {
  if (!(s1 > s0)) throw GeomError("planar_from_curvature: need s1 > s0");
  if (base < s0 || base > s1)
    throw GeomError("planar_from_curvature: base point must lie inside the range");
  if (n < 1) throw GeomError("planar_from_curvature: need at least 1 interval");
  auto k = [&](double s) { return kappa.eval({s}); };

  std::vector<PlanarSample> out(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) out[static_cast<std::size_t>(i)].s = s0 + (s1 - s0) * i / n;

  // index of the grid point closest to base; shift it to exactly base
  int ib = static_cast<int>(std::lround((base - s0) / (s1 - s0) * n));
  ib = std::clamp(ib, 0, n);
  out[static_cast<std::size_t>(ib)] = {base, 0.0, Vec3{}};

  auto advance = [&](const PlanarSample& from, double s_to) {
    PlanarSample next;
    next.s = s_to;
    next.angle = from.angle + integrate(k, from.s, s_to, 1e-13);
    auto phi = [&](double s) { return from.angle + integrate(k, from.s, s, 1e-13); };
    next.p.x = from.p.x + integrate([&](double s) { return std::cos(phi(s)); }, from.s, s_to, 1e-13);
    next.p.y = from.p.y + integrate([&](double s) { return std::sin(phi(s)); }, from.s, s_to, 1e-13);
    next.p.z = 0.0;
    return next;
  };
  for (int i = ib + 1; i <= n; ++i)
    out[static_cast<std::size_t>(i)] =
        advance(out[static_cast<std::size_t>(i - 1)], out[static_cast<std::size_t>(i)].s);
  for (int i = ib - 1; i >= 0; --i)
    out[static_cast<std::size_t>(i)] =
        advance(out[static_cast<std::size_t>(i + 1)], out[static_cast<std::size_t>(i)].s);
  return out;
}

}  // namespace geo3
