// geo3/geodesic.hpp — geometry of curves lying on a surface: geodesic
// curvature (extrinsic and intrinsic forms), geodesic tracing by the ODE
// u''^k = −Γ^k_ij u'^i u'^j, and geodesic verification.
//
// The two κ_g routes are deliberately independent: the extrinsic one works
// through the ambient curve γ(t) = x(u(t), v(t)) and the surface normal,
// κ_g = det(n, γ', γ'')/‖γ'‖³; the intrinsic one uses only E, F, G and the
// Christoffel symbols. Their agreement is a checked property, not an
// implementation shortcut.
#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "geo3/error.hpp"
#include "geo3/expr.hpp"
#include "geo3/models.hpp"
#include "geo3/ode.hpp"
#include "geo3/surface.hpp"
#include "geo3/vec.hpp"

namespace geo3 {

/// A curve in the parameter plane of a surface: t ↦ x(u(t), v(t)).
struct ParamCurve {
  SurfaceModel surface;
  Expr u, v;  // over the variable t
  double t0 = 0.0, t1 = 1.0;

  std::pair<double, double> params_at(double t) const { return {u.eval({t}), v.eval({t})}; }
};

/// Build a ParamCurve, checking that (u(t), v(t)) stays inside the surface
/// domain at uniformly spaced samples.
inline ParamCurve param_curve(SurfaceModel surface, Expr u, Expr v, double t0, double t1,
                              int validation_samples = 33) {
  if (!(t1 > t0)) throw GeomError("param_curve: need t1 > t0");
  ParamCurve pc{std::move(surface), std::move(u), std::move(v), t0, t1};
  const double pad = 1e-9;
  for (int i = 0; i < validation_samples; ++i) {
    const double t = t0 + (t1 - t0) * i / (validation_samples - 1);
    const auto [uu, vv] = pc.params_at(t);
    if (uu < pc.surface.u0 - pad || uu > pc.surface.u1 + pad || vv < pc.surface.v0 - pad ||
        vv > pc.surface.v1 + pad)
      throw GeomError("param_curve: (u, v) leaves the surface domain at t=" +
                      detail::format_double(t));
  }
  return pc;
}

/// γ, γ', γ'' of the ambient curve t ↦ x(u(t), v(t)), plus the parameter
/// derivatives, all by jet composition (chain rule handled by arithmetic).
struct AmbientDerivs {
  Vec3 p, d1, d2;
  double u, v, du, dv, ddu, ddv;
};

inline AmbientDerivs ambient_derivs(const ParamCurve& pc, double t) {
  const Jet1 arg = Jet1::variable(t);
  const std::span<const Jet1> one(&arg, 1);
  const Jet1 uj = pc.u.eval(one), vj = pc.v.eval(one);
  const Vec3T<Jet1> g = pc.surface.at(uj, vj);
  return {jet_order(g, 0), jet_order(g, 1), jet_order(g, 2),
          uj.value(),      vj.value(),      uj.d1(),
          vj.d1(),         uj.d2(),         vj.d2()};
}

/// κ_g = det(n, γ', γ'')/‖γ'‖³ (parametrization-free form).
inline double geodesic_curvature(const ParamCurve& pc, double t) {
  const AmbientDerivs a = ambient_derivs(pc, t);
  const double speed = norm(a.d1);
  if (speed <= kSpeedEps)
    throw GeomError("geodesic curvature undefined: zero speed at t=" + detail::format_double(t));
  const Vec3 n = gauss_map(pc.surface, a.u, a.v);
  return det3(n, a.d1, a.d2) / (speed * speed * speed);
}

/// κ_g from E, F, G and the Christoffel symbols only:
///   κ_g = √(EG−F²) · [ (u'v'' − v'u'') + u'·Q² − v'·Q¹ ],
///   Q^k = Γ^k₁₁u'² + 2Γ^k₁₂u'v' + Γ^k₂₂v'²,
/// with ' the arc-length derivative (the curve is renormalized internally).
inline double intrinsic_geodesic_curvature(const ParamCurve& pc, double t) {
  const AmbientDerivs a = ambient_derivs(pc, t);
  const SurfaceJet j = surface_jets(pc.surface, a.u, a.v);
  const FirstForm I = first_form(j);
  if (I.det() <= 0.0) throw GeomError("intrinsic geodesic curvature at an irregular point");
  const Christoffel c = christoffel(j);
  const auto [E_u, E_v, F_u, F_v, G_u, G_v] = metric_derivs(j);

  const double w2 = I.apply(a.du, a.dv);
  if (w2 <= kSpeedEps * kSpeedEps)
    throw GeomError("geodesic curvature undefined: zero speed at t=" + detail::format_double(t));
  const double w = std::sqrt(w2);
  // d/dt of w² = I(u̇, v̇) along the curve
  const double Edot = E_u * a.du + E_v * a.dv;
  const double Fdot = F_u * a.du + F_v * a.dv;
  const double Gdot = G_u * a.du + G_v * a.dv;
  const double dw2 = Edot * a.du * a.du + 2.0 * Fdot * a.du * a.dv + Gdot * a.dv * a.dv +
                     2.0 * I.E * a.du * a.ddu + 2.0 * I.F * (a.ddu * a.dv + a.du * a.ddv) +
                     2.0 * I.G * a.dv * a.ddv;
  const double wdot = dw2 / (2.0 * w);
  // arc-length derivatives
  const double up = a.du / w, vp = a.dv / w;
  const double upp = (a.ddu * w - a.du * wdot) / (w2 * w);
  const double vpp = (a.ddv * w - a.dv * wdot) / (w2 * w);

  const double Q1 = c.g1_11 * up * up + 2.0 * c.g1_12 * up * vp + c.g1_22 * vp * vp;
  const double Q2 = c.g2_11 * up * up + 2.0 * c.g2_12 * up * vp + c.g2_22 * vp * vp;
  return std::sqrt(I.det()) * ((up * vpp - vp * upp) + up * Q2 - vp * Q1);
}

/// Parameter position and velocity of a geodesic integration state.
struct GeodesicState {
  double u = 0.0, v = 0.0;
  double du = 0.0, dv = 0.0;
};

/// Raised when a traced trajectory leaves the parameter domain.
struct DomainExitError : GeomError {
  DomainExitError(double u, double v, double s)
      : GeomError("geodesic left the parameter domain at (u, v) = (" + detail::format_double(u) +
                  ", " + detail::format_double(v) + "), arc length " + detail::format_double(s)),
        exit_u(u),
        exit_v(v),
        arc_length(s) {}
  double exit_u, exit_v, arc_length;
};

struct GeodesicTrace {
  std::vector<double> s;                  // arc length at each sample
  std::vector<GeodesicState> states;      // one per sample, velocity unit in I
  double max_energy_drift = 0.0;          // max |I(u',v') − 1| before renormalizing
};

/// Integrate the geodesic ODE from `init` for the given arc length. Fixed-step
/// RK4 with at least `min_steps` steps (step ≤ length/2000 by default); the
/// velocity is renormalized to unit length in the first fundamental form after
/// every step. Every step is emitted.
inline GeodesicTrace trace_geodesic(const SurfaceModel& s, GeodesicState init, double length,
                                    int min_steps = 2000) {
  if (!(length > 0.0)) throw GeomError("trace_geodesic: need positive length");
  if (min_steps < 1) throw GeomError("trace_geodesic: need at least 1 step");
  {
    const FirstForm I = first_form(s, init.u, init.v);
    const double q2 = I.apply(init.du, init.dv);
    if (!(q2 > 0.0)) throw GeomError("trace_geodesic: initial velocity must be nonzero");
    const double q = std::sqrt(q2);
    init.du /= q;
    init.dv /= q;
  }
  auto in_domain = [&](double u, double v) {
    return u >= s.u0 && u <= s.u1 && v >= s.v0 && v <= s.v1;
  };
  if (!in_domain(init.u, init.v)) throw DomainExitError(init.u, init.v, 0.0);

  auto rhs = [&](double, const std::array<double, 4>& y) {
    const Christoffel c = christoffel(s, y[0], y[1]);
    const double du = y[2], dv = y[3];
    return std::array<double, 4>{
        du, dv, -(c.g1_11 * du * du + 2.0 * c.g1_12 * du * dv + c.g1_22 * dv * dv),
        -(c.g2_11 * du * du + 2.0 * c.g2_12 * du * dv + c.g2_22 * dv * dv)};
  };

  const int n = min_steps;
  const double h = length / n;
  GeodesicTrace out;
  out.s.reserve(static_cast<std::size_t>(n) + 1);
  out.states.reserve(static_cast<std::size_t>(n) + 1);
  std::array<double, 4> y{init.u, init.v, init.du, init.dv};
  out.s.push_back(0.0);
  out.states.push_back(init);
  for (int i = 0; i < n; ++i) {
    const double s_now = h * i;
    y = rk4_step(rhs, s_now, y, h);
    if (!in_domain(y[0], y[1])) throw DomainExitError(y[0], y[1], s_now + h);
    const FirstForm I = first_form(s, y[0], y[1]);
    const double q2 = I.apply(y[2], y[3]);
    out.max_energy_drift = std::max(out.max_energy_drift, std::fabs(q2 - 1.0));
    const double q = std::sqrt(q2);
    y[2] /= q;
    y[3] /= q;
    out.s.push_back(s_now + h);
    out.states.push_back({y[0], y[1], y[2], y[3]});
  }
  return out;
}

struct GeodesicReport {
  bool geodesic = false;
  double max_abs_kg = 0.0;
  double threshold = 0.0;  // 1e−6·(1 + largest principal curvature magnitude)
};

/// max |κ_g| over interior samples, flagged against a tolerance scaled by the
/// largest principal curvature encountered (the inverse feature scale).
inline GeodesicReport is_geodesic(const ParamCurve& pc, int samples) {
  if (samples < 2) throw GeomError("is_geodesic needs at least 2 samples");
  GeodesicReport rep;
  double max_principal = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double t = pc.t0 + (pc.t1 - pc.t0) * (i + 0.5) / samples;
    rep.max_abs_kg = std::max(rep.max_abs_kg, std::fabs(geodesic_curvature(pc, t)));
    const auto [uu, vv] = pc.params_at(t);
    const FormBundle b = shape_and_curvatures(pc.surface, uu, vv);
    max_principal = std::max({max_principal, std::fabs(b.kappa1), std::fabs(b.kappa2)});
  }
  rep.threshold = 1e-6 * (1.0 + max_principal);
  rep.geodesic = rep.max_abs_kg <= rep.threshold;
  return rep;
}

}  // namespace geo3
