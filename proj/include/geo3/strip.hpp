// geo3/strip.hpp — framed curves: a curve together with a unit normal field
// orthogonal to its tangent. Carries the strip invariants (normal curvature,
// geodesic curvature, strip torsion), frame rotation, and parallel
// (rotation-minimizing) normal fields.
//
// Axis convention for the invariants: with unit tangent T and the arc-length
// derivative ', using B := N×T,
//   κ_n = T'·N,   κ_g = T'·B,   τ_strip = N'·B.
// Rotating the normal field by Ñ = cos φ·N + sin φ·B then shifts the strip
// torsion by exactly dφ/ds, and a parallel field is one with τ_strip ≡ 0.
// The adapted frame returned for display is the right-handed (T, N, T×N).
#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "geo3/curve.hpp"
#include "geo3/error.hpp"
#include "geo3/expr.hpp"
#include "geo3/models.hpp"
#include "geo3/ode.hpp"
#include "geo3/vec.hpp"

namespace geo3 {

struct Strip {
  CurveModel curve;
  Expr nx, ny, nz;  // unit normal field over t, orthogonal to γ'

  template <class T>
  Vec3T<T> normal_at(const T& t) const {
    const std::span<const T> args(&t, 1);
    return {nx.eval(args), ny.eval(args), nz.eval(args)};
  }
};

namespace detail {

inline void check_strip_point(const Strip& s, double t, double tol = 1e-8) {
  const Vec3 n = s.normal_at<double>(t);
  if (std::fabs(norm(n) - 1.0) > tol)
    throw GeomError("strip normal is not unit length at t=" + format_double(t));
  const Vec3 d1 = jet_order(s.curve.jets(t), 1);
  const double speed = norm(d1);
  if (speed <= kSpeedEps)
    throw GeomError("strip curve has zero speed at t=" + format_double(t));
  if (std::fabs(dot(n, d1)) / speed > tol)
    throw GeomError("strip normal is not orthogonal to the tangent at t=" + format_double(t));
}

}  // namespace detail

/// Build a strip, validating ‖N‖=1 and N ⊥ γ' at uniformly spaced samples.
inline Strip make_strip(CurveModel curve, Expr nx, Expr ny, Expr nz,
                        int validation_samples = 33) {
  Strip s{std::move(curve), std::move(nx), std::move(ny), std::move(nz)};
  for (int i = 0; i < validation_samples; ++i) {
    const double t = s.curve.t0 + (s.curve.t1 - s.curve.t0) * i / (validation_samples - 1);
    detail::check_strip_point(s, t);
  }
  return s;
}

/// The right-handed frame (T, N, T×N) at t.
inline FrameState adapted_frame(const Strip& s, double t) {
  detail::check_strip_point(s, t);
  const Vec3T<Jet1> j = s.curve.jets(t);
  const Vec3 T = normalized(jet_order(j, 1));
  const Vec3 N = s.normal_at<double>(t);
  return {jet_order(j, 0), T, N, cross(T, N)};
}

struct StripInvariants {
  double kappa_n = 0.0;    // T'·N
  double kappa_g = 0.0;    // T'·(N×T)
  double tau_strip = 0.0;  // N'·(N×T)
};

/// The three strip invariants at t, with derivatives taken per arc length.
inline StripInvariants strip_invariants(const Strip& s, double t) {
  const Vec3T<Jet1> j = s.curve.jets(t);
  const double speed = norm(jet_order(j, 1));
  if (speed <= kSpeedEps)
    throw GeomError("strip invariants undefined: zero speed at t=" + detail::format_double(t));
  const Vec3T<Jet1> tj = normalized(shifted(j));  // unit tangent as a jet
  const Vec3 T = jet_order(tj, 0);
  const Vec3 Tp = jet_order(tj, 1) / speed;  // dT/ds
  const Vec3T<Jet1> nj = s.normal_at(Jet1::variable(t));
  const Vec3 N = jet_order(nj, 0);
  const Vec3 Np = jet_order(nj, 1) / speed;  // dN/ds
  const Vec3 B = cross(N, T);
  return {dot(Tp, N), dot(Tp, B), dot(Np, B)};
}

/// New strip with the normal field rotated in the normal plane:
/// Ñ = cos φ·N + sin φ·B with B = N×T. φ is an expression in t.
inline Strip rotate_frame(const Strip& s, const Expr& phi) {
  // T = γ'/‖γ'‖ as expressions
  const Expr dx = derivative(s.curve.x, "t");
  const Expr dy = derivative(s.curve.y, "t");
  const Expr dz = derivative(s.curve.z, "t");
  const Expr speed = sqrt(dx * dx + dy * dy + dz * dz);
  const Expr Tx = dx / speed, Ty = dy / speed, Tz = dz / speed;

  // B = N×T
  const Expr Bx = s.ny * Tz - s.nz * Ty;
  const Expr By = s.nz * Tx - s.nx * Tz;
  const Expr Bz = s.nx * Ty - s.ny * Tx;

  const Expr c = cos(phi), sn = sin(phi);
  CurveModel curve = s.curve;
  curve.label = s.curve.label.empty() ? "rotated strip" : s.curve.label + " (rotated)";
  return make_strip(std::move(curve), c * s.nx + sn * Bx, c * s.ny + sn * By,
                    c * s.nz + sn * Bz);
}

struct ParallelSampleN {
  double t = 0.0;
  double phi = 0.0;  // rotation angle relative to the input field
  Vec3 normal{};
};

/// Rotation-minimizing normal field: solve dφ/dt = −τ_strip(t)·‖γ'(t)‖ by RK4
/// from φ(t_a) = phi0 and return the rotated field at every step. The
/// resulting field has strip torsion ≈ 0.
inline std::vector<ParallelSampleN> parallel_normal_field(const Strip& s, double t_a, double t_b,
                                                          double phi0 = 0.0,
                                                          int steps_per_unit = 1000) {
  if (!(t_b > t_a)) throw GeomError("parallel_normal_field: need t_b > t_a");
  const int n = std::max(16, static_cast<int>(std::ceil((t_b - t_a) * steps_per_unit)));
  const double h = (t_b - t_a) / n;

  auto rhs = [&](double t, const std::array<double, 1>&) {
    const double speed = norm(jet_order(s.curve.jets(t), 1));
    return std::array<double, 1>{-strip_invariants(s, t).tau_strip * speed};
  };
  auto rotated = [&](double t, double phi) {
    const FrameState f = adapted_frame(s, t);
    const Vec3 B = cross(f.N, f.T);
    return std::cos(phi) * f.N + std::sin(phi) * B;
  };

  std::vector<ParallelSampleN> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  std::array<double, 1> y{phi0};
  out.push_back({t_a, phi0, rotated(t_a, phi0)});
  for (int i = 0; i < n; ++i) {
    const double t = t_a + h * i;
    y = rk4_step(rhs, t, y, h);
    out.push_back({t + h, y[0], rotated(t + h, y[0])});
  }
  return out;
}

}  // namespace geo3
