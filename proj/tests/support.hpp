// tests/support.hpp — shared fixtures for the Catch2 suites: deterministic
// RNG, long-double model evaluation hooked to the FD oracle in fd.hpp, and
// the stock of curve instances the frame tests sweep.
#pragma once

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fd.hpp"
#include "geo3/geo3.hpp"

namespace support {

using fd::ld;
using geo3::CurveModel;
using geo3::Vec3;
using geo3::Vec3T;

/// Every randomized test seeds its own engine so failures reproduce.
inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64{seed}; }

inline Vec3 to_double(const Vec3T<ld>& v) {
  return {static_cast<double>(v.x), static_cast<double>(v.y), static_cast<double>(v.z)};
}

/// γ evaluated in long double, as the FD oracle's sampling function.
inline auto curve_ld(const CurveModel& m) {
  return [&m](ld t) { return m.at<ld>(t); };
}

/// Oracle derivatives of γ at t: first three derivatives by fd:: stencils.
struct OracleDerivs {
  Vec3 d1, d2, d3;
};

inline OracleDerivs oracle_derivs(const CurveModel& m, double t) {
  auto f = curve_ld(m);
  return {to_double(fd::d1(f, t)), to_double(fd::d2(f, t)), to_double(fd::d3(f, t))};
}

/// Curves the Frenet-apparatus sweeps run over: everything in the standard
/// catalog with a defined frame (the straight line has none), plus extra
/// parameter choices of the same families.
inline std::vector<CurveModel> frame_test_curves() {
  namespace cat = geo3::catalog;
  std::vector<CurveModel> out;
  for (double r : {0.5, 1.0, 2.0, 5.0}) out.push_back(cat::circle(r).curve.value());
  out.push_back(cat::ellipse(2.0, 1.0).curve.value());
  out.push_back(cat::ellipse(3.0, 0.5).curve.value());
  out.push_back(cat::helix(1.0, 1.0).curve.value());
  out.push_back(cat::helix(2.0, 0.5).curve.value());
  out.push_back(cat::helix(0.5, 3.0).curve.value());
  out.push_back(cat::log_spiral().curve.value());
  return out;
}

/// Interior sample positions, avoiding the exact interval ends (FD stencils
/// reach ±3h beyond the evaluation point).
inline std::vector<double> interior_points(double a, double b, int n) {
  std::vector<double> ts(n);
  for (int i = 0; i < n; ++i) ts[i] = a + (b - a) * (i + 0.5) / n;
  return ts;
}

}  // namespace support
