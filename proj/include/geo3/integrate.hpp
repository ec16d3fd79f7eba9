// geo3/integrate.hpp — adaptive Simpson quadrature with Richardson
// extrapolation. Good to ~1e-12 on smooth integrands; the default absolute
// tolerance is 1e-10.
#pragma once

#include <cmath>
#include <utility>

#include "geo3/error.hpp"

namespace geo3 {

namespace detail {

template <class F>
double checked_eval(F& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) throw DomainError("non-finite integrand value");
  return y;
}

template <class F>
double simpson_rec(F& f, double a, double b, double fa, double fm, double fb, double whole,
                   double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = checked_eval(f, lm), frm = checked_eval(f, rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// ∫_a^b f, to the given absolute tolerance (recursion depth capped at 40).
template <class F>
double integrate(F&& f, double a, double b, double abs_tol = 1e-10) {
  if (a == b) return 0.0;
  double sign = 1.0;
  if (a > b) {
    std::swap(a, b);
    sign = -1.0;
  }
  const double m = 0.5 * (a + b);
  const double fa = detail::checked_eval(f, a);
  const double fm = detail::checked_eval(f, m);
  const double fb = detail::checked_eval(f, b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return sign * detail::simpson_rec(f, a, b, fa, fm, fb, whole, abs_tol, 40);
}

}  // namespace geo3
