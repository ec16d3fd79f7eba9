// geo3/jet.hpp — truncated Taylor-jet forward automatic differentiation.
//
// Three scalar types, all carrying raw derivative values (not factorial-scaled
// Taylor coefficients), all truncated at total order 3:
//
//   Jet1  — f, f', f'', f''' with respect to one parameter.
//   Jet2  — all partials ∂^{i+j} f / ∂u^i ∂v^j with i+j ≤ 3 (10 numbers).
//   Grad3 — value plus first partials in three variables (for gradients of
//           implicit surfaces; a deliberately degenerate jet).
//
// Every elementary function is produced from one generic composition rule:
// given the first three derivatives of φ at x₀ and the jet w = x − x₀ (which
// has value 0), the truncated series φ(x₀) + φ'w + φ''w²/2 + φ'''w³/6,
// evaluated in jet arithmetic, reproduces every derivative of φ∘x up to the
// truncation order exactly. This works unchanged in one or several variables,
// so no multivariate chain-rule tables are needed.
//
// Derivative "shifts" (Jet1::shifted, Jet2::shifted_u/_v) reindex a jet to
// represent the derivative of the underlying function. The top-order slots of
// a shifted jet are unknown and set to zero, so a shifted jet is valid only to
// order 2; products and compositions of order-2-valid jets stay correct up to
// order 2, which is exactly what the normalized-frame derivatives need.
//
// Domain rule: ln and sqrt raise DomainError at (and below/at) argument 0 —
// at 0 the value may exist but the derivatives do not; abs raises at 0.
#pragma once

#include <array>
#include <cmath>
#include <concepts>
#include <cstdlib>

#include "geo3/error.hpp"
#include "geo3/vec.hpp"

namespace geo3 {

// ---------------------------------------------------------------------------
// Jet1 — one variable, value + three derivatives.

struct Jet1 {
  std::array<double, 4> c{};  // c[k] = d^k f / dt^k

  Jet1() = default;
  Jet1(double v) { c[0] = v; }  // NOLINT: implicit by design (mixed arithmetic)
  Jet1(double f, double f1, double f2, double f3) : c{f, f1, f2, f3} {}

  static Jet1 variable(double t) { return {t, 1.0, 0.0, 0.0}; }

  double value() const { return c[0]; }
  double d1() const { return c[1]; }
  double d2() const { return c[2]; }
  double d3() const { return c[3]; }
  bool is_constant() const { return c[1] == 0.0 && c[2] == 0.0 && c[3] == 0.0; }

  /// Jet of f' (valid to order 2; the third slot is unknown and zeroed).
  Jet1 shifted() const { return {c[1], c[2], c[3], 0.0}; }

  friend Jet1 operator+(const Jet1& a, const Jet1& b) {
    return {a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2], a.c[3] + b.c[3]};
  }
  friend Jet1 operator-(const Jet1& a, const Jet1& b) {
    return {a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2], a.c[3] - b.c[3]};
  }
  friend Jet1 operator-(const Jet1& a) { return {-a.c[0], -a.c[1], -a.c[2], -a.c[3]}; }
  friend Jet1 operator*(const Jet1& a, double s) {
    return {a.c[0] * s, a.c[1] * s, a.c[2] * s, a.c[3] * s};
  }
  friend Jet1 operator*(double s, const Jet1& a) { return a * s; }
  friend Jet1 operator/(const Jet1& a, double s) { return a * (1.0 / s); }

  // Leibniz: (fg)^(n) = sum_k C(n,k) f^(k) g^(n-k)
  friend Jet1 operator*(const Jet1& a, const Jet1& b) {
    return {a.c[0] * b.c[0],
            a.c[1] * b.c[0] + a.c[0] * b.c[1],
            a.c[2] * b.c[0] + 2.0 * a.c[1] * b.c[1] + a.c[0] * b.c[2],
            a.c[3] * b.c[0] + 3.0 * a.c[2] * b.c[1] + 3.0 * a.c[1] * b.c[2] + a.c[0] * b.c[3]};
  }
};

// ---------------------------------------------------------------------------
// Jet2 — two variables, all partials to total order 3.

struct Jet2 {
  // Storage order: f, fu, fv, fuu, fuv, fvv, fuuu, fuuv, fuvv, fvvv.
  std::array<double, 10> c{};

  Jet2() = default;
  Jet2(double v) { c[0] = v; }  // NOLINT: implicit by design

  /// Flat index of ∂^{i+j} / ∂u^i ∂v^j (requires i+j ≤ 3).
  static constexpr int idx(int i, int j) {
    constexpr int base[4] = {0, 1, 3, 6};
    return base[i + j] + j;
  }

  static Jet2 variable_u(double u) {
    Jet2 j(u);
    j.c[idx(1, 0)] = 1.0;
    return j;
  }
  static Jet2 variable_v(double v) {
    Jet2 j(v);
    j.c[idx(0, 1)] = 1.0;
    return j;
  }

  double value() const { return c[0]; }
  double d(int i, int j) const { return c[idx(i, j)]; }
  double du() const { return c[1]; }
  double dv() const { return c[2]; }
  double duu() const { return c[3]; }
  double duv() const { return c[4]; }
  double dvv() const { return c[5]; }
  bool is_constant() const {
    for (int k = 1; k < 10; ++k)
      if (c[k] != 0.0) return false;
    return true;
  }

  /// Jet of ∂f/∂u (valid to order 2; order-3 slots zeroed). Likewise _v.
  Jet2 shifted_u() const {
    Jet2 r;
    for (int i = 0; i + 0 <= 2; ++i)
      for (int j = 0; i + j <= 2; ++j) r.c[idx(i, j)] = c[idx(i + 1, j)];
    return r;
  }
  Jet2 shifted_v() const {
    Jet2 r;
    for (int i = 0; i + 0 <= 2; ++i)
      for (int j = 0; i + j <= 2; ++j) r.c[idx(i, j)] = c[idx(i, j + 1)];
    return r;
  }

  friend Jet2 operator+(const Jet2& a, const Jet2& b) {
    Jet2 r;
    for (int k = 0; k < 10; ++k) r.c[k] = a.c[k] + b.c[k];
    return r;
  }
  friend Jet2 operator-(const Jet2& a, const Jet2& b) {
    Jet2 r;
    for (int k = 0; k < 10; ++k) r.c[k] = a.c[k] - b.c[k];
    return r;
  }
  friend Jet2 operator-(const Jet2& a) {
    Jet2 r;
    for (int k = 0; k < 10; ++k) r.c[k] = -a.c[k];
    return r;
  }
  friend Jet2 operator*(const Jet2& a, double s) {
    Jet2 r;
    for (int k = 0; k < 10; ++k) r.c[k] = a.c[k] * s;
    return r;
  }
  friend Jet2 operator*(double s, const Jet2& a) { return a * s; }
  friend Jet2 operator/(const Jet2& a, double s) { return a * (1.0 / s); }

  // Bivariate Leibniz: (fg)_(i,j) = sum_{p<=i, q<=j} C(i,p) C(j,q) f_(p,q) g_(i-p,j-q)
  friend Jet2 operator*(const Jet2& a, const Jet2& b) {
    constexpr double binom[4][4] = {
        {1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};
    Jet2 r;
    for (int i = 0; i <= 3; ++i)
      for (int j = 0; i + j <= 3; ++j) {
        double s = 0.0;
        for (int p = 0; p <= i; ++p)
          for (int q = 0; q <= j; ++q)
            s += binom[i][p] * binom[j][q] * a.c[idx(p, q)] * b.c[idx(i - p, j - q)];
        r.c[idx(i, j)] = s;
      }
    return r;
  }
};

// ---------------------------------------------------------------------------
// Grad3 — three variables, first order only (gradients of implicit surfaces).

struct Grad3 {
  double v{};
  std::array<double, 3> g{};

  Grad3() = default;
  Grad3(double value) : v(value) {}  // NOLINT: implicit by design
  static Grad3 variable(int axis, double value) {
    Grad3 j(value);
    j.g[axis] = 1.0;
    return j;
  }

  double value() const { return v; }
  bool is_constant() const { return g[0] == 0.0 && g[1] == 0.0 && g[2] == 0.0; }

  friend Grad3 operator+(const Grad3& a, const Grad3& b) {
    return {a.v + b.v, {a.g[0] + b.g[0], a.g[1] + b.g[1], a.g[2] + b.g[2]}};
  }
  friend Grad3 operator-(const Grad3& a, const Grad3& b) {
    return {a.v - b.v, {a.g[0] - b.g[0], a.g[1] - b.g[1], a.g[2] - b.g[2]}};
  }
  friend Grad3 operator-(const Grad3& a) { return {-a.v, {-a.g[0], -a.g[1], -a.g[2]}}; }
  friend Grad3 operator*(const Grad3& a, double s) {
    return {a.v * s, {a.g[0] * s, a.g[1] * s, a.g[2] * s}};
  }
  friend Grad3 operator*(double s, const Grad3& a) { return a * s; }
  friend Grad3 operator/(const Grad3& a, double s) { return a * (1.0 / s); }
  friend Grad3 operator*(const Grad3& a, const Grad3& b) {
    return {a.v * b.v,
            {a.v * b.g[0] + b.v * a.g[0], a.v * b.g[1] + b.v * a.g[1],
             a.v * b.g[2] + b.v * a.g[2]}};
  }

 private:
  Grad3(double value, std::array<double, 3> grad) : v(value), g(grad) {}
};

// ---------------------------------------------------------------------------
// Shared machinery.

template <class J>
concept JetScalar = requires(const J& j) {
  { j.value() } -> std::convertible_to<double>;
  { j.is_constant() } -> std::convertible_to<bool>;
  { j + j } -> std::convertible_to<J>;
  { j* j } -> std::convertible_to<J>;
};

/// Truncated-series composition: derivatives of φ∘x from φ's derivatives at
/// x.value(). Exact for every coefficient the jet type carries.
template <JetScalar J>
J jet_compose(const J& x, double f0, double f1, double f2, double f3) {
  const J w = x - J(x.value());  // perturbation part, value 0
  const J w2 = w * w;
  return J(f0) + w * f1 + w2 * (f2 / 2.0) + (w2 * w) * (f3 / 6.0);
}

template <JetScalar J>
J sin(const J& x) {
  const double u = x.value();
  return jet_compose(x, std::sin(u), std::cos(u), -std::sin(u), -std::cos(u));
}
template <JetScalar J>
J cos(const J& x) {
  const double u = x.value();
  return jet_compose(x, std::cos(u), -std::sin(u), -std::cos(u), std::sin(u));
}
template <JetScalar J>
J tan(const J& x) {
  const double u = x.value();
  if (std::cos(u) == 0.0) throw DomainError("tan at a pole");
  const double w = std::tan(u), s = 1.0 + w * w;
  return jet_compose(x, w, s, 2.0 * w * s, (2.0 + 6.0 * w * w) * s);
}
template <JetScalar J>
J sinh(const J& x) {
  const double u = x.value();
  return jet_compose(x, std::sinh(u), std::cosh(u), std::sinh(u), std::cosh(u));
}
template <JetScalar J>
J cosh(const J& x) {
  const double u = x.value();
  return jet_compose(x, std::cosh(u), std::sinh(u), std::cosh(u), std::sinh(u));
}
template <JetScalar J>
J tanh(const J& x) {
  const double w = std::tanh(x.value()), s = 1.0 - w * w;
  return jet_compose(x, w, s, -2.0 * w * s, (6.0 * w * w - 2.0) * s);
}
template <JetScalar J>
J exp(const J& x) {
  const double e = std::exp(x.value());
  return jet_compose(x, e, e, e, e);
}
template <JetScalar J>
J log(const J& x) {
  const double u = x.value();
  if (u <= 0.0) throw DomainError("ln of a non-positive value");
  const double r = 1.0 / u;
  return jet_compose(x, std::log(u), r, -r * r, 2.0 * r * r * r);
}
template <JetScalar J>
J sqrt(const J& x) {
  const double u = x.value();
  if (u <= 0.0) throw DomainError("sqrt of a non-positive value (derivative undefined at 0)");
  const double r = std::sqrt(u);
  return jet_compose(x, r, 0.5 / r, -0.25 / (u * r), 0.375 / (u * u * r));
}
template <JetScalar J>
J atan(const J& x) {
  const double u = x.value(), d = 1.0 / (1.0 + u * u);
  return jet_compose(x, std::atan(u), d, -2.0 * u * d * d, (6.0 * u * u - 2.0) * d * d * d);
}
template <JetScalar J>
J abs(const J& x) {
  const double u = x.value();
  if (u == 0.0) throw DomainError("abs is not differentiable at 0");
  const double s = u > 0.0 ? 1.0 : -1.0;
  return jet_compose(x, std::fabs(u), s, 0.0, 0.0);
}

/// Reciprocal via composition with 1/x.
template <JetScalar J>
J jet_recip(const J& x) {
  const double u = x.value();
  if (u == 0.0) throw DomainError("division by zero");
  const double r = 1.0 / u;
  return jet_compose(x, r, -r * r, 2.0 * r * r * r, -6.0 * r * r * r * r);
}

template <JetScalar J>
J operator/(const J& a, const J& b) {
  return a * jet_recip(b);
}
template <JetScalar J>
J operator/(double a, const J& b) {
  return J(a) * jet_recip(b);
}

/// Integer power by binary exponentiation (valid for any base, unlike exp∘ln).
template <JetScalar J>
J jet_ipow(const J& x, long n) {
  if (n < 0) return jet_recip(jet_ipow(x, -n));
  J result(1.0);
  J base = x;
  for (; n > 0; n >>= 1) {
    if (n & 1) result = result * base;
    base = base * base;
  }
  return result;
}

// --- helpers shared with Expr evaluation over mixed scalar kinds -----------

template <class T>
inline constexpr bool is_jet_scalar_v = JetScalar<T>;

inline double scalar_value(double x) { return x; }
inline double scalar_value(long double x) { return static_cast<double>(x); }
template <JetScalar J>
double scalar_value(const J& j) {
  return j.value();
}

inline bool scalar_is_constant(double) { return true; }
inline bool scalar_is_constant(long double) { return true; }
template <JetScalar J>
bool scalar_is_constant(const J& j) {
  return j.is_constant();
}

// --- vector-of-jet views ----------------------------------------------------

/// k-th derivative vector of a curve evaluated in Jet1 coordinates.
inline Vec3 jet_order(const Vec3T<Jet1>& v, int k) {
  return {v.x.c[k], v.y.c[k], v.z.c[k]};
}

/// Partial-derivative vector ∂^{i+j}/∂u^i∂v^j of a Jet2-valued vector.
inline Vec3 jet_part(const Vec3T<Jet2>& v, int i, int j) {
  const int k = Jet2::idx(i, j);
  return {v.x.c[k], v.y.c[k], v.z.c[k]};
}

inline Vec3T<Jet1> shifted(const Vec3T<Jet1>& v) {
  return {v.x.shifted(), v.y.shifted(), v.z.shifted()};
}
inline Vec3T<Jet2> shifted_u(const Vec3T<Jet2>& v) {
  return {v.x.shifted_u(), v.y.shifted_u(), v.z.shifted_u()};
}
inline Vec3T<Jet2> shifted_v(const Vec3T<Jet2>& v) {
  return {v.x.shifted_v(), v.y.shifted_v(), v.z.shifted_v()};
}

}  // namespace geo3
