// geo3/vec.hpp — small fixed-size linear algebra: 3-vectors over an arbitrary
// scalar ring and a plain 3x3 double matrix.
//
// Vec3T is templated on the scalar so the same dot/cross/normalize code runs
// on doubles and on Taylor jets (that is how every derivative of a normalized
// vector field in this library is obtained — see jet.hpp).
#pragma once

#include <array>
#include <cmath>

#include "geo3/error.hpp"

namespace geo3 {

template <class T>
struct Vec3T {
  T x{}, y{}, z{};

  friend Vec3T operator+(const Vec3T& a, const Vec3T& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3T operator-(const Vec3T& a, const Vec3T& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3T operator-(const Vec3T& a) { return {-a.x, -a.y, -a.z}; }
  template <class S>
  friend Vec3T operator*(const S& s, const Vec3T& a) { return {s * a.x, s * a.y, s * a.z}; }
  template <class S>
  friend Vec3T operator*(const Vec3T& a, const S& s) { return {a.x * s, a.y * s, a.z * s}; }
  template <class S>
  friend Vec3T operator/(const Vec3T& a, const S& s) { return {a.x / s, a.y / s, a.z / s}; }
  Vec3T& operator+=(const Vec3T& b) { return *this = *this + b; }
  Vec3T& operator-=(const Vec3T& b) { return *this = *this - b; }
};

using Vec3 = Vec3T<double>;

template <class T>
T dot(const Vec3T<T>& a, const Vec3T<T>& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

template <class T>
Vec3T<T> cross(const Vec3T<T>& a, const Vec3T<T>& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

template <class T>
T norm2(const Vec3T<T>& a) { return dot(a, a); }

template <class T>
T norm(const Vec3T<T>& a) {
  using std::sqrt;  // jet overloads found by ADL
  return sqrt(norm2(a));
}

template <class T>
Vec3T<T> normalized(const Vec3T<T>& a) { return a / norm(a); }

/// Scalar triple product det[a; b; c] = a · (b × c).
template <class T>
T det3(const Vec3T<T>& a, const Vec3T<T>& b, const Vec3T<T>& c) {
  return dot(a, cross(b, c));
}

// ---------------------------------------------------------------------------
// Plain double 3x3 matrix — only what the curve/alignment code needs.

struct Mat3 {
  // row-major
  std::array<std::array<double, 3>, 3> m{};

  static Mat3 identity() {
    Mat3 r;
    for (int i = 0; i < 3; ++i) r.m[i][i] = 1.0;
    return r;
  }
  /// Matrix with the given columns.
  static Mat3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
    Mat3 r;
    r.m = {{{c0.x, c1.x, c2.x}, {c0.y, c1.y, c2.y}, {c0.z, c1.z, c2.z}}};
    return r;
  }

  Vec3 operator*(const Vec3& v) const {
    return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
            m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
            m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
  }
  Mat3 operator*(const Mat3& b) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) r.m[i][j] += m[i][k] * b.m[k][j];
    return r;
  }
  Mat3 transposed() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
    return r;
  }
  Mat3& operator+=(const Mat3& b) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[i][j] += b.m[i][j];
    return *this;
  }
};

/// Outer product v wᵀ.
inline Mat3 outer(const Vec3& v, const Vec3& w) {
  Mat3 r;
  r.m = {{{v.x * w.x, v.x * w.y, v.x * w.z},
          {v.y * w.x, v.y * w.y, v.y * w.z},
          {v.z * w.x, v.z * w.y, v.z * w.z}}};
  return r;
}

/// Solve A x = b by Gaussian elimination with partial pivoting.
/// Throws GeomError on a (numerically) singular system.
inline Vec3 solve3(Mat3 A, Vec3 b) {
  std::array<double, 3> rhs{b.x, b.y, b.z};
  std::array<int, 3> perm{0, 1, 2};
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::fabs(A.m[perm[r]][col]) > std::fabs(A.m[perm[piv]][col])) piv = r;
    std::swap(perm[col], perm[piv]);
    const double p = A.m[perm[col]][col];
    if (std::fabs(p) < 1e-300) throw GeomError("singular 3x3 system");
    for (int r = col + 1; r < 3; ++r) {
      const double f = A.m[perm[r]][col] / p;
      for (int c = col; c < 3; ++c) A.m[perm[r]][c] -= f * A.m[perm[col]][c];
      rhs[perm[r]] -= f * rhs[perm[col]];
    }
  }
  std::array<double, 3> x{};
  for (int row = 2; row >= 0; --row) {
    double s = rhs[perm[row]];
    for (int c = row + 1; c < 3; ++c) s -= A.m[perm[row]][c] * x[c];
    x[row] = s / A.m[perm[row]][row];
  }
  return {x[0], x[1], x[2]};
}

}  // namespace geo3
