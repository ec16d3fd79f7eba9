// geo3/surface.hpp — pointwise differential geometry of parametrized
// surfaces: fundamental forms, shape operator and curvatures, point
// classification, Christoffel symbols, the structure-equation residuals
// (Gauss–Weingarten, Koszul), intrinsic Gaussian curvature (Brioschi), normal
// identities for parallel surfaces, circle-of-curvature checks for normal
// sections, and implicit (level-set) surfaces.
//
// Orientation: the unit normal is always n = x_u×x_v/‖x_u×x_v‖; e, f, g, H,
// κ1, κ2 flip sign with orientation, K does not. n_u and n_v come from
// differentiating the normalized cross product through second-order jets —
// never from finite differences — so residual checks isolate formula errors.
#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "geo3/error.hpp"
#include "geo3/expr.hpp"
#include "geo3/models.hpp"
#include "geo3/vec.hpp"

namespace geo3 {

inline constexpr double kSurfaceEps = 1e-9;  // ‖x_u×x_v‖ below this is singular

struct SurfaceJet {
  Vec3 x, x_u, x_v, x_uu, x_uv, x_vv;
  Vec3 x_uuu, x_uuv, x_uvv, x_vvv;
};

/// All partial derivatives of the chart through order 3 at (u, v).
inline SurfaceJet surface_jets(const SurfaceModel& s, double u, double v) {
  const Vec3T<Jet2> j = s.jets(u, v);
  SurfaceJet out;
  out.x = jet_part(j, 0, 0);
  out.x_u = jet_part(j, 1, 0);
  out.x_v = jet_part(j, 0, 1);
  out.x_uu = jet_part(j, 2, 0);
  out.x_uv = jet_part(j, 1, 1);
  out.x_vv = jet_part(j, 0, 2);
  out.x_uuu = jet_part(j, 3, 0);
  out.x_uuv = jet_part(j, 2, 1);
  out.x_uvv = jet_part(j, 1, 2);
  out.x_vvv = jet_part(j, 0, 3);
  return out;
}

struct NormalJet {
  Vec3 n, n_u, n_v;
};

/// Unit normal and its parameter derivatives, by differentiating
/// x_u×x_v/‖x_u×x_v‖ in jet arithmetic.
inline NormalJet normal_jets(const SurfaceModel& s, double u, double v) {
  const Vec3T<Jet2> j = s.jets(u, v);
  const Vec3T<Jet2> cu = shifted_u(j), cv = shifted_v(j);
  const Vec3T<Jet2> cr = cross(cu, cv);
  const Jet2 len2 = dot(cr, cr);
  if (std::sqrt(len2.value()) <= kSurfaceEps)
    throw GeomError("irregular surface point at (u, v) = (" + detail::format_double(u) + ", " +
                    detail::format_double(v) + ")");
  const Vec3T<Jet2> n = cr / sqrt(len2);
  return {jet_part(n, 0, 0), jet_part(n, 1, 0), jet_part(n, 0, 1)};
}

/// n = x_u×x_v/‖x_u×x_v‖.
inline Vec3 gauss_map(const SurfaceModel& s, double u, double v) {
  const SurfaceJet j = surface_jets(s, u, v);
  const Vec3 cr = cross(j.x_u, j.x_v);
  const double len = norm(cr);
  if (len <= kSurfaceEps)
    throw GeomError("irregular surface point at (u, v) = (" + detail::format_double(u) + ", " +
                    detail::format_double(v) + ")");
  return cr / len;
}

struct SurfaceRegularity {
  bool regular = false;
  double min_cross_norm = 0.0;
  double worst_u = 0.0, worst_v = 0.0;
  std::vector<std::string> notes;
};

/// Minimum of ‖x_u×x_v‖ over an inclusive nu×nv grid.
inline SurfaceRegularity is_regular_surface(const SurfaceModel& s, int nu, int nv) {
  if (nu < 2 || nv < 2) throw GeomError("regularity grid must be at least 2x2");
  SurfaceRegularity r;
  r.min_cross_norm = std::numeric_limits<double>::infinity();
  for (int i = 0; i < nu; ++i)
    for (int k = 0; k < nv; ++k) {
      const double u = s.u0 + (s.u1 - s.u0) * i / (nu - 1);
      const double v = s.v0 + (s.v1 - s.v0) * k / (nv - 1);
      try {
        const Vec3T<Jet2> j = s.jets(u, v);
        const double cn = norm(cross(jet_part(j, 1, 0), jet_part(j, 0, 1)));
        if (cn < r.min_cross_norm) {
          r.min_cross_norm = cn;
          r.worst_u = u;
          r.worst_v = v;
        }
      } catch (const DomainError& e) {
        r.notes.push_back("(u, v) = (" + detail::format_double(u) + ", " +
                          detail::format_double(v) + "): " + e.what());
      }
    }
  if (!std::isfinite(r.min_cross_norm)) throw GeomError("no grid point could be evaluated");
  r.regular = r.min_cross_norm >= kSurfaceEps;
  return r;
}

struct TangentPlane {
  Vec3 point, normal;   // implicit form
  Vec3 span_u, span_v;  // parametric form: point + a·span_u + b·span_v
};

inline TangentPlane tangent_plane(const SurfaceModel& s, double u0, double v0) {
  const SurfaceJet j = surface_jets(s, u0, v0);
  const Vec3 cr = cross(j.x_u, j.x_v);
  const double len = norm(cr);
  if (len <= kSurfaceEps) throw GeomError("tangent plane undefined at an irregular point");
  return {j.x, cr / len, j.x_u, j.x_v};
}

struct FirstForm {
  double E = 0.0, F = 0.0, G = 0.0;
  double det() const { return E * G - F * F; }
  double apply(double du, double dv) const { return E * du * du + 2.0 * F * du * dv + G * dv * dv; }
};
struct SecondForm {
  double e = 0.0, f = 0.0, g = 0.0;
  double det() const { return e * g - f * f; }
  double apply(double du, double dv) const { return e * du * du + 2.0 * f * du * dv + g * dv * dv; }
};

inline FirstForm first_form(const SurfaceJet& j) {
  return {dot(j.x_u, j.x_u), dot(j.x_u, j.x_v), dot(j.x_v, j.x_v)};
}
inline FirstForm first_form(const SurfaceModel& s, double u, double v) {
  return first_form(surface_jets(s, u, v));
}
inline SecondForm second_form(const SurfaceJet& j, const Vec3& n) {
  return {dot(j.x_uu, n), dot(j.x_uv, n), dot(j.x_vv, n)};
}
inline SecondForm second_form(const SurfaceModel& s, double u, double v) {
  return second_form(surface_jets(s, u, v), gauss_map(s, u, v));
}

/// Angle between the coordinate curves: θ = atan2(√(EG−F²), F) ∈ (0, π).
inline double parametric_angle(const SurfaceModel& s, double u, double v) {
  const FirstForm I = first_form(s, u, v);
  if (I.det() <= 0.0) throw GeomError("parametric angle undefined at an irregular point");
  return std::atan2(std::sqrt(I.det()), I.F);
}

/// The six Christoffel symbols of the second kind.
struct Christoffel {
  double g1_11 = 0.0, g2_11 = 0.0;  // Γ¹₁₁, Γ²₁₁
  double g1_12 = 0.0, g2_12 = 0.0;  // Γ¹₁₂ = Γ¹₂₁, Γ²₁₂ = Γ²₂₁
  double g1_22 = 0.0, g2_22 = 0.0;  // Γ¹₂₂, Γ²₂₂
  /// Γ^k_ij with i,j,k ∈ {1,2}.
  double at(int k, int i, int j) const {
    const int lower = i + j;  // 2, 3, or 4
    if (lower == 2) return k == 1 ? g1_11 : g2_11;
    if (lower == 3) return k == 1 ? g1_12 : g2_12;
    return k == 1 ? g1_22 : g2_22;
  }
};

/// First parameter derivatives of E, F, G, assembled from dot products of the
/// chart's jet (no finite differences).
struct MetricDerivs {
  double E_u, E_v, F_u, F_v, G_u, G_v;
};
inline MetricDerivs metric_derivs(const SurfaceJet& j) {
  return {2.0 * dot(j.x_u, j.x_uu),
          2.0 * dot(j.x_u, j.x_uv),
          dot(j.x_uu, j.x_v) + dot(j.x_u, j.x_uv),
          dot(j.x_uv, j.x_v) + dot(j.x_u, j.x_vv),
          2.0 * dot(j.x_v, j.x_uv),
          2.0 * dot(j.x_v, j.x_vv)};
}

inline Christoffel christoffel(const SurfaceJet& j) {
  const FirstForm I = first_form(j);
  const double W = I.det();
  if (W <= 0.0) throw GeomError("Christoffel symbols undefined at an irregular point");
  const auto [E_u, E_v, F_u, F_v, G_u, G_v] = metric_derivs(j);
  const double E = I.E, F = I.F, G = I.G;
  Christoffel c;
  c.g1_11 = (G * E_u - 2.0 * F * F_u + F * E_v) / (2.0 * W);
  c.g2_11 = (2.0 * E * F_u - E * E_v - F * E_u) / (2.0 * W);
  c.g1_12 = (G * E_v - F * G_u) / (2.0 * W);
  c.g2_12 = (E * G_u - F * E_v) / (2.0 * W);
  c.g1_22 = (2.0 * G * F_v - G * G_u - F * G_v) / (2.0 * W);
  c.g2_22 = (E * G_v - 2.0 * F * F_v + F * G_u) / (2.0 * W);
  return c;
}
inline Christoffel christoffel(const SurfaceModel& s, double u, double v) {
  return christoffel(surface_jets(s, u, v));
}

/// max |Σ_m g_km Γ^m_ij − ½(∂_i g_jk + ∂_j g_ik − ∂_k g_ij)| over i,j,k.
inline double koszul_check(const SurfaceModel& s, double u, double v) {
  const SurfaceJet j = surface_jets(s, u, v);
  const FirstForm I = first_form(j);
  const Christoffel c = christoffel(j);
  const auto [E_u, E_v, F_u, F_v, G_u, G_v] = metric_derivs(j);
  // g[i][j] and ∂_k g[i][j], indices 1-based via offset
  const double g[3][3] = {{0, 0, 0}, {0, I.E, I.F}, {0, I.F, I.G}};
  const double dg[3][3][3] = {{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}},
                              {{0, 0, 0}, {0, E_u, F_u}, {0, F_u, G_u}},
                              {{0, 0, 0}, {0, E_v, F_v}, {0, F_v, G_v}}};
  double worst = 0.0;
  for (int i = 1; i <= 2; ++i)
    for (int jj = 1; jj <= 2; ++jj)
      for (int k = 1; k <= 2; ++k) {
        double lhs = 0.0;
        for (int m = 1; m <= 2; ++m) lhs += g[k][m] * c.at(m, i, jj);
        const double rhs = 0.5 * (dg[i][jj][k] + dg[jj][i][k] - dg[k][i][jj]);
        worst = std::max(worst, std::fabs(lhs - rhs));
      }
  return worst;
}

enum class PointType { elliptic, hyperbolic, parabolic, planar };

inline const char* point_type_name(PointType t) {
  switch (t) {
    case PointType::elliptic: return "elliptic";
    case PointType::hyperbolic: return "hyperbolic";
    case PointType::parabolic: return "parabolic";
    case PointType::planar: return "planar";
  }
  return "?";
}

/// Everything the shape operator yields at one point.
struct FormBundle {
  double E = 0.0, F = 0.0, G = 0.0;
  double e = 0.0, f = 0.0, g = 0.0;
  Vec3 n{};
  double S[2][2] = {{0.0, 0.0}, {0.0, 0.0}};  // shape operator, S = I⁻¹·II
  double K = 0.0, H = 0.0;
  double kappa1 = 0.0, kappa2 = 0.0;  // κ1 ≥ κ2
  std::array<double, 2> dir1{1.0, 0.0}, dir2{0.0, 1.0};  // parameter components
  Vec3 dir1_world{}, dir2_world{};
  bool umbilic = false;
  Christoffel gamma;
};

inline FormBundle shape_and_curvatures(const SurfaceModel& s, double u, double v) {
  const SurfaceJet j = surface_jets(s, u, v);
  const Vec3 cr = cross(j.x_u, j.x_v);
  const double crn = norm(cr);
  if (crn <= kSurfaceEps)
    throw GeomError("shape operator undefined at an irregular point (u, v) = (" +
                    detail::format_double(u) + ", " + detail::format_double(v) + ")");
  FormBundle b;
  const FirstForm I = first_form(j);
  b.E = I.E;
  b.F = I.F;
  b.G = I.G;
  b.n = cr / crn;
  const SecondForm II = second_form(j, b.n);
  b.e = II.e;
  b.f = II.f;
  b.g = II.g;
  const double W = I.det();
  b.S[0][0] = (b.G * b.e - b.F * b.f) / W;
  b.S[0][1] = (b.G * b.f - b.F * b.g) / W;
  b.S[1][0] = (b.E * b.f - b.F * b.e) / W;
  b.S[1][1] = (b.E * b.g - b.F * b.f) / W;
  b.K = II.det() / W;
  b.H = 0.5 * (b.S[0][0] + b.S[1][1]);

  // κ are the (real) eigenvalues of S, written as m ± √(d² + S01·S10) with
  // m the diagonal mean and d the half-difference. This form is algebraically
  // H ± √(H²−K) but avoids the H²−K cancellation, which near umbilics turns
  // roundoff in two O(1) quantities into a spurious κ1−κ2 of ~1e−8. The
  // discriminant is mathematically ≥ 0; a negative value can only be roundoff
  // and is judged (and clamped) at that scale.
  const double half_diff = 0.5 * (b.S[0][0] - b.S[1][1]);
  double disc = half_diff * half_diff + b.S[0][1] * b.S[1][0];
  if (disc < 0.0) {
    if (-disc > 1e-12 * (1.0 + b.H * b.H + std::fabs(b.K)))
      throw GeomError("principal curvature eigenvalues came out complex");
    disc = 0.0;
  }
  const double rad = std::sqrt(disc);
  b.kappa1 = b.H + rad;
  b.kappa2 = b.H - rad;
  b.umbilic = std::fabs(b.kappa1 - b.kappa2) <= 1e-8 * (1.0 + std::fabs(b.kappa1));

  auto eigvec = [&](double lambda) -> std::array<double, 2> {
    // rows of S−λ: pick the better-conditioned null vector
    const std::array<double, 2> wa{b.S[0][1], lambda - b.S[0][0]};
    const std::array<double, 2> wb{lambda - b.S[1][1], b.S[1][0]};
    const double na = wa[0] * wa[0] + wa[1] * wa[1];
    const double nb = wb[0] * wb[0] + wb[1] * wb[1];
    std::array<double, 2> w = na >= nb ? wa : wb;
    const double scale = std::sqrt(std::max(na, nb));
    if (scale < 1e-14 * (1.0 + std::fabs(lambda))) return {1.0, 0.0};  // umbilic: any direction
    return {w[0] / scale, w[1] / scale};
  };
  b.dir1 = eigvec(b.kappa1);
  b.dir2 = b.umbilic ? std::array<double, 2>{0.0, 1.0} : eigvec(b.kappa2);
  // normalize to unit length in the surface metric
  for (auto* d : {&b.dir1, &b.dir2}) {
    const double len = std::sqrt(I.apply((*d)[0], (*d)[1]));
    if (len > 0.0) {
      (*d)[0] /= len;
      (*d)[1] /= len;
    }
  }
  b.dir1_world = b.dir1[0] * j.x_u + b.dir1[1] * j.x_v;
  b.dir2_world = b.dir2[0] * j.x_u + b.dir2[1] * j.x_v;
  b.gamma = christoffel(j);
  return b;
}

inline PointType classify_point(const SurfaceModel& s, double u, double v) {
  const SurfaceJet j = surface_jets(s, u, v);
  const FirstForm I = first_form(j);
  if (I.det() <= 0.0) throw GeomError("classification undefined at an irregular point");
  const SecondForm II = second_form(j, gauss_map(s, u, v));
  const double ii_norm2 = II.e * II.e + 2.0 * II.f * II.f + II.g * II.g;
  const double i_norm2 = I.E * I.E + 2.0 * I.F * I.F + I.G * I.G;
  if (ii_norm2 <= 1e-10 * (1.0 + i_norm2)) return PointType::planar;
  const double tol = 1e-10 * (1.0 + ii_norm2);
  if (II.det() > tol) return PointType::elliptic;
  if (II.det() < -tol) return PointType::hyperbolic;
  return PointType::parabolic;
}

/// κ_n of the tangent direction du·x_u + dv·x_v: II(dir)/I(dir).
inline double normal_curvature(const SurfaceModel& s, double u, double v, double du, double dv) {
  if (du == 0.0 && dv == 0.0) throw GeomError("normal curvature needs a nonzero direction");
  const SurfaceJet j = surface_jets(s, u, v);
  const FirstForm I = first_form(j);
  const SecondForm II = second_form(j, gauss_map(s, u, v));
  return II.apply(du, dv) / I.apply(du, dv);
}

/// Euler's formula: κ_n(θ) = κ1 cos²θ + κ2 sin²θ, θ measured from dir1.
inline double euler_curvature(const SurfaceModel& s, double u, double v, double theta) {
  const FormBundle b = shape_and_curvatures(s, u, v);
  const double c = std::cos(theta), sn = std::sin(theta);
  return b.kappa1 * c * c + b.kappa2 * sn * sn;
}

struct GaussWeingartenResiduals {
  Vec3 structural[3];  // x_uu, x_uv, x_vv equations
  Vec3 normal[2];      // n_u, n_v equations
  double max_norm() const {
    double worst = 0.0;
    for (const Vec3& r : structural) worst = std::max(worst, norm(r));
    for (const Vec3& r : normal) worst = std::max(worst, norm(r));
    return worst;
  }
};

/// Residuals of the five structure equations
///   x_uu = Γ¹₁₁x_u + Γ²₁₁x_v + e·n   (and x_uv, x_vv analogues)
///   n_u = −[(Ge−Ff)x_u + (Ef−Fe)x_v]/(EG−F²)   (and n_v analogue)
inline GaussWeingartenResiduals gauss_weingarten_residual(const SurfaceModel& s, double u,
                                                          double v) {
  const SurfaceJet j = surface_jets(s, u, v);
  const NormalJet nj = normal_jets(s, u, v);
  const FirstForm I = first_form(j);
  const SecondForm II = second_form(j, nj.n);
  const Christoffel c = christoffel(j);
  const double W = I.det();
  GaussWeingartenResiduals r;
  r.structural[0] = j.x_uu - (c.g1_11 * j.x_u + c.g2_11 * j.x_v + II.e * nj.n);
  r.structural[1] = j.x_uv - (c.g1_12 * j.x_u + c.g2_12 * j.x_v + II.f * nj.n);
  r.structural[2] = j.x_vv - (c.g1_22 * j.x_u + c.g2_22 * j.x_v + II.g * nj.n);
  r.normal[0] =
      nj.n_u + ((I.G * II.e - I.F * II.f) * j.x_u + (I.E * II.f - I.F * II.e) * j.x_v) / W;
  r.normal[1] =
      nj.n_v + ((I.G * II.f - I.F * II.g) * j.x_u + (I.E * II.g - I.F * II.f) * j.x_v) / W;
  return r;
}

/// Gaussian curvature from E, F, G and their parameter derivatives alone
/// (Brioschi determinant formula).
inline double intrinsic_K(const SurfaceModel& s, double u, double v) {
  const SurfaceJet j = surface_jets(s, u, v);
  const FirstForm I = first_form(j);
  const double W = I.det();
  if (W <= 0.0) throw GeomError("intrinsic curvature undefined at an irregular point");
  const auto [E_u, E_v, F_u, F_v, G_u, G_v] = metric_derivs(j);
  const double E_vv = 2.0 * (dot(j.x_uv, j.x_uv) + dot(j.x_u, j.x_uvv));
  const double G_uu = 2.0 * (dot(j.x_uv, j.x_uv) + dot(j.x_v, j.x_uuv));
  const double F_uv =
      dot(j.x_uuv, j.x_v) + dot(j.x_uu, j.x_vv) + dot(j.x_uv, j.x_uv) + dot(j.x_u, j.x_uvv);
  const Mat3 M1{{{{-0.5 * E_vv + F_uv - 0.5 * G_uu, 0.5 * E_u, F_u - 0.5 * E_v},
                  {F_v - 0.5 * G_u, I.E, I.F},
                  {0.5 * G_v, I.F, I.G}}}};
  const Mat3 M2{{{{0.0, 0.5 * E_v, 0.5 * G_u}, {0.5 * E_v, I.E, I.F}, {0.5 * G_u, I.F, I.G}}}};
  auto det = [](const Mat3& m) {
    return m.m[0][0] * (m.m[1][1] * m.m[2][2] - m.m[1][2] * m.m[2][1]) -
           m.m[0][1] * (m.m[1][0] * m.m[2][2] - m.m[1][2] * m.m[2][0]) +
           m.m[0][2] * (m.m[1][0] * m.m[2][1] - m.m[1][1] * m.m[2][0]);
  };
  return (det(M1) - det(M2)) / (W * W);
}

struct NormalIdentityResiduals {
  double gauss_map_identity = 0.0;       // ‖n_u×n_v − K·(x_u×x_v)‖
  double parallel_surface_identity = 0.0;  // ‖ρ_u×ρ_v − (1−2Ha+Ka²)(x_u×x_v)‖, ρ = x + a·n
};

inline NormalIdentityResiduals normal_identities_check(const SurfaceModel& s, double u, double v,
                                                       double a) {
  const SurfaceJet j = surface_jets(s, u, v);
  const NormalJet nj = normal_jets(s, u, v);
  const FormBundle b = shape_and_curvatures(s, u, v);
  const Vec3 cr = cross(j.x_u, j.x_v);
  NormalIdentityResiduals r;
  r.gauss_map_identity = norm(cross(nj.n_u, nj.n_v) - b.K * cr);
  const Vec3 rho_u = j.x_u + a * nj.n_u;
  const Vec3 rho_v = j.x_v + a * nj.n_v;
  const double factor = 1.0 - 2.0 * b.H * a + b.K * a * a;
  r.parallel_surface_identity = norm(cross(rho_u, rho_v) - factor * cr);
  return r;
}

/// For each tilt angle φ: the osculating circle of the section whose plane
/// contains the tangent direction and is tilted by φ from the surface normal
/// has radius cos φ·R_n and lies on the sphere of center c_n = p + R_n·n,
/// radius R_n. Returns max |‖α(t)−c_n‖² − R_n²| over sampled circle points.
inline double meusnier_check(const SurfaceModel& s, double u, double v, double du, double dv,
                             const std::vector<double>& angles) {
  const SurfaceJet j = surface_jets(s, u, v);
  const Vec3 cr = cross(j.x_u, j.x_v);
  const double crn = norm(cr);
  if (crn <= kSurfaceEps) throw GeomError("irregular point");
  const Vec3 n = cr / crn;
  const FirstForm I = first_form(j);
  const SecondForm II = second_form(j, n);
  const double kn = II.apply(du, dv) / I.apply(du, dv);
  if (std::fabs(kn) <= 1e-12)
    throw GeomError("Meusnier check rejected: asymptotic direction (normal curvature is zero)");
  const Vec3 w = normalized(du * j.x_u + dv * j.x_v);
  const Vec3 n_dir = kn > 0.0 ? n : -n;  // center side of the normal section
  const double R_n = 1.0 / std::fabs(kn);
  const Vec3 c_n = j.x + R_n * n_dir;
  const Vec3 m = cross(n_dir, w);

  double worst = 0.0;
  for (double phi : angles) {
    const double R = R_n * std::cos(phi);
    if (std::fabs(R) <= 1e-12) throw GeomError("Meusnier check rejected: section plane tilt of 90 degrees");
    const Vec3 tilt = std::cos(phi) * n_dir + std::sin(phi) * m;
    const Vec3 center = j.x + R * tilt;
    for (int k = 0; k < 32; ++k) {
      const double t = 2.0 * std::numbers::pi * k / 32;
      const Vec3 alpha = center - R * std::cos(t) * tilt + R * std::sin(t) * w;
      worst = std::max(worst, std::fabs(norm2(alpha - c_n) - R_n * R_n));
    }
  }
  return worst;
}

struct AsymptoticDirections {
  int count = 0;  // 0, 1, or 2 (−1: every direction, at a planar point)
  std::array<double, 2> d1{}, d2{};
};

/// Solve e·du² + 2f·du·dv + g·dv² = 0 for tangent directions.
inline AsymptoticDirections asymptotic_directions(const SecondForm& II, const FirstForm& I) {
  AsymptoticDirections out;
  const double tol = 1e-10 * (1.0 + II.e * II.e + 2.0 * II.f * II.f + II.g * II.g);
  const double disc = II.f * II.f - II.e * II.g;
  auto normalize = [&](std::array<double, 2> d) {
    const double len = std::sqrt(I.apply(d[0], d[1]));
    return len > 0.0 ? std::array<double, 2>{d[0] / len, d[1] / len} : d;
  };
  if (std::fabs(II.e) <= tol && std::fabs(II.g) <= tol && std::fabs(II.f) <= tol) {
    out.count = -1;  // planar point: every direction is asymptotic
    return out;
  }
  if (disc < -tol) return out;  // elliptic: none
  const double root = std::sqrt(std::max(0.0, disc));
  if (std::fabs(II.e) > tol) {
    out.d1 = normalize({(-II.f + root) / II.e, 1.0});
    out.d2 = normalize({(-II.f - root) / II.e, 1.0});
  } else if (std::fabs(II.g) > tol) {
    out.d1 = normalize({1.0, (-II.f + root) / II.g});
    out.d2 = normalize({1.0, (-II.f - root) / II.g});
  } else {  // e ≈ g ≈ 0, f ≠ 0: the coordinate directions
    out.d1 = normalize({1.0, 0.0});
    out.d2 = normalize({0.0, 1.0});
  }
  out.count = disc > tol ? 2 : 1;
  return out;
}

struct MinimalityPoint {
  double u = 0.0, v = 0.0;
  double H = 0.0, K = 0.0;
  AsymptoticDirections asymptotic;
  std::array<double, 2> principal1{}, principal2{};
};

struct MinimalityReport {
  bool is_minimal = false;
  double max_abs_H = 0.0, max_abs_K = 0.0;
  std::vector<MinimalityPoint> points;
};

/// Sweep an nu×nv grid of cell centers: minimal ⇔ max|H| ≤ 1e−7·(1+max|K|);
/// per-point asymptotic and principal (curvature-line) directions.
inline MinimalityReport minimality_and_directions(const SurfaceModel& s, int nu, int nv) {
  if (nu < 1 || nv < 1) throw GeomError("minimality grid must be at least 1x1");
  MinimalityReport rep;
  for (int i = 0; i < nu; ++i)
    for (int k = 0; k < nv; ++k) {
      const double u = s.u0 + (s.u1 - s.u0) * (i + 0.5) / nu;
      const double v = s.v0 + (s.v1 - s.v0) * (k + 0.5) / nv;
      const FormBundle b = shape_and_curvatures(s, u, v);
      MinimalityPoint pt;
      pt.u = u;
      pt.v = v;
      pt.H = b.H;
      pt.K = b.K;
      pt.asymptotic = asymptotic_directions(SecondForm{b.e, b.f, b.g}, FirstForm{b.E, b.F, b.G});
      pt.principal1 = b.dir1;
      pt.principal2 = b.dir2;
      rep.max_abs_H = std::max(rep.max_abs_H, std::fabs(b.H));
      rep.max_abs_K = std::max(rep.max_abs_K, std::fabs(b.K));
      rep.points.push_back(pt);
    }
  rep.is_minimal = rep.max_abs_H <= 1e-7 * (1.0 + rep.max_abs_K);
  return rep;
}

/// A surface given as a level set F(x, y, z) = 0.
struct ImplicitSurface {
  Expr F;  // over variables {x, y, z}

  double level_residual(const Vec3& p) const { return F.eval({p.x, p.y, p.z}); }
  Vec3 gradient(const Vec3& p) const {
    const std::array<Grad3, 3> args{Grad3::variable(0, p.x), Grad3::variable(1, p.y),
                                    Grad3::variable(2, p.z)};
    const Grad3 r = F.eval(std::span<const Grad3>(args));
    return {r.g[0], r.g[1], r.g[2]};
  }
  bool is_regular_at(const Vec3& p) const { return norm(gradient(p)) > kSurfaceEps; }
  Vec3 normal_at(const Vec3& p) const {
    const Vec3 grad = gradient(p);
    const double len = norm(grad);
    if (len <= kSurfaceEps) throw GeomError("implicit surface has vanishing gradient here");
    return grad / len;
  }
};

inline ImplicitSurface implicit_surface(Expr F) {
  if (F.vars() != std::vector<std::string>{"x", "y", "z"})
    throw GeomError("an implicit surface must be an expression over x, y, z");
  return {std::move(F)};
}

}  // namespace geo3
