// Fundamental forms, curvatures, structure equations, and the intrinsic
// curvature of parametrized surfaces.
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "support.hpp"

using geo3::Expr;
using geo3::GeomError;
using geo3::SurfaceModel;
using geo3::Vec3;
using geo3::parse_surface;
using geo3::shape_and_curvatures;
namespace cat = geo3::catalog;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<std::pair<double, double>> grid_points(const SurfaceModel& m, int nu, int nv) {
  std::vector<std::pair<double, double>> pts;
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nv; ++j)
      pts.emplace_back(m.u0 + (m.u1 - m.u0) * (i + 0.5) / nu,
                       m.v0 + (m.v1 - m.v0) * (j + 0.5) / nv);
  return pts;
}

/// The surfaces most structure sweeps run over (regular on their windows).
std::vector<SurfaceModel> structure_surfaces() {
  return {
      cat::sphere().surface.value(),        cat::torus().surface.value(),
      cat::helicoid().surface.value(),      cat::catenoid().surface.value(),
      cat::hyperboloid_one().surface.value(), cat::enneper().surface.value(),
      cat::ellipsoid().surface.value(),     cat::elliptic_paraboloid().surface.value(),
  };
}

}  // namespace

TEST_CASE("fundamental forms of the sphere and torus in closed form") {
  const SurfaceModel sph = cat::sphere().surface.value();
  for (auto [u, v] : grid_points(sph, 6, 6)) {
    const auto I = geo3::first_form(sph, u, v);
    const auto II = geo3::second_form(sph, u, v);
    REQUIRE_THAT(I.E, Catch::Matchers::WithinAbs(1.0, 1e-12));
    REQUIRE_THAT(I.F, Catch::Matchers::WithinAbs(0.0, 1e-12));
    REQUIRE_THAT(I.G, Catch::Matchers::WithinAbs(std::cos(u) * std::cos(u), 1e-12));
    // II = ±I on a unit sphere, sign fixed by the chart's normal orientation
    REQUIRE_THAT(std::fabs(II.e), Catch::Matchers::WithinAbs(1.0, 1e-12));
    REQUIRE_THAT(II.f, Catch::Matchers::WithinAbs(0.0, 1e-12));
    REQUIRE_THAT(II.g / II.e, Catch::Matchers::WithinAbs(I.G, 1e-12));
  }
  const double R = 2.0, r = 1.0;
  const SurfaceModel tor = cat::torus(R, r).surface.value();
  for (auto [u, v] : grid_points(tor, 6, 6)) {
    const auto I = geo3::first_form(tor, u, v);
    REQUIRE_THAT(I.E, Catch::Matchers::WithinAbs(r * r, 1e-12));
    REQUIRE_THAT(I.F, Catch::Matchers::WithinAbs(0.0, 1e-12));
    const double w = R + r * std::cos(u);
    REQUIRE_THAT(I.G, Catch::Matchers::WithinAbs(w * w, 1e-12));
  }
}

TEST_CASE("parametric angle between coordinate lines") {
  // orthogonal chart: always π/2
  const SurfaceModel sph = cat::sphere().surface.value();
  CHECK_THAT(geo3::parametric_angle(sph, 0.4, 1.0),
             Catch::Matchers::WithinAbs(kPi / 2.0, 1e-12));
  // skewed plane chart x(u, v) = (u + v, v, 0): cos θ = F/√(EG) = 1/√2
  const SurfaceModel skew = parse_surface("(u + v, v, 0) on [0, 1] x [0, 1]");
  CHECK_THAT(geo3::parametric_angle(skew, 0.5, 0.5),
             Catch::Matchers::WithinAbs(kPi / 4.0, 1e-12));
}

TEST_CASE("shape operator ties K, H, and the principal curvatures together") {
  auto gen = support::rng(20240801);
  for (const SurfaceModel& m : structure_surfaces()) {
    CAPTURE(m.label);
    std::uniform_real_distribution<double> du(m.u0, m.u1), dv(m.v0, m.v1);
    for (int i = 0; i < 25; ++i) {
      const double u = du(gen), v = dv(gen);
      const auto b = shape_and_curvatures(m, u, v);
      REQUIRE_THAT(b.kappa1 * b.kappa2, Catch::Matchers::WithinAbs(b.K, 1e-9 * (1 + std::fabs(b.K))));
      REQUIRE_THAT(0.5 * (b.kappa1 + b.kappa2),
                   Catch::Matchers::WithinAbs(b.H, 1e-9 * (1 + std::fabs(b.H))));
      REQUIRE(b.kappa1 >= b.kappa2);
      // determinant identity K·(EG−F²) = eg−f²
      const double lhs = b.K * (b.E * b.G - b.F * b.F);
      const double rhs = b.e * b.g - b.f * b.f;
      REQUIRE_THAT(lhs, Catch::Matchers::WithinAbs(rhs, 1e-9 * (1 + std::fabs(rhs))));
    }
  }
}

TEST_CASE("principal directions diagonalize the second form") {
  auto gen = support::rng(20240802);
  for (const SurfaceModel& m : {cat::torus().surface.value(), cat::ellipsoid().surface.value()}) {
    CAPTURE(m.label);
    std::uniform_real_distribution<double> du(m.u0, m.u1), dv(m.v0, m.v1);
    for (int i = 0; i < 20; ++i) {
      const double u = du(gen), v = dv(gen);
      const auto b = shape_and_curvatures(m, u, v);
      if (b.umbilic) continue;
      // each direction realizes its principal curvature as a normal curvature
      REQUIRE_THAT(geo3::normal_curvature(m, u, v, b.dir1[0], b.dir1[1]),
                   Catch::Matchers::WithinAbs(b.kappa1, 1e-8 * (1 + std::fabs(b.kappa1))));
      REQUIRE_THAT(geo3::normal_curvature(m, u, v, b.dir2[0], b.dir2[1]),
                   Catch::Matchers::WithinAbs(b.kappa2, 1e-8 * (1 + std::fabs(b.kappa2))));
      // and the two directions are orthogonal in the first form
      const double ip = b.E * b.dir1[0] * b.dir2[0] +
                        b.F * (b.dir1[0] * b.dir2[1] + b.dir1[1] * b.dir2[0]) +
                        b.G * b.dir1[1] * b.dir2[1];
      REQUIRE_THAT(ip, Catch::Matchers::WithinAbs(0.0, 1e-8));
      // world-space versions are orthogonal to each other and to the normal
      REQUIRE_THAT(geo3::dot(b.dir1_world, b.dir2_world), Catch::Matchers::WithinAbs(0.0, 1e-8));
      REQUIRE_THAT(geo3::dot(b.dir1_world, b.n), Catch::Matchers::WithinAbs(0.0, 1e-8));
    }
  }
}

TEST_CASE("surface regularity detection") {
  CHECK(geo3::is_regular_surface(cat::torus().surface.value(), 50, 50).regular);
  CHECK(geo3::is_regular_surface(cat::sphere().surface.value(), 30, 30).regular);
  // a cone chart that includes its apex is singular there
  const SurfaceModel bad = parse_surface("(u cos v, u sin v, u) on [0, 1] x [0, 6.2832]");
  const auto rep = geo3::is_regular_surface(bad, 21, 21);
  CHECK_FALSE(rep.regular);
  CHECK(rep.min_cross_norm <= 1e-9);
  CHECK(rep.worst_u == 0.0);
}

TEST_CASE("the Gauss map of the unit sphere is the position itself") {
  const SurfaceModel sph = cat::sphere().surface.value();
  for (auto [u, v] : grid_points(sph, 8, 8)) {
    const Vec3 n = geo3::gauss_map(sph, u, v);
    const Vec3 p = sph.point(u, v);
    const double agree = std::min(geo3::norm(n - p), geo3::norm(n + p));
    REQUIRE(agree <= 1e-9);
  }
}

TEST_CASE("spheres are umbilic everywhere, generic points are not") {
  const SurfaceModel sph = cat::sphere().surface.value();
  for (auto [u, v] : grid_points(sph, 7, 7)) {
    const auto b = shape_and_curvatures(sph, u, v);
    REQUIRE(b.umbilic);
    REQUIRE(std::fabs(b.kappa1 - b.kappa2) <= 1e-8 * (1 + std::fabs(b.kappa1)));
  }
  CHECK_FALSE(shape_and_curvatures(cat::torus().surface.value(), 0.5, 1.0).umbilic);
  CHECK_FALSE(shape_and_curvatures(cat::ellipsoid().surface.value(), 0.4, 0.9).umbilic);
}

TEST_CASE("point classification on the classics") {
  using geo3::PointType;
  CHECK(geo3::classify_point(cat::sphere().surface.value(), 0.3, 1.0) == PointType::elliptic);
  CHECK(geo3::classify_point(cat::hyperbolic_paraboloid().surface.value(), 0.1, 0.2) ==
        PointType::hyperbolic);
  CHECK(geo3::classify_point(cat::cone().surface.value(), 0.8, 1.0) == PointType::parabolic);
  CHECK(geo3::classify_point(cat::plane().surface.value(), 0.3, 0.4) == PointType::planar);
  // torus: elliptic outside, hyperbolic inside, parabolic on the top circle
  const SurfaceModel tor = cat::torus().surface.value();
  CHECK(geo3::classify_point(tor, 0.0, 1.0) == PointType::elliptic);
  CHECK(geo3::classify_point(tor, kPi, 1.0) == PointType::hyperbolic);
  CHECK(geo3::classify_point(tor, kPi / 2.0, 1.0) == PointType::parabolic);
  CHECK(std::string(geo3::point_type_name(PointType::elliptic)) == "elliptic");
}

TEST_CASE("minimal surfaces are flagged; the sphere is not") {
  for (const auto& name : {"helicoid", "catenoid", "enneper"}) {
    const auto entries = cat::default_entries();
    const auto* e = cat::find_entry(entries, name);
    REQUIRE(e != nullptr);
    const auto rep = geo3::minimality_and_directions(e->surface.value(), 15, 15);
    CAPTURE(name);
    CHECK(rep.is_minimal);
    CHECK(rep.max_abs_H <= 1e-7 * (1.0 + rep.max_abs_K));
  }
  CHECK_FALSE(geo3::minimality_and_directions(cat::sphere().surface.value(), 8, 8).is_minimal);
}

TEST_CASE("Enneper's chart is conformal") {
  const SurfaceModel enn = cat::enneper().surface.value();
  for (auto [u, v] : grid_points(enn, 8, 8)) {
    const auto I = geo3::first_form(enn, u, v);
    REQUIRE_THAT(I.E - I.G, Catch::Matchers::WithinAbs(0.0, 1e-8));
    REQUIRE_THAT(I.F, Catch::Matchers::WithinAbs(0.0, 1e-8));
  }
}

TEST_CASE("Christoffel symbols solve the Koszul equations across the catalog") {
  for (const SurfaceModel& m : structure_surfaces()) {
    CAPTURE(m.label);
    for (auto [u, v] : grid_points(m, 8, 8))
      REQUIRE(geo3::koszul_check(m, u, v) <= 1e-8);
  }
}

TEST_CASE("Gauss-Weingarten residuals stay below 1e-7 across the catalog") {
  for (const SurfaceModel& m : structure_surfaces()) {
    CAPTURE(m.label);
    for (auto [u, v] : grid_points(m, 8, 8))
      REQUIRE(geo3::gauss_weingarten_residual(m, u, v).max_norm() <= 1e-7);
  }
}

TEST_CASE("intrinsic curvature equals extrinsic curvature (20x20 grids)") {
  for (const auto& name :
       {"sphere", "torus", "helicoid", "catenoid", "hyperboloid_one", "enneper"}) {
    const auto entries = cat::default_entries();
    const SurfaceModel& m = cat::find_entry(entries, name)->surface.value();
    CAPTURE(name);
    double worst = 0.0;
    for (auto [u, v] : grid_points(m, 20, 20)) {
      const double diff =
          std::fabs(geo3::intrinsic_K(m, u, v) - shape_and_curvatures(m, u, v).K);
      worst = std::max(worst, diff);
    }
    REQUIRE(worst <= 1e-6);
  }
}

TEST_CASE("Gauss curvature survives affine reparametrization") {
  const SurfaceModel m = cat::torus().surface.value();
  auto gen = support::rng(20240803);
  std::uniform_real_distribution<double> coef(-0.8, 0.8);
  for (int trial = 0; trial < 5; ++trial) {
    double a = coef(gen), b = coef(gen), c = coef(gen), d = coef(gen);
    if (std::fabs(a * d - b * c) < 0.2) {
      --trial;
      continue;  // keep the map comfortably invertible
    }
    const auto uv = Expr::make_vars({"u", "v"});
    auto lin = [&](double p, double q, double r) {
      return geo3::parse_scalar(geo3::detail::format_double(p) + " u + " +
                                    geo3::detail::format_double(q) + " v + " +
                                    geo3::detail::format_double(r),
                                {"u", "v"});
    };
    const Expr uu = lin(a, b, 2.0), vv = lin(c, d, 1.0);
    const SurfaceModel m2{
        geo3::substitute_all(m.x, {{"u", uu}, {"v", vv}}, uv),
        geo3::substitute_all(m.y, {{"u", uu}, {"v", vv}}, uv),
        geo3::substitute_all(m.z, {{"u", uu}, {"v", vv}}, uv),
        -1.0, 1.0, -1.0, 1.0, "affinely reparametrized torus"};
    auto geneval = [&](double u, double v) {
      return std::pair{uu.eval({u, v}), vv.eval({u, v})};
    };
    for (auto [u, v] : grid_points(m2, 5, 5)) {
      const auto [pu, pv] = geneval(u, v);
      REQUIRE_THAT(shape_and_curvatures(m2, u, v).K,
                   Catch::Matchers::WithinAbs(shape_and_curvatures(m, pu, pv).K, 1e-6));
    }
  }
}

TEST_CASE("swapping the parameters flips the normal and the signs of II and H") {
  const SurfaceModel m = cat::torus().surface.value();
  const auto uv = Expr::make_vars({"u", "v"});
  const Expr U = geo3::parse_scalar("v", {"u", "v"});
  const Expr V = geo3::parse_scalar("u", {"u", "v"});
  const SurfaceModel swapped{
      geo3::substitute_all(m.x, {{"u", U}, {"v", V}}, uv),
      geo3::substitute_all(m.y, {{"u", U}, {"v", V}}, uv),
      geo3::substitute_all(m.z, {{"u", U}, {"v", V}}, uv),
      m.v0, m.v1, m.u0, m.u1, "parameter-swapped torus"};
  for (auto [u, v] : grid_points(m, 5, 5)) {
    const auto a = shape_and_curvatures(m, u, v);
    const auto b = shape_and_curvatures(swapped, v, u);
    REQUIRE(geo3::norm(a.n + b.n) <= 1e-9);  // normal flips
    // e and g trade places (the second parameter is now the first) and all of
    // II changes sign with the normal
    REQUIRE_THAT(b.e, Catch::Matchers::WithinAbs(-a.g, 1e-9));
    REQUIRE_THAT(b.f, Catch::Matchers::WithinAbs(-a.f, 1e-9));
    REQUIRE_THAT(b.g, Catch::Matchers::WithinAbs(-a.e, 1e-9));
    REQUIRE_THAT(b.H, Catch::Matchers::WithinAbs(-a.H, 1e-9));
    REQUIRE_THAT(b.K, Catch::Matchers::WithinAbs(a.K, 1e-9));  // K is orientation-blind
    REQUIRE_THAT(b.E, Catch::Matchers::WithinAbs(a.G, 1e-12));  // E and G trade places
  }
}

TEST_CASE("normal identities: Gauss-map cross product and parallel surfaces") {
  for (const SurfaceModel& m : structure_surfaces()) {
    CAPTURE(m.label);
    for (auto [u, v] : grid_points(m, 6, 6))
      for (double a : {0.05, 0.1}) {
        const auto rep = geo3::normal_identities_check(m, u, v, a);
        REQUIRE(rep.gauss_map_identity <= 1e-7);
        REQUIRE(rep.parallel_surface_identity <= 1e-7);
      }
  }
}

TEST_CASE("Euler's curvature formula in the principal frame") {
  const SurfaceModel tor = cat::torus().surface.value();
  auto gen = support::rng(20240804);
  std::uniform_real_distribution<double> du(0.0, 2 * kPi), th(0.0, kPi);
  for (int i = 0; i < 20; ++i) {
    const double u = du(gen), v = du(gen), theta = th(gen);
    const auto b = shape_and_curvatures(tor, u, v);
    const double expect =
        b.kappa1 * std::cos(theta) * std::cos(theta) + b.kappa2 * std::sin(theta) * std::sin(theta);
    REQUIRE_THAT(geo3::euler_curvature(tor, u, v, theta),
                 Catch::Matchers::WithinAbs(expect, 1e-9 * (1 + std::fabs(expect))));
  }
}

TEST_CASE("asymptotic directions have zero normal curvature") {
  const SurfaceModel hyp = cat::hyperbolic_paraboloid().surface.value();
  for (auto [u, v] : grid_points(hyp, 5, 5)) {
    const auto j = geo3::surface_jets(hyp, u, v);
    const auto I = geo3::first_form(j);
    const auto II = geo3::second_form(j, geo3::gauss_map(hyp, u, v));
    const auto dirs = geo3::asymptotic_directions(II, I);
    REQUIRE(dirs.count == 2);
    for (const auto& d : {dirs.d1, dirs.d2})
      REQUIRE_THAT(geo3::normal_curvature(hyp, u, v, d[0], d[1]),
                   Catch::Matchers::WithinAbs(0.0, 1e-9));
  }
  // elliptic point: none
  const auto j = geo3::surface_jets(cat::sphere().surface.value(), 0.3, 1.0);
  const auto dirs = geo3::asymptotic_directions(
      geo3::second_form(j, geo3::gauss_map(cat::sphere().surface.value(), 0.3, 1.0)),
      geo3::first_form(j));
  CHECK(dirs.count == 0);
}

TEST_CASE("Meusnier: tilted sections lie on the sphere of curvature") {
  const std::vector<double> angles{0.3, 0.7, 1.1};
  const SurfaceModel sph = cat::sphere().surface.value();
  CHECK(geo3::meusnier_check(sph, 0.4, 1.2, 1.0, 0.7, angles) <= 1e-8);
  const SurfaceModel cyl = parse_surface("(cos u, sin u, v) on [0, 6.2832] x [-2, 2]");
  CHECK(geo3::meusnier_check(cyl, 1.0, 0.0, 1.0, 0.0, angles) <= 1e-8);
  // along the cylinder's ruling the normal curvature vanishes: rejected
  CHECK_THROWS_AS(geo3::meusnier_check(cyl, 1.0, 0.0, 0.0, 1.0, angles), GeomError);
}

TEST_CASE("implicit surfaces: level residual, gradient, and normals") {
  const auto entries = cat::default_entries();
  const auto* sph = cat::find_entry(entries, "sphere");
  REQUIRE(sph != nullptr);
  REQUIRE(sph->level_set.has_value());
  const auto& F = *sph->level_set;
  // points of the parametric chart satisfy F = 0
  const SurfaceModel chart = sph->surface.value();
  for (auto [u, v] : grid_points(chart, 6, 6)) {
    const Vec3 p = chart.point(u, v);
    REQUIRE_THAT(F.level_residual(p), Catch::Matchers::WithinAbs(0.0, 1e-12));
    const Vec3 g = F.gradient(p);
    REQUIRE(geo3::norm(geo3::cross(g, p)) <= 1e-12);     // ∇F ∥ position
    REQUIRE_THAT(geo3::norm2(g), Catch::Matchers::WithinAbs(4.0, 1e-12));  // ‖2x‖² on the sphere
    REQUIRE(F.is_regular_at(p));
    const Vec3 n = F.normal_at(p);
    REQUIRE(geo3::norm(n - geo3::normalized(p)) <= 1e-12);
  }
  CHECK_FALSE(F.is_regular_at(Vec3{0.0, 0.0, 0.0}));  // ∇F vanishes at the center
}
