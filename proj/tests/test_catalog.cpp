// The model catalog: registry integrity, closed-form invariants against the
// engine, label round-trips, level sets, ruled and developable structure, and
// factory validation.
#include <cmath>
#include <random>
#include <set>
#include <string>

#include "support.hpp"

using geo3::CurveModel;
using geo3::GeomError;
using geo3::SurfaceModel;
using geo3::Vec3;
namespace cat = geo3::catalog;
using cat::CatalogEntry;

namespace {

double rand_in(std::mt19937_64& gen, double a, double b) {
  return std::uniform_real_distribution<double>(a, b)(gen);
}

}  // namespace

TEST_CASE("the default catalog has 22 uniquely named entries") {
  const auto entries = cat::default_entries();
  REQUIRE(entries.size() == 22);
  std::set<std::string> names;
  for (const auto& e : entries) {
    CAPTURE(e.name);
    REQUIRE(names.insert(e.name).second);
    const bool has_model = e.curve.has_value() || e.surface.has_value();
    REQUIRE(has_model);
  }
  CHECK(cat::find_entry(entries, "torus") != nullptr);
  CHECK(cat::find_entry(entries, "helix") != nullptr);
  CHECK(cat::find_entry(entries, "no_such_model") == nullptr);
}

TEST_CASE("every catalog model is regular on its stated window") {
  for (const auto& e : cat::default_entries()) {
    CAPTURE(e.name);
    if (e.curve) {
      const auto rep = geo3::is_regular(*e.curve, 200);
      CHECK(rep.regular);
      CHECK(rep.min_speed > 1e-9);
    }
    if (e.surface) {
      const auto rep = geo3::is_regular_surface(*e.surface, 25, 25);
      CHECK(rep.regular);
    }
  }
}

TEST_CASE("closed-form kappa and tau agree with the engine at random points") {
  auto gen = support::rng(20240810);
  for (const auto& e : cat::default_entries()) {
    if (!e.curve || !e.kappa) continue;
    CAPTURE(e.name);
    const CurveModel& c = *e.curve;
    for (int i = 0; i < 100; ++i) {
      const double t = rand_in(gen, c.t0, c.t1);
      const auto r = geo3::curvature_torsion(c, t);
      REQUIRE_THAT(r.kappa,
                   Catch::Matchers::WithinAbs(e.kappa(t), 1e-6 * (1 + std::fabs(e.kappa(t)))));
      if (e.tau && r.tau_defined)
        REQUIRE_THAT(r.tau,
                     Catch::Matchers::WithinAbs(e.tau(t), 1e-6 * (1 + std::fabs(e.tau(t)))));
    }
  }
}

TEST_CASE("closed-form K and H agree with the engine at random points") {
  auto gen = support::rng(20240811);
  int surfaces_with_oracles = 0;
  for (const auto& e : cat::default_entries()) {
    if (!e.surface || !e.gauss) continue;
    ++surfaces_with_oracles;
    CAPTURE(e.name);
    const SurfaceModel& s = *e.surface;
    for (int i = 0; i < 100; ++i) {
      const double u = rand_in(gen, s.u0, s.u1);
      const double v = rand_in(gen, s.v0, s.v1);
      const auto b = geo3::shape_and_curvatures(s, u, v);
      REQUIRE_THAT(b.K,
                   Catch::Matchers::WithinAbs(e.gauss(u, v), 1e-6 * (1 + std::fabs(e.gauss(u, v)))));
      if (e.mean)
        REQUIRE_THAT(b.H,
                     Catch::Matchers::WithinAbs(e.mean(u, v), 1e-6 * (1 + std::fabs(e.mean(u, v)))));
    }
  }
  CHECK(surfaces_with_oracles >= 10);
}

TEST_CASE("model labels parse back to the same geometry") {
  auto gen = support::rng(20240812);
  for (const auto& e : cat::default_entries()) {
    CAPTURE(e.name);
    if (e.curve) {
      const CurveModel reparsed = geo3::parse_curve(e.curve->label);
      for (int i = 0; i < 10; ++i) {
        const double t = rand_in(gen, e.curve->t0, e.curve->t1);
        REQUIRE(geo3::norm(reparsed.point(t) - e.curve->point(t)) <= 1e-12);
      }
      REQUIRE(reparsed.t0 == e.curve->t0);
      REQUIRE(reparsed.t1 == e.curve->t1);
    }
    if (e.surface) {
      const SurfaceModel reparsed = geo3::parse_surface(e.surface->label);
      for (int i = 0; i < 10; ++i) {
        const double u = rand_in(gen, e.surface->u0, e.surface->u1);
        const double v = rand_in(gen, e.surface->v0, e.surface->v1);
        REQUIRE(geo3::norm(reparsed.point(u, v) - e.surface->point(u, v)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("level sets vanish on their charts and share the normal direction") {
  const auto entries = cat::default_entries();
  int with_level_set = 0;
  for (const auto& e : entries) {
    if (!e.level_set || !e.surface) continue;
    ++with_level_set;
    CAPTURE(e.name);
    const SurfaceModel& s = *e.surface;
    for (int i = 0; i < 7; ++i)
      for (int k = 0; k < 7; ++k) {
        const double u = s.u0 + (s.u1 - s.u0) * (i + 0.5) / 7;
        const double v = s.v0 + (s.v1 - s.v0) * (k + 0.5) / 7;
        const Vec3 p = s.point(u, v);
        REQUIRE(std::fabs(e.level_set->level_residual(p)) <= 1e-12);
        REQUIRE(e.level_set->is_regular_at(p));
        const Vec3 ni = e.level_set->normal_at(p);
        const Vec3 np = geo3::gauss_map(s, u, v);
        REQUIRE(std::min(geo3::norm(ni - np), geo3::norm(ni + np)) <= 1e-9);
      }
  }
  CHECK(with_level_set >= 2);  // at least the sphere and the torus
}

TEST_CASE("rulings are asymptotic directions") {
  const auto entries = cat::default_entries();
  struct Case {
    const char* name;
    double du, dv;  // parameter direction of the ruling
  };
  for (const Case& c : {Case{"ruled", 0.0, 1.0}, Case{"tangent_developable", 0.0, 1.0},
                        Case{"cone", 1.0, 0.0}, Case{"simple_helicoid", 1.0, 0.0}}) {
    const auto* e = cat::find_entry(entries, c.name);
    REQUIRE(e != nullptr);
    const SurfaceModel& s = *e->surface;
    CAPTURE(c.name);
    for (int i = 0; i < 8; ++i)
      for (int k = 0; k < 8; ++k) {
        const double u = s.u0 + (s.u1 - s.u0) * (i + 0.5) / 8;
        const double v = s.v0 + (s.v1 - s.v0) * (k + 0.5) / 8;
        REQUIRE(std::fabs(geo3::normal_curvature(s, u, v, c.du, c.dv)) <= 1e-7);
      }
  }
}

TEST_CASE("developable surfaces: K = 0 and the normal is constant along rulings") {
  const auto entries = cat::default_entries();
  for (const char* name : {"ruled", "cone", "tangent_developable"}) {
    const auto* e = cat::find_entry(entries, name);
    REQUIRE(e != nullptr);
    const SurfaceModel& s = *e->surface;
    CAPTURE(name);
    for (int i = 0; i < 10; ++i)
      for (int k = 0; k < 10; ++k) {
        const double u = s.u0 + (s.u1 - s.u0) * (i + 0.5) / 10;
        const double v = s.v0 + (s.v1 - s.v0) * (k + 0.5) / 10;
        REQUIRE(std::fabs(geo3::shape_and_curvatures(s, u, v).K) <= 1e-7);
      }
  }
  // tangent developable: rulings run along v, so n_v ≡ 0
  const SurfaceModel& td = *cat::find_entry(entries, "tangent_developable")->surface;
  for (int i = 0; i < 10; ++i)
    for (int k = 0; k < 10; ++k) {
      const double u = td.u0 + (td.u1 - td.u0) * (i + 0.5) / 10;
      const double v = td.v0 + (td.v1 - td.v0) * (k + 0.5) / 10;
      REQUIRE(geo3::norm(geo3::normal_jets(td, u, v).n_v) <= 1e-7);
    }
}

TEST_CASE("factories validate their parameters") {
  CHECK_THROWS_AS(cat::circle(0.0), GeomError);
  CHECK_THROWS_AS(cat::circle(-1.0), GeomError);
  CHECK_THROWS_AS(cat::helix(0.0, 1.0), GeomError);
  CHECK_THROWS_AS(cat::ellipse(2.0, 0.0), GeomError);
  CHECK_THROWS_AS(cat::torus(1.0, 2.0), GeomError);  // needs 0 < r < R
  CHECK_THROWS_AS(cat::torus(2.0, 0.0), GeomError);
  CHECK_THROWS_AS(cat::ellipsoid(0.0, 1.0, 1.0), GeomError);
  CHECK_THROWS_AS(cat::hyperboloid_two(1.0, 1.0, 1.0, 2), GeomError);
  CHECK_THROWS_AS(cat::cone(0.0, 1.0, 1.0), GeomError);
  CHECK_THROWS_AS(cat::helicoid(0.0), GeomError);
  // a revolution profile must stay off the rotation axis
  CHECK_THROWS_AS(cat::revolution(geo3::parse_curve("(t, 0, t) on [-1, 1]")), GeomError);
  // the tangent developable needs a curve with nonvanishing curvature
  CHECK_THROWS_AS(cat::tangent_developable(cat::line().curve.value()), GeomError);
}

TEST_CASE("catalog oracle forms are printable and nonempty where defined") {
  for (const auto& e : cat::default_entries()) {
    CAPTURE(e.name);
    if (e.kappa) REQUIRE_FALSE(e.kappa_form.empty());
    if (e.gauss) REQUIRE_FALSE(e.gauss_form.empty());
    if (e.level_set) REQUIRE_FALSE(e.level_set_form.empty());
  }
}
