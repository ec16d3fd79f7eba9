// geo3/catalog.hpp — ready-made classical curves and surfaces.
//
// Every entry carries a parsed model (so the DSL source round-trips), the
// parameter values it was built with, notes on its working domain and singular
// loci, and — where a closed form is documented — κ/τ or K/H as callable
// oracles plus printable formula strings.
//
// The `revolution`, `ruled`, and `tangent_developable` factories are
// combinators: they assemble a surface from curve models by expression-tree
// substitution and differentiation, then re-parse the printed result so the
// entry's label is always a valid DSL source.
#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "geo3/curve.hpp"
#include "geo3/error.hpp"
#include "geo3/expr.hpp"
#include "geo3/models.hpp"
#include "geo3/surface.hpp"

namespace geo3::catalog {

struct CatalogEntry {
  enum class Kind { curve, surface, implicit };

  std::string name;  // registry key, e.g. "torus"
  Kind kind = Kind::curve;
  std::optional<CurveModel> curve;
  std::optional<SurfaceModel> surface;

  // Companion level-set description F(x, y, z) = 0, when one is documented.
  std::optional<ImplicitSurface> level_set;
  std::string level_set_form;

  std::vector<std::pair<std::string, double>> params;
  std::string notes;  // working domain, singular loci, construction remarks

  // Closed-form invariants; an empty std::function means "no closed form
  // stored". Curves: κ(t), τ(t). Surfaces: K(u, v), H(u, v) with the normal
  // x_u × x_v / ‖x_u × x_v‖.
  std::function<double(double)> kappa, tau;
  std::function<double(double, double)> gauss, mean;
  std::string kappa_form, tau_form, gauss_form, mean_form;
};

namespace detail {

using geo3::detail::format_double;

inline std::string fmt(double v) { return format_double(v); }

// Number literal, parenthesized when negative so it can be juxtaposed.
inline std::string num(double v) {
  const std::string s = format_double(v);
  return v < 0.0 ? "(" + s + ")" : s;
}

// Coefficient times a symbolic body: "2 cos t", "cos t", "-cos t".
inline std::string term(double c, const std::string& body) {
  if (c == 1.0) return body;
  if (c == -1.0) return "-" + body;
  return num(c) + " " + body;
}

// c0 + Σ cᵢ·bodyᵢ with zero terms dropped.
inline std::string affine(double c0, const std::vector<std::pair<double, std::string>>& terms) {
  std::string out;
  for (const auto& [c, body] : terms) {
    if (c == 0.0) continue;
    if (!out.empty()) out += " + ";
    out += term(c, body);
  }
  if (out.empty()) return fmt(c0);
  return c0 == 0.0 ? out : fmt(c0) + " + " + out;
}

inline std::string tuple3(const std::string& x, const std::string& y, const std::string& z) {
  return "(" + x + ", " + y + ", " + z + ")";
}

inline std::string on1(const std::string& body, double a, double b) {
  return body + " on [" + fmt(a) + ", " + fmt(b) + "]";
}

inline std::string on2(const std::string& body, double u0, double u1, double v0, double v1) {
  return body + " on [" + fmt(u0) + ", " + fmt(u1) + "] x [" + fmt(v0) + ", " + fmt(v1) + "]";
}

inline constexpr double two_pi = 2.0 * std::numbers::pi;

inline CatalogEntry curve_entry(std::string name, const std::string& source) {
  CatalogEntry e;
  e.name = std::move(name);
  e.kind = CatalogEntry::Kind::curve;
  e.curve = parse_curve(source);
  return e;
}

inline CatalogEntry surface_entry(std::string name, const std::string& source) {
  CatalogEntry e;
  e.name = std::move(name);
  e.kind = CatalogEntry::Kind::surface;
  e.surface = parse_surface(source);
  return e;
}

// Rebuild a curve component over surface variables, t ↦ u.
inline Expr over_uv(const Expr& comp,
                    const std::shared_ptr<const std::vector<std::string>>& uv) {
  return substitute_all(comp, {{"t", Expr::variable("u", uv)}}, uv);
}

}  // namespace detail

// --------------------------------------------------------------------------
// Curves

/// Straight line t ↦ a + t·b.
inline CatalogEntry line(const Vec3& a = {1, 1, 0}, const Vec3& b = {1, 2, 2}) {
  using namespace detail;
  if (norm(b) <= 0.0) throw GeomError("a line needs a nonzero direction");
  auto comp = [&](double a_i, double b_i) { return affine(a_i, {{b_i, "t"}}); };
  CatalogEntry e = curve_entry(
      "line", on1(tuple3(comp(a.x, b.x), comp(a.y, b.y), comp(a.z, b.z)), -5.0, 5.0));
  e.params = {{"ax", a.x}, {"ay", a.y}, {"az", a.z}, {"bx", b.x}, {"by", b.y}, {"bz", b.z}};
  e.notes = "straight; curvature vanishes identically, so the Frenet frame is undefined";
  e.kappa = [](double) { return 0.0; };
  e.kappa_form = "0";
  return e;
}

/// Circle of radius r in the plane z = 0.
inline CatalogEntry circle(double r = 1.0) {
  using namespace detail;
  if (!(r > 0.0)) throw GeomError("circle radius must be positive");
  CatalogEntry e = curve_entry(
      "circle", on1(tuple3(term(r, "cos t"), term(r, "sin t"), "0"), 0.0, two_pi));
  e.params = {{"r", r}};
  e.notes = "planar, closed; constant curvature";
  e.kappa = [r](double) { return 1.0 / r; };
  e.tau = [](double) { return 0.0; };
  e.kappa_form = "1/" + fmt(r);
  e.tau_form = "0";
  return e;
}

/// Ellipse with semi-axes a, b in the plane z = 0.
inline CatalogEntry ellipse(double a = 2.0, double b = 1.0) {
  using namespace detail;
  if (!(a > 0.0 && b > 0.0)) throw GeomError("ellipse semi-axes must be positive");
  CatalogEntry e = curve_entry(
      "ellipse", on1(tuple3(term(a, "cos t"), term(b, "sin t"), "0"), 0.0, two_pi));
  e.params = {{"a", a}, {"b", b}};
  e.notes = "planar, closed; curvature peaks at the major-axis vertices";
  e.kappa = [a, b](double t) {
    const double s = std::sin(t), c = std::cos(t);
    return a * b / std::pow(a * a * s * s + b * b * c * c, 1.5);
  };
  e.tau = [](double) { return 0.0; };
  e.kappa_form = fmt(a * b) + "/(" + fmt(a * a) + " sin(t)^2 + " + fmt(b * b) + " cos(t)^2)^(3/2)";
  e.tau_form = "0";
  return e;
}

/// Circular helix of radius r and pitch slope h.
inline CatalogEntry helix(double r = 1.0, double h = 1.0) {
  using namespace detail;
  if (!(r > 0.0)) throw GeomError("helix radius must be positive");
  CatalogEntry e = curve_entry(
      "helix",
      on1(tuple3(term(r, "cos t"), term(r, "sin t"), term(h, "t")), 0.0, 2.0 * two_pi));
  e.params = {{"r", r}, {"h", h}};
  e.notes = "constant curvature and torsion; the model general helix";
  const double denom = r * r + h * h;
  e.kappa = [r, denom](double) { return r / denom; };
  e.tau = [h, denom](double) { return h / denom; };
  e.kappa_form = fmt(r) + "/" + fmt(denom);
  e.tau_form = fmt(h) + "/" + fmt(denom);
  return e;
}

/// Logarithmic spiral t ↦ e^t (cos t, sin t, 0).
inline CatalogEntry log_spiral() {
  using namespace detail;
  CatalogEntry e =
      curve_entry("log_spiral", on1(tuple3("e^t cos t", "e^t sin t", "0"), 0.0, two_pi));
  e.notes = "planar; curvature decays exponentially along the spiral";
  e.kappa = [](double t) { return std::exp(-t) / std::numbers::sqrt2; };
  e.tau = [](double) { return 0.0; };
  e.kappa_form = "e^(-t)/sqrt(2)";
  e.tau_form = "0";
  return e;
}

// --------------------------------------------------------------------------
// Surfaces

/// Plane through P0, P1, P2: (u, v) ↦ P0 + u(P1−P0) + v(P2−P0).
inline CatalogEntry plane(const Vec3& p0 = {0, 0, 0}, const Vec3& p1 = {1, 0, 0},
                          const Vec3& p2 = {0, 1, 0}) {
  using namespace detail;
  const Vec3 d1 = p1 - p0, d2 = p2 - p0;
  if (norm(cross(d1, d2)) <= 0.0)
    throw GeomError("a plane needs three points that are not collinear");
  auto comp = [&](double c, double e1, double e2) {
    return affine(c, {{e1, "u"}, {e2, "v"}});
  };
  CatalogEntry e = surface_entry(
      "plane", on2(tuple3(comp(p0.x, d1.x, d2.x), comp(p0.y, d1.y, d2.y), comp(p0.z, d1.z, d2.z)),
                   -2.0, 2.0, -2.0, 2.0));
  e.params = {{"P0x", p0.x}, {"P0y", p0.y}, {"P0z", p0.z}, {"P1x", p1.x}, {"P1y", p1.y},
              {"P1z", p1.z}, {"P2x", p2.x}, {"P2y", p2.y}, {"P2z", p2.z}};
  e.notes = "flat; both fundamental-form curvatures vanish";
  e.gauss = [](double, double) { return 0.0; };
  e.mean = [](double, double) { return 0.0; };
  e.gauss_form = "0";
  e.mean_form = "0";
  return e;
}

/// Unit sphere, latitude–longitude chart.
inline CatalogEntry sphere() {
  using namespace detail;
  CatalogEntry e = surface_entry(
      "sphere", on2(tuple3("cos u cos v", "cos u sin v", "sin u"), -1.3, 1.3, 0.0, two_pi));
  e.notes =
      "chart is singular at the poles cos u = 0, so the working u-window stays "
      "inside (-pi/2, pi/2); normal points inward";
  e.level_set = implicit_surface(parse_scalar("x^2 + y^2 + z^2 - 1", {"x", "y", "z"}));
  e.level_set_form = "x^2 + y^2 + z^2 - 1";
  e.gauss = [](double, double) { return 1.0; };
  e.mean = [](double, double) { return 1.0; };
  e.gauss_form = "1";
  e.mean_form = "1";
  return e;
}

/// Unit sphere again, with the chart rotated so its poles sit on the x-axis.
inline CatalogEntry sphere_chart2() {
  using namespace detail;
  CatalogEntry e = surface_entry(
      "sphere_chart2",
      on2(tuple3("cos u sin v", "sin u sin v", "cos v"), 0.0, two_pi, 0.3, std::numbers::pi - 0.3));
  e.notes =
      "companion chart singular where sin v = 0; together with `sphere` it covers "
      "the whole sphere";
  e.level_set = implicit_surface(parse_scalar("x^2 + y^2 + z^2 - 1", {"x", "y", "z"}));
  e.level_set_form = "x^2 + y^2 + z^2 - 1";
  e.gauss = [](double, double) { return 1.0; };
  e.mean = [](double, double) { return 1.0; };
  e.gauss_form = "1";
  e.mean_form = "1";
  return e;
}

/// Ellipsoid with semi-axes a, b, c (adjusted spherical chart).
inline CatalogEntry ellipsoid(double a = 1.5, double b = 1.0, double c = 0.75) {
  using namespace detail;
  if (!(a > 0.0 && b > 0.0 && c > 0.0)) throw GeomError("ellipsoid semi-axes must be positive");
  CatalogEntry e = surface_entry(
      "ellipsoid", on2(tuple3(term(a, "cos u cos v"), term(b, "cos u sin v"), term(c, "sin u")),
                       -1.3, 1.3, 0.0, two_pi));
  e.params = {{"a", a}, {"b", b}, {"c", c}};
  e.notes = "chart singular at cos u = 0 (as for the sphere); working window avoids the poles";
  const double A2 = a * a, B2 = b * b, C2 = c * c;
  e.gauss = [=](double u, double v) {
    const double cu = std::cos(u), su = std::sin(u), cv = std::cos(v), sv = std::sin(v);
    const double D = B2 * C2 * cu * cu * cv * cv + A2 * C2 * cu * cu * sv * sv + A2 * B2 * su * su;
    const double abc = a * b * c;
    return abc * abc / (D * D);
  };
  e.gauss_form = fmt(a * b * c) + "^2/(" + fmt(B2 * C2) + " cos(u)^2 cos(v)^2 + " +
                 fmt(A2 * C2) + " cos(u)^2 sin(v)^2 + " + fmt(A2 * B2) + " sin(u)^2)^2";
  return e;
}

/// Hyperboloid of one sheet.
inline CatalogEntry hyperboloid_one(double a = 1.0, double b = 1.0, double c = 1.0) {
  using namespace detail;
  if (!(a > 0.0 && b > 0.0 && c > 0.0))
    throw GeomError("hyperboloid semi-axes must be positive");
  CatalogEntry e = surface_entry(
      "hyperboloid_one",
      on2(tuple3(term(a, "cosh u cos v"), term(b, "cosh u sin v"), term(c, "sinh u")),
          -1.2, 1.2, 0.0, two_pi));
  e.params = {{"a", a}, {"b", b}, {"c", c}};
  e.notes = "regular everywhere; doubly ruled, saddle-shaped (K < 0)";
  return e;
}

/// One sheet of the hyperboloid of two sheets; sign picks the upper or lower cap.
inline CatalogEntry hyperboloid_two(double a = 1.0, double b = 1.0, double c = 1.0,
                                    int sign = +1) {
  using namespace detail;
  if (!(a > 0.0 && b > 0.0 && c > 0.0))
    throw GeomError("hyperboloid semi-axes must be positive");
  if (sign != 1 && sign != -1) throw GeomError("hyperboloid sheet sign must be +1 or -1");
  CatalogEntry e = surface_entry(
      "hyperboloid_two",
      on2(tuple3(term(a, "sinh u cos v"), term(b, "sinh u sin v"), term(sign * c, "cosh u")),
          0.2, 1.5, 0.0, two_pi));
  e.params = {{"a", a}, {"b", b}, {"c", c}, {"sign", double(sign)}};
  e.notes = "chart singular at the cap point u = 0; working window starts above it";
  return e;
}

/// Elliptic cone (apex at the origin).
inline CatalogEntry cone(double a = 1.0, double b = 1.0, double c = 1.0) {
  using namespace detail;
  if (a == 0.0 || b == 0.0 || c == 0.0) throw GeomError("cone needs nonzero axis scales");
  CatalogEntry e = surface_entry(
      "cone", on2(tuple3(term(a, "u cos v"), term(b, "u sin v"), term(c, "u")),
                  0.2, 1.5, 0.0, two_pi));
  e.params = {{"a", a}, {"b", b}, {"c", c}};
  e.notes = "singular exactly at the apex u = 0; developable away from it (K = 0)";
  e.gauss = [](double, double) { return 0.0; };
  e.gauss_form = "0";
  return e;
}

namespace detail {

// Shared Monge-chart entry (u, v, f(u, v)) for the paraboloids; closed forms
// follow from the graph formulas with the upward normal (−f_u, −f_v, 1)/‖·‖.
inline CatalogEntry graph_paraboloid(std::string name, double a, double b, double c,
                                     double sign_v) {
  if (!(a > 0.0 && b > 0.0) || c == 0.0)
    throw GeomError("paraboloid needs positive a, b and nonzero c");
  const double cu = c / (a * a), cv = sign_v * c / (b * b);
  std::string z = term(cu, "u^2");
  z += cv < 0.0 ? " - " + term(-cv, "v^2") : " + " + term(cv, "v^2");
  CatalogEntry e = surface_entry(std::move(name), on2(tuple3("u", "v", z), -1.5, 1.5, -1.5, 1.5));
  e.params = {{"a", a}, {"b", b}, {"c", c}};
  e.gauss = [cu, cv](double u, double v) {
    const double fu = 2.0 * cu * u, fv = 2.0 * cv * v;
    const double w = 1.0 + fu * fu + fv * fv;
    return 4.0 * cu * cv / (w * w);
  };
  e.mean = [cu, cv](double u, double v) {
    const double fu = 2.0 * cu * u, fv = 2.0 * cv * v;
    const double w = 1.0 + fu * fu + fv * fv;
    return ((1.0 + fv * fv) * 2.0 * cu + (1.0 + fu * fu) * 2.0 * cv) / (2.0 * std::pow(w, 1.5));
  };
  const std::string w =
      "(1 + " + term(4.0 * cu * cu, "u^2") + " + " + term(4.0 * cv * cv, "v^2") + ")";
  e.gauss_form = fmt(4.0 * cu * cv) + "/" + w + "^2";
  const std::string hu = "(1 + " + term(4.0 * cv * cv, "v^2") + ")";
  const std::string hv = "(1 + " + term(4.0 * cu * cu, "u^2") + ")";
  std::string htop = term(2.0 * cu, hu);
  htop += cv < 0.0 ? " - " + term(-2.0 * cv, hv) : " + " + term(2.0 * cv, hv);
  e.mean_form = "(" + htop + ")/(2 sqrt" + w + "^3)";
  return e;
}

}  // namespace detail

/// Elliptic paraboloid z/c = x²/a² + y²/b², as a graph chart.
inline CatalogEntry elliptic_paraboloid(double a = 1.0, double b = 1.0, double c = 1.0) {
  CatalogEntry e = detail::graph_paraboloid("elliptic_paraboloid", a, b, c, +1.0);
  e.notes = "graph chart, regular everywhere; bowl-shaped (K > 0)";
  return e;
}

/// Hyperbolic paraboloid z/c = x²/a² − y²/b², as a graph chart.
inline CatalogEntry hyperbolic_paraboloid(double a = 1.0, double b = 1.0, double c = 1.0) {
  CatalogEntry e = detail::graph_paraboloid("hyperbolic_paraboloid", a, b, c, -1.0);
  e.notes = "graph chart, regular everywhere; saddle-shaped (K < 0)";
  return e;
}

/// Torus of revolution: tube radius r around a circle of radius R, 0 < r < R.
inline CatalogEntry torus(double R = 2.0, double r = 1.0) {
  using namespace detail;
  if (!(0.0 < r && r < R)) throw GeomError("torus needs 0 < r < R");
  const std::string ring = "(" + fmt(R) + " + " + term(r, "cos u") + ")";
  CatalogEntry e = surface_entry(
      "torus", on2(tuple3(ring + " cos v", ring + " sin v", term(r, "sin u")),
                   0.0, two_pi, 0.0, two_pi));
  e.params = {{"R", R}, {"r", r}};
  e.notes =
      "regular everywhere; K changes sign between the outer (u = 0) and inner "
      "(u = pi) equators";
  e.level_set = implicit_surface(
      parse_scalar("(sqrt(x^2 + y^2) - " + fmt(R) + ")^2 + z^2 - " + fmt(r * r), {"x", "y", "z"}));
  e.level_set_form = "(sqrt(x^2 + y^2) - " + fmt(R) + ")^2 + z^2 - " + fmt(r * r);
  e.gauss = [R, r](double u, double) {
    return std::cos(u) / (r * (R + r * std::cos(u)));
  };
  e.mean = [R, r](double u, double) {
    return (R + 2.0 * r * std::cos(u)) / (2.0 * r * (R + r * std::cos(u)));
  };
  const std::string inner = fmt(R) + " + " + term(r, "cos(u)");
  const auto denom = [&](double c) {
    return c == 1.0 ? "(" + inner + ")" : "(" + fmt(c) + " (" + inner + "))";
  };
  e.gauss_form = "cos(u)/" + denom(r);
  e.mean_form = "(" + fmt(R) + " + " + term(2.0 * r, "cos(u)") + ")/" + denom(2.0 * r);
  return e;
}

/// Circular helicoid with pitch scale c.
inline CatalogEntry helicoid(double c = 1.0) {
  using namespace detail;
  if (c == 0.0) throw GeomError("helicoid pitch must be nonzero");
  CatalogEntry e = surface_entry(
      "helicoid", on2(tuple3("sinh u cos v", "sinh u sin v", term(c, "v")),
                      -1.5, 1.5, 0.0, two_pi));
  e.params = {{"c", c}};
  e.notes = "regular everywhere; ruled minimal surface swept by a rotating ray";
  e.gauss = [c](double u, double) {
    const double d = c * c + std::sinh(u) * std::sinh(u);
    return -c * c / (d * d);
  };
  e.mean = [](double, double) { return 0.0; };
  e.gauss_form = "-" + fmt(c * c) + "/(" + fmt(c * c) + " + sinh(u)^2)^2";
  e.mean_form = "0";
  return e;
}

/// Helicoid in the radial chart (u cos v, u sin v, c v).
inline CatalogEntry simple_helicoid(double c = 1.0) {
  using namespace detail;
  if (c == 0.0) throw GeomError("helicoid pitch must be nonzero");
  CatalogEntry e = surface_entry(
      "simple_helicoid", on2(tuple3("u cos v", "u sin v", term(c, "v")),
                             -1.5, 1.5, 0.0, two_pi));
  e.params = {{"c", c}};
  e.notes = "same surface as `helicoid` under u ↦ sinh u; regular for c ≠ 0";
  e.gauss = [c](double u, double) {
    const double d = c * c + u * u;
    return -c * c / (d * d);
  };
  e.mean = [](double, double) { return 0.0; };
  e.gauss_form = "-" + fmt(c * c) + "/(" + fmt(c * c) + " + u^2)^2";
  e.mean_form = "0";
  return e;
}

/// Catenoid: the surface of revolution of the catenary cosh.
inline CatalogEntry catenoid() {
  using namespace detail;
  CatalogEntry e = surface_entry(
      "catenoid", on2(tuple3("cosh u cos v", "cosh u sin v", "u"), -1.5, 1.5, 0.0, two_pi));
  e.notes = "minimal surface of revolution; regular everywhere";
  e.gauss = [](double u, double) {
    const double ch = std::cosh(u);
    return -1.0 / (ch * ch * ch * ch);
  };
  e.mean = [](double, double) { return 0.0; };
  e.gauss_form = "-1/cosh(u)^4";
  e.mean_form = "0";
  return e;
}

/// Enneper's surface in the cubic chart.
inline CatalogEntry enneper() {
  using namespace detail;
  CatalogEntry e = surface_entry(
      "enneper", on2(tuple3("u^3 - 3 u (1 + v^2)", "v^3 - 3 v (1 + u^2)", "3 (u^2 - v^2)"),
                     -1.0, 1.0, -1.0, 1.0));
  e.notes = "conformally parametrized minimal surface: E = G, F = 0, H = 0";
  e.gauss = [](double u, double v) {
    const double s = 1.0 + u * u + v * v;
    return -4.0 / (9.0 * s * s * s * s);
  };
  e.mean = [](double, double) { return 0.0; };
  e.gauss_form = "-4/(9 (1 + u^2 + v^2)^4)";
  e.mean_form = "0";
  return e;
}

/// Surface of revolution of the planar profile t ↦ (x(t), y(t), 0), x(t) ≠ 0,
/// rotated about the z-axis: (u, v) ↦ (x(u) cos v, x(u) sin v, y(u)).
inline CatalogEntry revolution(const CurveModel& profile) {
  using namespace detail;
  // the profile must stay clear of the rotation axis
  for (int i = 0; i < 33; ++i) {
    const double t = profile.t0 + (profile.t1 - profile.t0) * i / 32.0;
    if (std::fabs(profile.x.eval({t})) <= 1e-12)
      throw GeomError("revolution profile touches the rotation axis (x(t) = 0)");
  }
  auto uv = Expr::make_vars({"u", "v"});
  const Expr v = Expr::variable("v", uv);
  const Expr px = over_uv(profile.x, uv), py = over_uv(profile.y, uv);
  const Expr X = px * cos(v), Y = px * sin(v), Z = py;
  CatalogEntry e = surface_entry(
      "revolution",
      on2(tuple3(X.str(), Y.str(), Z.str()), profile.t0, profile.t1, 0.0, two_pi));
  e.notes = "built by rotating the profile (" + profile.x.str() + ", " + profile.y.str() +
            ") about the z-axis; parallels v ↦ x(u0, v) are circles";
  return e;
}

/// Ruled surface x(u, v) = γ(u) + v·η(u) from a base curve and a director curve
/// over the same parameter interval.
inline CatalogEntry ruled(const CurveModel& base, const CurveModel& director, double v0 = -1.0,
                          double v1 = 1.0) {
  using namespace detail;
  if (!(v0 < v1)) throw GeomError("ruled surface needs v0 < v1");
  auto uv = Expr::make_vars({"u", "v"});
  const Expr v = Expr::variable("v", uv);
  auto comp = [&](const Expr& g, const Expr& d) { return over_uv(g, uv) + v * over_uv(d, uv); };
  const Expr X = comp(base.x, director.x), Y = comp(base.y, director.y),
             Z = comp(base.z, director.z);
  CatalogEntry e = surface_entry(
      "ruled", on2(tuple3(X.str(), Y.str(), Z.str()), base.t0, base.t1, v0, v1));
  e.notes = "rulings v ↦ x(u0, v) are straight lines, so the surface bends only "
            "tangentially along them";
  return e;
}

/// Tangent developable of a curve with nonvanishing curvature:
/// x(u, v) = γ(u) + v·γ'(u), v > 0 (the edge v = 0 is singular).
inline CatalogEntry tangent_developable(const CurveModel& gamma, double v_min = 1e-3,
                                        double v_max = 1.0) {
  using namespace detail;
  if (!(0.0 < v_min && v_min < v_max))
    throw GeomError("tangent developable needs 0 < v_min < v_max");
  for (int i = 0; i < 33; ++i) {
    const double t = gamma.t0 + (gamma.t1 - gamma.t0) * i / 32.0;
    const auto ct = curvature_torsion(gamma, t);
    if (!(ct.kappa > kSpeedEps))
      throw GeomError("tangent developable needs a curve with nonvanishing curvature");
  }
  auto uv = Expr::make_vars({"u", "v"});
  const Expr v = Expr::variable("v", uv);
  auto comp = [&](const Expr& g) {
    return over_uv(g, uv) + v * over_uv(derivative(g, "t"), uv);
  };
  const Expr X = comp(gamma.x), Y = comp(gamma.y), Z = comp(gamma.z);
  CatalogEntry e = surface_entry(
      "tangent_developable",
      on2(tuple3(X.str(), Y.str(), Z.str()), gamma.t0, gamma.t1, v_min, v_max));
  e.notes = "swept by the tangent lines of its edge curve; flat (K = 0) with the "
            "normal constant along each ruling; singular at the edge v = 0";
  e.gauss = [](double, double) { return 0.0; };
  e.gauss_form = "0";
  return e;
}

// --------------------------------------------------------------------------
// Registry

/// Every entry with its default parameters. The combinator presets are a
/// cylinder as a surface of revolution (profile x = 1), a cylinder as a ruled
/// surface (circle base, vertical rulings), and the tangent developable of the
/// unit-pitch helix.
inline std::vector<CatalogEntry> default_entries() {
  using namespace detail;
  std::vector<CatalogEntry> all;
  all.push_back(line());
  all.push_back(circle());
  all.push_back(ellipse());
  all.push_back(helix());
  all.push_back(log_spiral());
  all.push_back(plane());
  all.push_back(sphere());
  all.push_back(sphere_chart2());
  all.push_back(ellipsoid());
  all.push_back(hyperboloid_one());
  all.push_back(hyperboloid_two());
  all.push_back(cone());
  all.push_back(elliptic_paraboloid());
  all.push_back(hyperbolic_paraboloid());
  all.push_back(torus());
  all.push_back(helicoid());
  all.push_back(simple_helicoid());
  all.push_back(catenoid());
  all.push_back(enneper());

  CatalogEntry rev = revolution(parse_curve("(1, t, 0) on [-1, 1]"));
  rev.gauss = [](double, double) { return 0.0; };
  rev.mean = [](double, double) { return 0.5; };
  rev.gauss_form = "0";
  rev.mean_form = "1/2";
  all.push_back(std::move(rev));

  CatalogEntry rl = ruled(parse_curve("(cos t, sin t, 0) on [0, " + fmt(two_pi) + "]"),
                          parse_curve("(0, 0, 1) on [0, " + fmt(two_pi) + "]"));
  rl.gauss = [](double, double) { return 0.0; };
  rl.mean = [](double, double) { return -0.5; };
  rl.gauss_form = "0";
  rl.mean_form = "-1/2";
  all.push_back(std::move(rl));

  all.push_back(tangent_developable(
      parse_curve("(cos t, sin t, t) on [0, " + fmt(two_pi) + "]")));
  return all;
}

inline const CatalogEntry* find_entry(const std::vector<CatalogEntry>& entries,
                                      std::string_view name) {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace geo3::catalog
