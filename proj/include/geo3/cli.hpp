// geo3/cli.hpp — the `geo3` command-line driver.
//
// Subcommands:
//   curve    info | frames | length | reparam | tests | reconstruct
//   strip    invariants | parallel
//   surface  forms | curvatures | classify | christoffel | check
//   geodesic trace | check
//   catalog  list | show
//   eval
//
// A model argument is resolved in order: catalog entry name (no parentheses),
// inline DSL source (contains '('), file path containing DSL source.
//
// Exit codes: 0 success; 1 usage or input-syntax error; 2 evaluation/geometry
// error; 3 a `check` subcommand found residuals above threshold.
//
// GEO3_TOLERANCE (or --tolerance) overrides the arc-length quadrature
// tolerance and the residual thresholds of the check subcommands.
#pragma once

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "geo3/catalog.hpp"
#include "geo3/curve.hpp"
#include "geo3/expr.hpp"
#include "geo3/geodesic.hpp"
#include "geo3/models.hpp"
#include "geo3/report.hpp"
#include "geo3/strip.hpp"
#include "geo3/surface.hpp"

namespace geo3::cli {

namespace detail {

using geo3::detail::format_double;

inline std::string trim_all(std::string s) {
  const char* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

/// Constant numeric argument; full scalar DSL is allowed ("pi/4").
inline double const_value(const std::string& src, const std::string& what) {
  try {
    const Expr e = parse_scalar(src, {});
    return e.eval(std::initializer_list<double>{});
  } catch (const Error& err) {
    throw ParseError(what + " '" + src + "': " + err.what(), 0);
  }
}

/// "a,b" as two constant values.
inline std::pair<double, double> const_pair(const std::string& src, const std::string& what) {
  const auto comma = src.find(',');
  if (comma == std::string::npos || src.find(',', comma + 1) != std::string::npos)
    throw ParseError(what + " '" + src + "' must have the form 'a,b'", 0);
  return {const_value(src.substr(0, comma), what),
          const_value(src.substr(comma + 1), what)};
}

/// "NxM" grid sizes, both ≥ 2.
inline std::pair<int, int> grid_sizes(const std::string& src) {
  const auto x = src.find('x');
  int n = 0, m = 0;
  try {
    n = std::stoi(src.substr(0, x));
    m = std::stoi(src.substr(x + 1));
  } catch (...) {
    throw ParseError("grid '" + src + "' must have the form 'NxM'", 0);
  }
  if (x == std::string::npos || n < 2 || m < 2)
    throw ParseError("grid '" + src + "' must have the form 'NxM' with N, M >= 2", 0);
  return {n, m};
}

inline std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f)
    throw ParseError("model source '" + path +
                         "' is neither a catalog name, an inline '(...)' description, nor a "
                         "readable file",
                     0);
  std::ostringstream ss;
  ss << f.rdbuf();
  return trim_all(ss.str());
}

inline CurveModel resolve_curve(const std::string& src) {
  if (src.find('(') != std::string::npos) return parse_curve(src);
  const auto entries = catalog::default_entries();
  if (const auto* e = catalog::find_entry(entries, src)) {
    if (e->curve) return *e->curve;
    throw GeomError("catalog entry '" + src + "' is a surface, not a curve");
  }
  return parse_curve(slurp(src));
}

inline SurfaceModel resolve_surface(const std::string& src) {
  if (src.find('(') != std::string::npos) return parse_surface(src);
  const auto entries = catalog::default_entries();
  if (const auto* e = catalog::find_entry(entries, src)) {
    if (e->surface) return *e->surface;
    throw GeomError("catalog entry '" + src + "' is a curve, not a surface");
  }
  return parse_surface(slurp(src));
}

/// "(nx, ny, nz)" over t — the normal field of a strip.
inline std::array<Expr, 3> parse_vector_over_t(const std::string& src) {
  geo3::detail::Parser p(src, Expr::make_vars({"t"}));
  auto vars = p.vars_handle();
  auto comps = geo3::detail::parse_tuple(p, 3, "a normal field");
  p.expect_end();
  return {Expr(comps[0], vars), Expr(comps[1], vars), Expr(comps[2], vars)};
}

/// "(u(t), v(t)) on [a, b]" — a curve in a surface's parameter plane.
inline ParamCurve parse_param_curve(SurfaceModel surface, const std::string& src) {
  geo3::detail::Parser p(src, Expr::make_vars({"t"}));
  auto vars = p.vars_handle();
  auto comps = geo3::detail::parse_tuple(p, 2, "a parameter-plane curve");
  if (!p.eat_ident("on")) p.fail("expected 'on [a, b]' after the parameter-plane components");
  const auto [a, b] = p.interval();
  p.expect_end();
  return param_curve(std::move(surface), Expr(comps[0], vars), Expr(comps[1], vars), a, b);
}

inline std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = a + (b - a) * i / (n - 1);
  return xs;
}

/// Indices that downsample M trace rows to at most n table rows.
inline std::vector<std::size_t> pick_rows(std::size_t m, int n) {
  std::vector<std::size_t> idx;
  if (m == 0) return idx;
  if (n < 2 || static_cast<std::size_t>(n) >= m) {
    idx.resize(m);
    for (std::size_t i = 0; i < m; ++i) idx[i] = i;
    return idx;
  }
  idx.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    idx[static_cast<std::size_t>(i)] = (m - 1) * static_cast<std::size_t>(i) / (n - 1);
  return idx;
}

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string vec_str(const Vec3& v) {
  return "(" + format_double(v.x) + ", " + format_double(v.y) + ", " + format_double(v.z) + ")";
}

}  // namespace detail

struct Options {
  std::string format = "table";
  std::string out_path;
  std::optional<double> tolerance;

  double quad_tol() const { return tolerance.value_or(1e-10); }
  double check_tol(double pinned) const { return tolerance.value_or(pinned); }
};

inline void emit(const SampleTable& t, const Options& opt, std::ostream& out) {
  OutputFormat f = OutputFormat::table;
  if (opt.format == "csv") f = OutputFormat::csv;
  else if (opt.format == "json") f = OutputFormat::json;
  if (!opt.out_path.empty()) {
    std::ofstream file(opt.out_path);
    if (!file) throw ParseError("cannot open output file '" + opt.out_path + "'", 0);
    write_table(t, f, file);
  } else {
    write_table(t, f, out);
  }
}

/// Run the CLI on argv (program name excluded). Returns the process exit code.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  using namespace detail;

  CLI::App app{"differential geometry of parametrized curves and surfaces"};
  app.name("geo3");
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("GEO3_TOLERANCE")) {
    try {
      opt.tolerance = const_value(env, "GEO3_TOLERANCE");
    } catch (const ParseError&) {
      err << "geo3: GEO3_TOLERANCE is not a number: '" << env << "'\n";
      return 1;
    }
  }

  // shared flags, attached to every leaf subcommand
  auto add_output_flags = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    sub->add_option("--out", opt.out_path, "write output to this file instead of stdout");
    sub->add_option_function<double>(
        "--tolerance", [&](double v) { opt.tolerance = v; },
        "override quadrature tolerance / check thresholds");
  };

  int exit_code = 0;
  std::string model_src, at_src, grid_src = "10x10";
  int samples = 100;

  // ---------------------------------------------------------------- curve
  auto* curve_cmd = app.add_subcommand("curve", "operations on space curves");
  curve_cmd->require_subcommand(1);

  auto add_curve_model = [&](CLI::App* sub) {
    sub->add_option("model", model_src, "curve: catalog name, \"(x, y, z) on [a, b]\", or file")
        ->required();
  };

  {
    auto* c = curve_cmd->add_subcommand("info", "position, speed, curvature, torsion");
    add_curve_model(c);
    c->add_option("--at", at_src, "single parameter value (default: sweep the domain)");
    c->add_option("--samples", samples, "sample count for sweeps");
    add_output_flags(c);
    c->callback([&] {
      const CurveModel m = resolve_curve(model_src);
      if (at_src.empty() && samples < 2) throw ParseError("--samples must be at least 2", 0);
      const auto reg = is_regular(m, 100);
      SampleTable t;
      t.name = "curve info";
      t.params = {{"model", m.label},
                  {"regular", yes_no(reg.regular)},
                  {"min_speed", format_double(reg.min_speed)}};
      t.columns = {"t", "x", "y", "z", "speed", "kappa", "tau"};
      const std::vector<double> ts = at_src.empty()
                                         ? linspace(m.t0, m.t1, samples)
                                         : std::vector<double>{const_value(at_src, "--at")};
      for (double tv : ts) {
        const auto ct = curvature_torsion(m, tv);
        const Vec3 p = m.point(tv);
        t.push({num_cell(tv), num_cell(p.x), num_cell(p.y), num_cell(p.z), num_cell(ct.speed),
                num_cell(ct.kappa),
                num_cell(ct.tau_defined ? ct.tau : std::nan(""))});
      }
      emit(t, opt, out);
    });
  }

  {
    auto* c = curve_cmd->add_subcommand("frames", "Frenet frame along the curve");
    add_curve_model(c);
    c->add_option("--at", at_src, "single parameter value (default: sweep the domain)");
    c->add_option("--samples", samples, "sample count for sweeps");
    add_output_flags(c);
    c->callback([&] {
      const CurveModel m = resolve_curve(model_src);
      if (at_src.empty() && samples < 2) throw ParseError("--samples must be at least 2", 0);
      SampleTable t;
      t.name = "curve frames";
      t.params = {{"model", m.label}};
      t.columns = {"t",  "Tx", "Ty", "Tz", "Nx",    "Ny",  "Nz",
                   "Bx", "By", "Bz", "kappa", "tau"};
      const std::vector<double> ts = at_src.empty()
                                         ? linspace(m.t0, m.t1, samples)
                                         : std::vector<double>{const_value(at_src, "--at")};
      const double nan = std::nan("");
      for (double tv : ts) {
        const auto ct = curvature_torsion(m, tv);
        const bool fd = ct.frame_defined;
        t.push({num_cell(tv), num_cell(ct.T.x), num_cell(ct.T.y), num_cell(ct.T.z),
                num_cell(fd ? ct.N.x : nan), num_cell(fd ? ct.N.y : nan),
                num_cell(fd ? ct.N.z : nan), num_cell(fd ? ct.B.x : nan),
                num_cell(fd ? ct.B.y : nan), num_cell(fd ? ct.B.z : nan), num_cell(ct.kappa),
                num_cell(ct.tau_defined ? ct.tau : nan)});
      }
      emit(t, opt, out);
    });
  }

  std::string from_src, to_src;
  {
    auto* c = curve_cmd->add_subcommand("length", "arc length by adaptive quadrature");
    add_curve_model(c);
    c->add_option("--from", from_src, "lower parameter bound (default: domain start)");
    c->add_option("--to", to_src, "upper parameter bound (default: domain end)");
    add_output_flags(c);
    c->callback([&] {
      const CurveModel m = resolve_curve(model_src);
      const double a = from_src.empty() ? m.t0 : const_value(from_src, "--from");
      const double b = to_src.empty() ? m.t1 : const_value(to_src, "--to");
      const double len = arc_length(m, a, b, opt.quad_tol());
      SampleTable t;
      t.name = "curve length";
      t.params = {{"model", m.label}};
      t.columns = {"from", "to", "length"};
      t.push({num_cell(a), num_cell(b), num_cell(len)});
      emit(t, opt, out);
    });
  }

  {
    auto* c = curve_cmd->add_subcommand(
        "reparam", "sample the curve at equal steps of arc length");
    add_curve_model(c);
    c->add_option("--samples", samples, "number of arc-length samples");
    add_output_flags(c);
    c->callback([&] {
      const CurveModel m = resolve_curve(model_src);
      if (samples < 2) throw ParseError("--samples must be at least 2", 0);
      const double total = arc_length(m, m.t0, m.t1, opt.quad_tol());
      SampleTable t;
      t.name = "curve reparam";
      t.params = {{"model", m.label}, {"total_length", format_double(total)}};
      t.columns = {"s", "t", "x", "y", "z"};
      for (int i = 0; i < samples; ++i) {
        const double s = total * i / (samples - 1);
        const double tv = param_by_arc_length(m, s, m.t0);
        const Vec3 p = m.point(tv);
        t.push({num_cell(s), num_cell(tv), num_cell(p.x), num_cell(p.y), num_cell(p.z)});
      }
      emit(t, opt, out);
    });
  }

  {
    auto* c = curve_cmd->add_subcommand("tests",
                                        "global shape tests: planar, general helix, spherical");
    add_curve_model(c);
    c->add_option("--samples", samples, "interior sample count");
    add_output_flags(c);
    c->callback([&] {
      const CurveModel m = resolve_curve(model_src);
      const auto rep = shape_tests(m, std::max(samples, 4));
      SampleTable t;
      t.name = "curve tests";
      t.params = {{"model", m.label},
                  {"planar", yes_no(rep.planar)},
                  {"general_helix", yes_no(rep.general_helix)},
                  {"spherical", yes_no(rep.spherical)},
                  {"max_abs_tau", format_double(rep.max_abs_tau)},
                  {"tau_over_kappa_stdev", format_double(rep.ratio_stdev)},
                  {"sphere_center", vec_str(rep.sphere_center)},
                  {"sphere_residual", format_double(rep.sphere_residual)},
                  {"excluded_samples", std::to_string(rep.excluded_samples)}};
      for (const auto& w : rep.warnings) t.params.emplace_back("warning", w);
      emit(t, opt, out);
    });
  }

  std::string kappa_src, tau_src, s0_src = "0", s1_src = "2 pi";
  {
    auto* c = curve_cmd->add_subcommand(
        "reconstruct", "rebuild a curve from curvature and torsion given as functions of arc length");
    c->add_option("--kappa", kappa_src, "curvature as an expression in s (must stay positive)")
        ->required();
    c->add_option("--tau", tau_src, "torsion as an expression in s")->required();
    c->add_option("--s0", s0_src, "start of the arc-length range");
    c->add_option("--s1", s1_src, "end of the arc-length range");
    c->add_option("--samples", samples, "number of emitted rows");
    add_output_flags(c);
    c->callback([&] {
      const Expr k = parse_scalar(kappa_src, {"s"});
      const Expr ta = parse_scalar(tau_src, {"s"});
      const double s0 = const_value(s0_src, "--s0"), s1 = const_value(s1_src, "--s1");
      const auto trace = reconstruct(k, ta, s0, s1);
      SampleTable t;
      t.name = "curve reconstruct";
      t.params = {{"kappa", k.str()}, {"tau", ta.str()}};
      t.columns = {"s",  "x",  "y",  "z",  "Tx", "Ty", "Tz",
                   "Nx", "Ny", "Nz", "Bx", "By", "Bz"};
      for (std::size_t i : pick_rows(trace.size(), samples)) {
        const auto& f = trace[i];
        t.push({num_cell(f.s), num_cell(f.p.x), num_cell(f.p.y), num_cell(f.p.z),
                num_cell(f.T.x), num_cell(f.T.y), num_cell(f.T.z), num_cell(f.N.x),
                num_cell(f.N.y), num_cell(f.N.z), num_cell(f.B.x), num_cell(f.B.y),
                num_cell(f.B.z)});
      }
      emit(t, opt, out);
    });
  }

  // ---------------------------------------------------------------- strip
  auto* strip_cmd = app.add_subcommand("strip", "curves carrying a unit normal field");
  strip_cmd->require_subcommand(1);
  std::string normal_src;
  double phi0 = 0.0;

  auto add_strip_model = [&](CLI::App* sub) {
    add_curve_model(sub);
    sub->add_option("--normal", normal_src,
                    "unit normal field \"(nx, ny, nz)\" over t, orthogonal to the tangent")
        ->required();
  };

  {
    auto* c = strip_cmd->add_subcommand("invariants",
                                        "normal curvature, geodesic curvature, strip torsion");
    add_strip_model(c);
    c->add_option("--at", at_src, "single parameter value (default: sweep the domain)");
    c->add_option("--samples", samples, "sample count for sweeps");
    add_output_flags(c);
    c->callback([&] {
      const CurveModel m = resolve_curve(model_src);
      auto [nx, ny, nz] = parse_vector_over_t(normal_src);
      const Strip s = make_strip(m, nx, ny, nz);
      if (at_src.empty() && samples < 2) throw ParseError("--samples must be at least 2", 0);
      SampleTable t;
      t.name = "strip invariants";
      t.params = {{"model", m.label}, {"normal", normal_src}};
      t.columns = {"t", "kappa_n", "kappa_g", "tau_strip"};
      const std::vector<double> ts = at_src.empty()
                                         ? linspace(m.t0, m.t1, samples)
                                         : std::vector<double>{const_value(at_src, "--at")};
      for (double tv : ts) {
        const auto inv = strip_invariants(s, tv);
        t.push({num_cell(tv), num_cell(inv.kappa_n), num_cell(inv.kappa_g),
                num_cell(inv.tau_strip)});
      }
      emit(t, opt, out);
    });
  }

  {
    auto* c = strip_cmd->add_subcommand(
        "parallel", "rotation-minimizing (parallel) normal field along the curve");
    add_strip_model(c);
    c->add_option("--phi0", phi0, "initial rotation angle");
    c->add_option("--samples", samples, "number of emitted rows");
    add_output_flags(c);
    c->callback([&] {
      const CurveModel m = resolve_curve(model_src);
      auto [nx, ny, nz] = parse_vector_over_t(normal_src);
      const Strip s = make_strip(m, nx, ny, nz);
      const auto field = parallel_normal_field(s, m.t0, m.t1, phi0);
      SampleTable t;
      t.name = "strip parallel";
      t.params = {{"model", m.label}, {"normal", normal_src}};
      t.columns = {"t", "phi", "nx", "ny", "nz"};
      for (std::size_t i : pick_rows(field.size(), samples)) {
        const auto& f = field[i];
        t.push({num_cell(f.t), num_cell(f.phi), num_cell(f.normal.x), num_cell(f.normal.y),
                num_cell(f.normal.z)});
      }
      emit(t, opt, out);
    });
  }

  // ---------------------------------------------------------------- surface
  auto* surface_cmd = app.add_subcommand("surface", "operations on parametrized surfaces");
  surface_cmd->require_subcommand(1);

  auto add_surface_model = [&](CLI::App* sub) {
    sub->add_option("model", model_src,
                    "surface: catalog name, \"(x, y, z) on [a, b] x [c, d]\", or file")
        ->required();
  };

  // points of a surface sweep: either --at "u,v" or an inclusive grid
  auto surface_points = [&](const SurfaceModel& m) {
    std::vector<std::pair<double, double>> pts;
    if (!at_src.empty()) {
      pts.push_back(const_pair(at_src, "--at"));
      return pts;
    }
    const auto [nu, nv] = grid_sizes(grid_src);
    for (double u : linspace(m.u0, m.u1, nu))
      for (double v : linspace(m.v0, m.v1, nv)) pts.emplace_back(u, v);
    return pts;
  };

  auto add_surface_point_flags = [&](CLI::App* sub) {
    sub->add_option("--at", at_src, "single point \"u,v\" (default: sweep a grid)");
    sub->add_option("--grid", grid_src, "grid size NxM for sweeps");
  };

  {
    auto* c = surface_cmd->add_subcommand("forms", "first and second fundamental forms");
    add_surface_model(c);
    add_surface_point_flags(c);
    add_output_flags(c);
    c->callback([&] {
      const SurfaceModel m = resolve_surface(model_src);
      SampleTable t;
      t.name = "surface forms";
      t.params = {{"model", m.label}};
      t.columns = {"u", "v", "E", "F", "G", "e", "f", "g"};
      for (auto [u, v] : surface_points(m)) {
        const auto I = first_form(m, u, v);
        const auto II = second_form(m, u, v);
        t.push({num_cell(u), num_cell(v), num_cell(I.E), num_cell(I.F), num_cell(I.G),
                num_cell(II.e), num_cell(II.f), num_cell(II.g)});
      }
      emit(t, opt, out);
    });
  }

  {
    auto* c = surface_cmd->add_subcommand("curvatures",
                                          "Gauss/mean curvature and principal directions");
    add_surface_model(c);
    add_surface_point_flags(c);
    add_output_flags(c);
    c->callback([&] {
      const SurfaceModel m = resolve_surface(model_src);
      SampleTable t;
      t.name = "surface curvatures";
      t.params = {{"model", m.label}};
      t.columns = {"u",      "v",      "K",      "H",      "kappa1", "kappa2",
                   "dir1_u", "dir1_v", "dir2_u", "dir2_v", "umbilic"};
      for (auto [u, v] : surface_points(m)) {
        const auto b = shape_and_curvatures(m, u, v);
        t.push({num_cell(u), num_cell(v), num_cell(b.K), num_cell(b.H), num_cell(b.kappa1),
                num_cell(b.kappa2), num_cell(b.dir1[0]), num_cell(b.dir1[1]),
                num_cell(b.dir2[0]), num_cell(b.dir2[1]), text_cell(yes_no(b.umbilic))});
      }
      emit(t, opt, out);
    });
  }

  {
    auto* c = surface_cmd->add_subcommand(
        "classify", "point types: elliptic, hyperbolic, parabolic, planar");
    add_surface_model(c);
    add_surface_point_flags(c);
    add_output_flags(c);
    c->callback([&] {
      const SurfaceModel m = resolve_surface(model_src);
      SampleTable t;
      t.name = "surface classify";
      t.params = {{"model", m.label}};
      t.columns = {"u", "v", "type"};
      for (auto [u, v] : surface_points(m))
        t.push({num_cell(u), num_cell(v), text_cell(point_type_name(classify_point(m, u, v)))});
      emit(t, opt, out);
    });
  }

  {
    auto* c = surface_cmd->add_subcommand("christoffel",
                                          "Christoffel symbols of the second kind");
    add_surface_model(c);
    add_surface_point_flags(c);
    add_output_flags(c);
    c->callback([&] {
      const SurfaceModel m = resolve_surface(model_src);
      SampleTable t;
      t.name = "surface christoffel";
      t.params = {{"model", m.label}};
      t.columns = {"u", "v", "G1_11", "G2_11", "G1_12", "G2_12", "G1_22", "G2_22"};
      for (auto [u, v] : surface_points(m)) {
        const auto g = christoffel(m, u, v);
        t.push({num_cell(u), num_cell(v), num_cell(g.g1_11), num_cell(g.g2_11),
                num_cell(g.g1_12), num_cell(g.g2_12), num_cell(g.g1_22), num_cell(g.g2_22)});
      }
      emit(t, opt, out);
    });
  }

  {
    auto* c = surface_cmd->add_subcommand(
        "check",
        "residual suite: metric compatibility, structure equations, intrinsic-vs-extrinsic "
        "curvature, normal identities");
    add_surface_model(c);
    c->add_option("--grid", grid_src, "grid size NxM (cell centers are sampled)");
    add_output_flags(c);
    c->callback([&] {
      const SurfaceModel m = resolve_surface(model_src);
      const auto [nu, nv] = grid_sizes(grid_src);
      double r_koszul = 0, r_gw = 0, r_egregium = 0, r_gauss_map = 0, r_parallel = 0;
      for (int i = 0; i < nu; ++i)
        for (int j = 0; j < nv; ++j) {
          const double u = m.u0 + (m.u1 - m.u0) * (i + 0.5) / nu;
          const double v = m.v0 + (m.v1 - m.v0) * (j + 0.5) / nv;
          r_koszul = std::max(r_koszul, koszul_check(m, u, v));
          r_gw = std::max(r_gw, gauss_weingarten_residual(m, u, v).max_norm());
          const auto b = shape_and_curvatures(m, u, v);
          r_egregium = std::max(r_egregium, std::fabs(intrinsic_K(m, u, v) - b.K));
          for (double a : {0.05, 0.1}) {
            const auto nid = normal_identities_check(m, u, v, a);
            r_gauss_map = std::max(r_gauss_map, nid.gauss_map_identity);
            r_parallel = std::max(r_parallel, nid.parallel_surface_identity);
          }
        }
      struct Row {
        const char* name;
        double residual, threshold;
      };
      const Row rows[] = {{"koszul", r_koszul, opt.check_tol(1e-8)},
                          {"gauss_weingarten", r_gw, opt.check_tol(1e-7)},
                          {"egregium", r_egregium, opt.check_tol(1e-6)},
                          {"gauss_map_cross", r_gauss_map, opt.check_tol(1e-7)},
                          {"parallel_surface", r_parallel, opt.check_tol(1e-7)}};
      SampleTable t;
      t.name = "surface check";
      t.params = {{"model", m.label}, {"grid", grid_src}};
      t.columns = {"check", "max_residual", "threshold", "status"};
      bool all_pass = true;
      for (const auto& r : rows) {
        const bool pass = r.residual <= r.threshold;
        all_pass = all_pass && pass;
        t.push({text_cell(r.name), num_cell(r.residual), num_cell(r.threshold),
                text_cell(pass ? "pass" : "FAIL")});
      }
      t.params.emplace_back("result", all_pass ? "pass" : "FAIL");
      emit(t, opt, out);
      if (!all_pass) exit_code = 3;
    });
  }

  // ---------------------------------------------------------------- geodesic
  auto* geo_cmd = app.add_subcommand("geodesic", "geodesics on parametrized surfaces");
  geo_cmd->require_subcommand(1);
  std::string start_src, dir_src, pcurve_src;
  double length = 1.0;

  {
    auto* c = geo_cmd->add_subcommand("trace", "integrate the geodesic equation");
    add_surface_model(c);
    c->add_option("--start", start_src, "initial point \"u,v\"")->required();
    c->add_option("--dir", dir_src, "initial direction \"du,dv\" in the parameter plane")
        ->required();
    c->add_option("--length", length, "arc length to integrate")->required();
    c->add_option("--samples", samples, "number of emitted rows");
    add_output_flags(c);
    c->callback([&] {
      const SurfaceModel m = resolve_surface(model_src);
      const auto [u, v] = const_pair(start_src, "--start");
      const auto [du, dv] = const_pair(dir_src, "--dir");
      const auto trace = trace_geodesic(m, {u, v, du, dv}, length);
      SampleTable t;
      t.name = "geodesic trace";
      t.params = {{"model", m.label},
                  {"max_energy_drift", format_double(trace.max_energy_drift)}};
      t.columns = {"s", "u", "v", "du", "dv", "x", "y", "z"};
      for (std::size_t i : pick_rows(trace.states.size(), samples)) {
        const auto& st = trace.states[i];
        const Vec3 p = m.point(st.u, st.v);
        t.push({num_cell(trace.s[i]), num_cell(st.u), num_cell(st.v), num_cell(st.du),
                num_cell(st.dv), num_cell(p.x), num_cell(p.y), num_cell(p.z)});
      }
      emit(t, opt, out);
    });
  }

  {
    auto* c = geo_cmd->add_subcommand(
        "check", "is the given parameter-plane curve a geodesic of the surface?");
    add_surface_model(c);
    c->add_option("--curve", pcurve_src, "curve \"(u(t), v(t)) on [a, b]\" in the parameter plane")
        ->required();
    c->add_option("--samples", samples, "interior sample count");
    add_output_flags(c);
    c->callback([&] {
      const SurfaceModel m = resolve_surface(model_src);
      const ParamCurve pc = parse_param_curve(m, pcurve_src);
      if (samples < 2) throw ParseError("--samples must be at least 2", 0);
      const auto rep = is_geodesic(pc, samples);
      const double threshold = opt.tolerance ? *opt.tolerance : rep.threshold;
      const bool ok = rep.max_abs_kg <= threshold;
      SampleTable t;
      t.name = "geodesic check";
      t.params = {{"model", m.label},
                  {"curve", pcurve_src},
                  {"geodesic", yes_no(ok)},
                  {"max_abs_kappa_g", format_double(rep.max_abs_kg)},
                  {"threshold", format_double(threshold)}};
      t.columns = {"t", "u", "v", "kappa_g", "kappa_g_intrinsic"};
      for (int i = 0; i < samples; ++i) {
        const double tv = pc.t0 + (pc.t1 - pc.t0) * (i + 0.5) / samples;
        const auto [uu, vv] = pc.params_at(tv);
        t.push({num_cell(tv), num_cell(uu), num_cell(vv), num_cell(geodesic_curvature(pc, tv)),
                num_cell(intrinsic_geodesic_curvature(pc, tv))});
      }
      emit(t, opt, out);
      if (!ok) exit_code = 3;
    });
  }

  // ---------------------------------------------------------------- catalog
  auto* cat_cmd = app.add_subcommand("catalog", "built-in classical curves and surfaces");
  cat_cmd->require_subcommand(1);
  std::string entry_name;

  {
    auto* c = cat_cmd->add_subcommand("list", "list all entries");
    add_output_flags(c);
    c->callback([&] {
      SampleTable t;
      t.name = "catalog list";
      t.columns = {"name", "kind", "model"};
      for (const auto& e : catalog::default_entries()) {
        const std::string label = e.curve ? e.curve->label : e.surface->label;
        t.push({text_cell(e.name), text_cell(e.curve ? "curve" : "surface"), text_cell(label)});
      }
      emit(t, opt, out);
    });
  }

  {
    auto* c = cat_cmd->add_subcommand("show", "show one entry in full");
    c->add_option("name", entry_name, "catalog entry name")->required();
    add_output_flags(c);
    c->callback([&] {
      const auto entries = catalog::default_entries();
      const auto* e = catalog::find_entry(entries, entry_name);
      if (!e) throw GeomError("unknown catalog entry '" + entry_name + "'");
      SampleTable t;
      t.name = "catalog show";
      t.params = {{"name", e->name}, {"kind", e->curve ? "curve" : "surface"}};
      t.params.emplace_back("model", e->curve ? e->curve->label : e->surface->label);
      for (const auto& [k, v] : e->params) t.params.emplace_back(k, format_double(v));
      if (!e->notes.empty()) t.params.emplace_back("notes", e->notes);
      if (!e->kappa_form.empty()) t.params.emplace_back("kappa", e->kappa_form);
      if (!e->tau_form.empty()) t.params.emplace_back("tau", e->tau_form);
      if (!e->gauss_form.empty()) t.params.emplace_back("K", e->gauss_form);
      if (!e->mean_form.empty()) t.params.emplace_back("H", e->mean_form);
      if (!e->level_set_form.empty()) t.params.emplace_back("level_set", e->level_set_form);
      emit(t, opt, out);
    });
  }

  // ---------------------------------------------------------------- eval
  std::string expr_src;
  std::vector<std::string> lets;
  {
    auto* c = app.add_subcommand("eval", "evaluate a scalar DSL expression");
    c->add_option("expr", expr_src, "expression, e.g. \"cos(pi/3)\"")->required();
    c->add_option("--let", lets, "variable binding name=value (repeatable)");
    add_output_flags(c);
    c->callback([&] {
      std::vector<std::string> names;
      std::vector<double> values;
      for (const auto& binding : lets) {
        const auto eq = binding.find('=');
        if (eq == std::string::npos || eq == 0)
          throw ParseError("--let expects name=value, got '" + binding + "'", 0);
        names.push_back(trim_all(binding.substr(0, eq)));
        values.push_back(const_value(binding.substr(eq + 1), "--let " + names.back()));
      }
      const Expr e = parse_scalar(expr_src, names);
      const double val = e.eval(std::span<const double>(values));
      SampleTable t;
      t.name = "eval";
      t.params = {{"expr", e.str()}};
      t.columns = names;
      t.columns.push_back("value");
      std::vector<Cell> row;
      for (double v : values) row.push_back(num_cell(v));
      row.push_back(num_cell(val));
      t.push(std::move(row));
      emit(t, opt, out);
    });
  }

  // ---------------------------------------------------------------- dispatch
  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  } catch (const ParseError& e) {
    err << "geo3: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << "geo3: " << e.what() << "\n";
    return 2;
  } catch (const GeomError& e) {
    err << "geo3: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "geo3: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

}  // namespace geo3::cli
