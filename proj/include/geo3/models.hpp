// geo3/models.hpp — parsed curve and surface descriptions.
//
//   curve:   "(x(t), y(t), z(t)) on [a, b]"
//   surface: "(x(u,v), y(u,v), z(u,v)) on [a, b] x [c, d]"
//
// Components use the expression DSL of expr.hpp; interval bounds are constant
// expressions ("[0, 2pi]" is fine). Models evaluate over any scalar ring, so
// the same object yields plain points, long-double points for high-precision
// checks, and Taylor jets for derivatives.
#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>

#include "geo3/error.hpp"
#include "geo3/expr.hpp"
#include "geo3/jet.hpp"
#include "geo3/vec.hpp"

namespace geo3 {

struct CurveModel {
  Expr x, y, z;
  double t0 = 0.0, t1 = 1.0;
  std::string label;

  template <class T>
  Vec3T<T> at(const T& t) const {
    const std::span<const T> args(&t, 1);
    return {x.eval(args), y.eval(args), z.eval(args)};
  }
  Vec3 point(double t) const { return at<double>(t); }
  /// Position with derivatives through order 3 at t.
  Vec3T<Jet1> jets(double t) const { return at(Jet1::variable(t)); }
};

struct SurfaceModel {
  Expr x, y, z;
  double u0 = 0.0, u1 = 1.0;
  double v0 = 0.0, v1 = 1.0;
  std::string label;

  template <class T>
  Vec3T<T> at(const T& u, const T& v) const {
    const std::array<T, 2> args{u, v};
    const std::span<const T> s(args);
    return {x.eval(s), y.eval(s), z.eval(s)};
  }
  Vec3 point(double u, double v) const { return at<double>(u, v); }
  /// Position with all partial derivatives through order 3 at (u, v).
  Vec3T<Jet2> jets(double u, double v) const {
    return at(Jet2::variable_u(u), Jet2::variable_v(v));
  }
};

namespace detail {

inline std::string trimmed(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t')) --e;
  return std::string(s.substr(b, e - b));
}

inline std::vector<NodeRef> parse_tuple(Parser& p, std::size_t expected, const char* what) {
  if (!p.at(Token::Type::lparen))
    p.fail(std::string("expected '(' opening the ") + what + " components");
  p.advance();
  std::vector<NodeRef> comps;
  comps.push_back(p.expression());
  while (p.at(Token::Type::comma)) {
    p.advance();
    comps.push_back(p.expression());
  }
  const std::size_t close_pos = p.peek().pos;
  p.expect(Token::Type::rparen, "')'");
  if (comps.size() != expected)
    throw ParseError(std::string(what) + " needs exactly " + std::to_string(expected) +
                         " components, got " + std::to_string(comps.size()),
                     close_pos);
  return comps;
}

}  // namespace detail

/// Parse "(x, y, z) on [a, b]" over the variable t.
inline CurveModel parse_curve(std::string_view source) {
  detail::Parser p(source, Expr::make_vars({"t"}));
  auto vars = p.vars_handle();
  auto comps = detail::parse_tuple(p, 3, "a curve");
  if (!p.eat_ident("on")) p.fail("expected 'on [a, b]' after the curve components");
  const auto [a, b] = p.interval();
  p.expect_end();
  if (!(a < b)) throw ParseError("parameter interval must satisfy a < b", 0);
  CurveModel m;
  m.x = Expr(comps[0], vars);
  m.y = Expr(comps[1], vars);
  m.z = Expr(comps[2], vars);
  m.t0 = a;
  m.t1 = b;
  m.label = detail::trimmed(source);
  return m;
}

/// Parse "(x, y, z) on [a, b] x [c, d]" over the variables u, v.
inline SurfaceModel parse_surface(std::string_view source) {
  detail::Parser p(source, Expr::make_vars({"u", "v"}));
  auto vars = p.vars_handle();
  auto comps = detail::parse_tuple(p, 3, "a surface");
  if (!p.eat_ident("on")) p.fail("expected 'on [a, b] x [c, d]' after the surface components");
  const auto [a, b] = p.interval();
  if (!p.eat_ident("x")) p.fail("expected 'x' between the parameter intervals");
  const auto [c, d] = p.interval();
  p.expect_end();
  if (!(a < b) || !(c < d)) throw ParseError("parameter intervals must satisfy a < b", 0);
  SurfaceModel m;
  m.x = Expr(comps[0], vars);
  m.y = Expr(comps[1], vars);
  m.z = Expr(comps[2], vars);
  m.u0 = a;
  m.u1 = b;
  m.v0 = c;
  m.v1 = d;
  m.label = detail::trimmed(source);
  return m;
}

}  // namespace geo3
