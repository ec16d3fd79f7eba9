// geo3/expr.hpp — the scalar expression DSL used to describe curves and
// surfaces: immutable ASTs, a recursive-descent parser, and evaluation over
// any scalar ring (double, long double, or the Taylor jets of jet.hpp).
//
// Grammar (precedence low to high):
//   expression := term { ('+' | '-') term }
//   term       := unary { ('*' | '/') unary | <juxtaposed atom ⇒ implicit *> }
//   unary      := ('-' | '+') unary | power
//   power      := primary [ '^' unary ]          (right-associative)
//   primary    := number | constant | variable | '(' expression ')'
//               | function '(' expression ')' | function <atom chain>
//
// Notes on the conventions this encodes:
//   * '^' binds tighter than unary minus: -x^2 is -(x^2); 2^3^2 is 2^(3^2).
//   * Juxtaposition multiplies at '*' precedence: "2t", "t cos t".
//   * A function applied without parentheses takes the tightest chain of
//     atoms, and that chain stops in front of the next function name:
//     "cos t" is cos(t), "cos 2t" is cos(2t), "cos u cos v" is cos(u)·cos(v),
//     "cos t^2" is cos(t)^2, while "cos sin t" is cos(sin t). Use parentheses
//     when in doubt.
//   * Constants pi and e; functions sin cos tan sinh cosh tanh exp ln sqrt
//     atan abs.
//   * Integer exponents are evaluated by repeated multiplication (any base);
//     other exponents via exp(b·ln a), which requires a > 0.
//
// Evaluation-time domain failures raise DomainError carrying the printed form
// of the offending subexpression; syntax errors raise ParseError with a byte
// offset.
#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <memory>
#include <numbers>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "geo3/error.hpp"
#include "geo3/jet.hpp"

namespace geo3 {

enum class Fn { sin, cos, tan, sinh, cosh, tanh, exp, ln, sqrt, atan, abs };

inline const char* fn_name(Fn f) {
  switch (f) {
    case Fn::sin: return "sin";
    case Fn::cos: return "cos";
    case Fn::tan: return "tan";
    case Fn::sinh: return "sinh";
    case Fn::cosh: return "cosh";
    case Fn::tanh: return "tanh";
    case Fn::exp: return "exp";
    case Fn::ln: return "ln";
    case Fn::sqrt: return "sqrt";
    case Fn::atan: return "atan";
    case Fn::abs: return "abs";
  }
  return "?";
}

struct ExprNode;
using NodeRef = std::shared_ptr<const ExprNode>;

struct ExprNode {
  enum class Kind { number, variable, neg, add, sub, mul, div, pow, call };
  Kind kind;
  double number = 0.0;  // Kind::number
  int var = -1;         // Kind::variable — index into the expression's variable list
  Fn fn = Fn::sin;      // Kind::call
  NodeRef a, b;         // operands (a only, for neg/call)
};

namespace ast {

inline NodeRef make(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }
inline NodeRef node(ExprNode::Kind k, NodeRef a = nullptr, NodeRef b = nullptr) {
  ExprNode n;
  n.kind = k;
  n.a = std::move(a);
  n.b = std::move(b);
  return make(std::move(n));
}
inline NodeRef num(double v) {
  ExprNode n;
  n.kind = ExprNode::Kind::number;
  n.number = v;
  return make(std::move(n));
}
inline NodeRef var(int index) {
  ExprNode n;
  n.kind = ExprNode::Kind::variable;
  n.var = index;
  return make(std::move(n));
}
inline NodeRef fncall(Fn f, NodeRef a) {
  ExprNode n;
  n.kind = ExprNode::Kind::call;
  n.fn = f;
  n.a = std::move(a);
  return make(std::move(n));
}
inline bool is_num(const NodeRef& n, double v) {
  return n->kind == ExprNode::Kind::number && n->number == v;
}

// The binary builders fold the trivial identities (0, 1, constant·constant)
// so machine-built trees — derivatives in particular — stay readable. This is
// construction-time tidying only; nothing rewrites an existing tree.
inline NodeRef add(NodeRef a, NodeRef b) {
  if (is_num(a, 0.0)) return b;
  if (is_num(b, 0.0)) return a;
  if (a->kind == ExprNode::Kind::number && b->kind == ExprNode::Kind::number)
    return num(a->number + b->number);
  return node(ExprNode::Kind::add, std::move(a), std::move(b));
}
inline NodeRef neg(NodeRef a) {
  if (a->kind == ExprNode::Kind::number) return num(-a->number);
  return node(ExprNode::Kind::neg, std::move(a));
}
inline NodeRef sub(NodeRef a, NodeRef b) {
  if (is_num(b, 0.0)) return a;
  if (a->kind == ExprNode::Kind::number && b->kind == ExprNode::Kind::number)
    return num(a->number - b->number);
  if (is_num(a, 0.0)) return neg(std::move(b));
  return node(ExprNode::Kind::sub, std::move(a), std::move(b));
}
inline NodeRef mul(NodeRef a, NodeRef b) {
  if (is_num(a, 0.0) || is_num(b, 0.0)) return num(0.0);
  if (is_num(a, 1.0)) return b;
  if (is_num(b, 1.0)) return a;
  if (a->kind == ExprNode::Kind::number && b->kind == ExprNode::Kind::number)
    return num(a->number * b->number);
  return node(ExprNode::Kind::mul, std::move(a), std::move(b));
}
inline NodeRef div(NodeRef a, NodeRef b) {
  if (is_num(b, 1.0)) return a;
  if (is_num(a, 0.0) && !is_num(b, 0.0)) return num(0.0);
  if (a->kind == ExprNode::Kind::number && b->kind == ExprNode::Kind::number && b->number != 0.0)
    return num(a->number / b->number);
  return node(ExprNode::Kind::div, std::move(a), std::move(b));
}
inline NodeRef pow(NodeRef a, NodeRef b) {
  if (is_num(b, 1.0)) return a;
  if (is_num(b, 0.0)) return num(1.0);
  return node(ExprNode::Kind::pow, std::move(a), std::move(b));
}
inline NodeRef call(Fn f, NodeRef a) { return fncall(f, std::move(a)); }

}  // namespace ast

namespace detail {

inline std::string format_double(double v) {
  char buf[40];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, end);
}

// Precedence levels for the printer (must agree with the parser).
inline int node_prec(const ExprNode* n) {
  using K = ExprNode::Kind;
  switch (n->kind) {
    case K::add:
    case K::sub: return 1;
    case K::mul:
    case K::div: return 2;
    case K::neg: return 3;
    case K::pow: return 4;
    case K::number: return n->number < 0.0 ? 3 : 5;  // negative prints like a negation
    default: return 5;
  }
}

inline void print_node(const ExprNode* n, const std::vector<std::string>& vars, int min_prec,
                       std::string& out) {
  using K = ExprNode::Kind;
  const int prec = node_prec(n);
  const bool parens = prec < min_prec;
  if (parens) out += '(';
  switch (n->kind) {
    case K::number: out += format_double(n->number); break;
    case K::variable: out += vars[static_cast<std::size_t>(n->var)]; break;
    case K::neg:
      out += '-';
      print_node(n->a.get(), vars, 3, out);
      break;
    case K::add:
      print_node(n->a.get(), vars, 1, out);
      out += " + ";
      print_node(n->b.get(), vars, 2, out);
      break;
    case K::sub:
      print_node(n->a.get(), vars, 1, out);
      out += " - ";
      print_node(n->b.get(), vars, 2, out);
      break;
    case K::mul:
      print_node(n->a.get(), vars, 2, out);
      out += '*';
      print_node(n->b.get(), vars, 3, out);
      break;
    case K::div:
      print_node(n->a.get(), vars, 2, out);
      out += '/';
      print_node(n->b.get(), vars, 3, out);
      break;
    case K::pow:
      print_node(n->a.get(), vars, 5, out);
      out += '^';
      print_node(n->b.get(), vars, 4, out);
      break;
    case K::call:
      out += fn_name(n->fn);
      out += '(';
      print_node(n->a.get(), vars, 0, out);
      out += ')';
      break;
  }
  if (parens) out += ')';
}

// Integer power by repeated multiplication, for any scalar ring.
template <class T>
T ipow_any(const T& x, long n) {
  if (n < 0) {
    if (scalar_value(x) == 0.0) throw DomainError("division by zero");
    if constexpr (std::is_floating_point_v<T>) return T(1) / ipow_any(x, -n);
    else return jet_recip(ipow_any(x, -n));
  }
  T result(1.0);
  T base = x;
  for (; n > 0; n >>= 1) {
    if (n & 1) result = result * base;
    base = base * base;
  }
  return result;
}

template <class T>
T eval_fn(Fn f, const T& x) {
  if constexpr (std::is_floating_point_v<T>) {
    switch (f) {
      case Fn::sin: return std::sin(x);
      case Fn::cos: return std::cos(x);
      case Fn::tan:
        if (std::cos(x) == T(0)) throw DomainError("tan at a pole");
        return std::tan(x);
      case Fn::sinh: return std::sinh(x);
      case Fn::cosh: return std::cosh(x);
      case Fn::tanh: return std::tanh(x);
      case Fn::exp: return std::exp(x);
      case Fn::ln:
        if (x <= T(0)) throw DomainError("ln of a non-positive value");
        return std::log(x);
      case Fn::sqrt:
        if (x < T(0)) throw DomainError("sqrt of a negative value");
        return std::sqrt(x);
      case Fn::atan: return std::atan(x);
      case Fn::abs: return std::fabs(x);
    }
  } else {
    switch (f) {
      case Fn::sin: return sin(x);
      case Fn::cos: return cos(x);
      case Fn::tan: return tan(x);
      case Fn::sinh: return sinh(x);
      case Fn::cosh: return cosh(x);
      case Fn::tanh: return tanh(x);
      case Fn::exp: return exp(x);
      case Fn::ln: return log(x);
      case Fn::sqrt: return sqrt(x);
      case Fn::atan: return atan(x);
      case Fn::abs: return abs(x);
    }
  }
  throw Error("unreachable function kind");
}

inline std::string print_subexpr(const ExprNode* n, const std::vector<std::string>& vars) {
  std::string s;
  print_node(n, vars, 0, s);
  return s;
}

template <class T>
T eval_node(const ExprNode* n, std::span<const T> args, const std::vector<std::string>& vars) {
  using K = ExprNode::Kind;
  switch (n->kind) {
    case K::number: return T(n->number);
    case K::variable: return args[static_cast<std::size_t>(n->var)];
    case K::neg: return -eval_node(n->a.get(), args, vars);
    case K::add: return eval_node(n->a.get(), args, vars) + eval_node(n->b.get(), args, vars);
    case K::sub: return eval_node(n->a.get(), args, vars) - eval_node(n->b.get(), args, vars);
    case K::mul: return eval_node(n->a.get(), args, vars) * eval_node(n->b.get(), args, vars);
    case K::div: {
      T num = eval_node(n->a.get(), args, vars);
      T den = eval_node(n->b.get(), args, vars);
      if (scalar_value(den) == 0.0) throw DomainError("division by zero", print_subexpr(n, vars));
      try {
        return num / den;
      } catch (const DomainError& e) {
        if (!e.subexpr.empty()) throw;
        throw DomainError(e.what(), print_subexpr(n, vars));
      }
    }
    case K::pow: {
      T base = eval_node(n->a.get(), args, vars);
      T expo = eval_node(n->b.get(), args, vars);
      try {
        if (scalar_is_constant(expo)) {
          const double ev = scalar_value(expo);
          if (ev == std::nearbyint(ev) && std::fabs(ev) <= 1e9)
            return ipow_any(base, static_cast<long>(ev));
        }
        if (scalar_value(base) <= 0.0)
          throw DomainError("non-integer power of a non-positive base");
        if constexpr (std::is_floating_point_v<T>) return std::pow(base, expo);
        else return exp(expo * log(base));
      } catch (const DomainError& e) {
        if (!e.subexpr.empty()) throw;
        throw DomainError(e.what(), print_subexpr(n, vars));
      }
    }
    case K::call: {
      T x = eval_node(n->a.get(), args, vars);
      try {
        return eval_fn(n->fn, x);
      } catch (const DomainError& e) {
        if (!e.subexpr.empty()) throw;
        throw DomainError(e.what(), print_subexpr(n, vars));
      }
    }
  }
  throw Error("unreachable node kind");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Expr — an immutable expression over a fixed, named variable list.

class Expr {
 public:
  Expr() = default;
  Expr(NodeRef root, std::shared_ptr<const std::vector<std::string>> vars)
      : root_(std::move(root)), vars_(std::move(vars)) {}

  static std::shared_ptr<const std::vector<std::string>> make_vars(std::vector<std::string> names) {
    return std::make_shared<const std::vector<std::string>>(std::move(names));
  }
  static Expr constant(double v, std::shared_ptr<const std::vector<std::string>> vars) {
    return Expr(ast::num(v), std::move(vars));
  }
  static Expr variable(std::string_view name, std::shared_ptr<const std::vector<std::string>> vars) {
    for (std::size_t i = 0; i < vars->size(); ++i)
      if ((*vars)[i] == name) return Expr(ast::var(static_cast<int>(i)), std::move(vars));
    throw Error("unknown variable '" + std::string(name) + "'");
  }

  bool empty() const { return root_ == nullptr; }
  const NodeRef& root() const { return root_; }
  const std::vector<std::string>& vars() const {
    static const std::vector<std::string> none;
    return vars_ ? *vars_ : none;
  }
  std::shared_ptr<const std::vector<std::string>> vars_handle() const { return vars_; }

  /// Evaluate over any scalar ring; one argument per declared variable.
  template <class T>
  T eval(std::span<const T> args) const {
    if (!root_) throw Error("evaluating an empty expression");
    if (args.size() != vars().size())
      throw Error("expression expects " + std::to_string(vars().size()) + " argument(s)");
    return detail::eval_node<T>(root_.get(), args, vars());
  }
  template <class T>
  T eval(std::initializer_list<T> args) const {
    return eval(std::span<const T>(args.begin(), args.size()));
  }

  /// Printed form; parses back to a structurally identical tree.
  std::string str() const {
    if (!root_) return "";
    return detail::print_subexpr(root_.get(), vars());
  }

 private:
  NodeRef root_;
  std::shared_ptr<const std::vector<std::string>> vars_;
};

/// eval with named bindings (order-free); every declared variable must be bound.
inline double eval(const Expr& e,
                   std::initializer_list<std::pair<std::string_view, double>> bindings) {
  const auto& vars = e.vars();
  std::vector<double> args(vars.size(), 0.0);
  std::vector<bool> bound(vars.size(), false);
  for (const auto& [name, value] : bindings) {
    bool found = false;
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) {
        args[i] = value;
        bound[i] = true;
        found = true;
      }
    if (!found) throw Error("binding for unknown variable '" + std::string(name) + "'");
  }
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (!bound[i]) throw Error("missing binding for variable '" + vars[i] + "'");
  return e.eval(std::span<const double>(args));
}

inline bool structurally_equal(const NodeRef& a, const NodeRef& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  using K = ExprNode::Kind;
  switch (a->kind) {
    case K::number: return a->number == b->number;
    case K::variable: return a->var == b->var;
    case K::neg: return structurally_equal(a->a, b->a);
    case K::call: return a->fn == b->fn && structurally_equal(a->a, b->a);
    default: return structurally_equal(a->a, b->a) && structurally_equal(a->b, b->b);
  }
}
inline bool structurally_equal(const Expr& a, const Expr& b) {
  return a.vars() == b.vars() && structurally_equal(a.root(), b.root());
}

// ---------------------------------------------------------------------------
// Lexer + parser.

namespace detail {

struct Token {
  enum class Type {
    number, ident, plus, minus, star, slash, caret, lparen, rparen, comma,
    lbracket, rbracket, end
  };
  Type type;
  double value = 0.0;      // number
  std::string_view text;   // ident
  std::size_t pos = 0;     // byte offset in the source
};

inline std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Token::Type t, std::size_t pos) { out.push_back({t, 0.0, {}, pos}); };
  while (i < src.size()) {
    const char c = src[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    if ((c >= '0' && c <= '9') || (c == '.' && i + 1 < src.size() && src[i + 1] >= '0' && src[i + 1] <= '9')) {
      const std::size_t start = i;
      while (i < src.size() && src[i] >= '0' && src[i] <= '9') ++i;
      if (i < src.size() && src[i] == '.') {
        ++i;
        while (i < src.size() && src[i] >= '0' && src[i] <= '9') ++i;
      }
      // exponent only when it is actually followed by digits — "2e" is 2*e
      if (i < src.size() && (src[i] == 'e' || src[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < src.size() && (src[j] == '+' || src[j] == '-')) ++j;
        if (j < src.size() && src[j] >= '0' && src[j] <= '9') {
          ++j;
          while (j < src.size() && src[j] >= '0' && src[j] <= '9') ++j;
          i = j;
        }
      }
      double value = 0.0;
      const auto res = std::from_chars(src.data() + start, src.data() + i, value);
      if (res.ec != std::errc() || res.ptr != src.data() + i)
        throw ParseError("malformed number", start);
      out.push_back({Token::Type::number, value, src.substr(start, i - start), start});
      continue;
    }
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
      const std::size_t start = i;
      while (i < src.size() &&
             ((src[i] >= 'a' && src[i] <= 'z') || (src[i] >= 'A' && src[i] <= 'Z') ||
              (src[i] >= '0' && src[i] <= '9') || src[i] == '_'))
        ++i;
      out.push_back({Token::Type::ident, 0.0, src.substr(start, i - start), start});
      continue;
    }
    switch (c) {
      case '+': push(Token::Type::plus, i); break;
      case '-': push(Token::Type::minus, i); break;
      case '*': push(Token::Type::star, i); break;
      case '/': push(Token::Type::slash, i); break;
      case '^': push(Token::Type::caret, i); break;
      case '(': push(Token::Type::lparen, i); break;
      case ')': push(Token::Type::rparen, i); break;
      case ',': push(Token::Type::comma, i); break;
      case '[': push(Token::Type::lbracket, i); break;
      case ']': push(Token::Type::rbracket, i); break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    ++i;
  }
  out.push_back({Token::Type::end, 0.0, {}, src.size()});
  return out;
}

inline bool lookup_fn(std::string_view name, Fn& out) {
  static constexpr std::pair<std::string_view, Fn> table[] = {
      {"sin", Fn::sin},   {"cos", Fn::cos},   {"tan", Fn::tan},  {"sinh", Fn::sinh},
      {"cosh", Fn::cosh}, {"tanh", Fn::tanh}, {"exp", Fn::exp},  {"ln", Fn::ln},
      {"sqrt", Fn::sqrt}, {"atan", Fn::atan}, {"abs", Fn::abs}};
  for (const auto& [n, f] : table)
    if (n == name) {
      out = f;
      return true;
    }
  return false;
}

class Parser {
 public:
  Parser(std::string_view src, std::shared_ptr<const std::vector<std::string>> vars)
      : src_(src), toks_(lex(src)), vars_(std::move(vars)) {}

  const Token& peek() const { return toks_[i_]; }
  const Token& advance() { return toks_[i_++]; }
  bool at(Token::Type t) const { return peek().type == t; }
  void expect(Token::Type t, const char* what) {
    if (!at(t)) throw ParseError(std::string("expected ") + what, peek().pos);
    ++i_;
  }
  void expect_end() {
    if (!at(Token::Type::end)) throw ParseError("unexpected trailing input", peek().pos);
  }

  Expr parse_whole_expression() {
    NodeRef n = expression();
    expect_end();
    return Expr(std::move(n), vars_);
  }

  NodeRef expression() {
    NodeRef n = term();
    while (at(Token::Type::plus) || at(Token::Type::minus)) {
      const bool plus = advance().type == Token::Type::plus;
      NodeRef rhs = term();
      n = ast::node(plus ? ExprNode::Kind::add : ExprNode::Kind::sub, n, rhs);
    }
    return n;
  }

  /// Parse "[lo, hi]" with constant bounds; returns {lo, hi}.
  std::pair<double, double> interval() {
    expect(Token::Type::lbracket, "'['");
    const double lo = constant_bound();
    expect(Token::Type::comma, "',' between interval bounds");
    const double hi = constant_bound();
    expect(Token::Type::rbracket, "']'");
    return {lo, hi};
  }

  /// "on" / the 'x' between surface intervals are plain identifiers.
  bool eat_ident(std::string_view word) {
    if (at(Token::Type::ident) && peek().text == word) {
      ++i_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().pos); }
  std::shared_ptr<const std::vector<std::string>> vars_handle() const { return vars_; }

 private:
  NodeRef term() {
    NodeRef n = unary();
    for (;;) {
      if (at(Token::Type::star) || at(Token::Type::slash)) {
        const bool star = advance().type == Token::Type::star;
        NodeRef rhs = unary();
        n = ast::node(star ? ExprNode::Kind::mul : ExprNode::Kind::div, n, rhs);
      } else if (starts_atom()) {  // juxtaposition: "2t", "t cos t", "(a)(b)"
        NodeRef rhs = unary();
        n = ast::node(ExprNode::Kind::mul, n, rhs);
      } else {
        break;
      }
    }
    return n;
  }

  NodeRef unary() {
    if (at(Token::Type::minus)) {
      ++i_;
      return ast::node(ExprNode::Kind::neg, unary());
    }
    if (at(Token::Type::plus)) {
      ++i_;
      return unary();
    }
    return power();
  }

  NodeRef power() {
    NodeRef base = primary();
    if (at(Token::Type::caret)) {
      ++i_;
      NodeRef expo = unary();  // right-associative; allows 2^-3
      return ast::node(ExprNode::Kind::pow, base, expo);
    }
    return base;
  }

  bool starts_atom() const {
    return at(Token::Type::number) || at(Token::Type::ident) || at(Token::Type::lparen);
  }

  // True when the next token begins a function application ("cos ..."):
  // an identifier that is neither a declared variable nor a constant but is a
  // known function name. A juxtaposed function argument stops here, so that
  // "cos u cos v" is cos(u)·cos(v), not cos(u·cos(v)).
  bool at_function() const {
    if (!at(Token::Type::ident)) return false;
    const std::string_view name = peek().text;
    if (allow_vars_)
      for (const auto& v : *vars_)
        if (v == name) return false;
    if (name == "pi" || name == "e") return false;
    Fn f;
    return lookup_fn(name, f);
  }

  NodeRef primary() {
    const Token& t = peek();
    switch (t.type) {
      case Token::Type::number:
        ++i_;
        return ast::num(t.value);
      case Token::Type::lparen: {
        ++i_;
        NodeRef inner = expression();
        if (!at(Token::Type::rparen)) throw ParseError("missing ')'", peek().pos);
        ++i_;
        return inner;
      }
      case Token::Type::ident: {
        // declared variable first, then constants, then functions
        if (allow_vars_)
          for (std::size_t k = 0; k < vars_->size(); ++k)
            if ((*vars_)[k] == t.text) {
              ++i_;
              return ast::var(static_cast<int>(k));
            }
        if (t.text == "pi") {
          ++i_;
          return ast::num(std::numbers::pi);
        }
        if (t.text == "e") {
          ++i_;
          return ast::num(std::numbers::e);
        }
        Fn f;
        if (lookup_fn(t.text, f)) {
          ++i_;
          if (at(Token::Type::lparen)) {
            ++i_;
            NodeRef arg = expression();
            if (!at(Token::Type::rparen)) throw ParseError("missing ')'", peek().pos);
            ++i_;
            return ast::fncall(f, arg);
          }
          if (!starts_atom())
            throw ParseError(std::string("function '") + std::string(t.text) +
                                 "' needs an argument",
                             peek().pos);
          // Juxtaposed argument: the tightest chain of atoms ("cos 2t").
          // The chain stops in front of the next function name, so a product
          // of applications reads the usual way: "cos u cos v" is
          // cos(u)·cos(v).  (A function as the *first* atom still nests:
          // "cos sin t" is cos(sin t).)
          NodeRef arg = primary();
          while (starts_atom() && !at_function()) {
            NodeRef next = primary();
            arg = ast::node(ExprNode::Kind::mul, arg, next);
          }
          return ast::fncall(f, arg);
        }
        throw ParseError("unknown identifier '" + std::string(t.text) + "'", t.pos);
      }
      default:
        throw ParseError("expected an expression", t.pos);
    }
  }

  double constant_bound() {
    // parse with variables disabled, then fold to a number
    allow_vars_ = false;
    NodeRef n = expression();
    allow_vars_ = true;
    return eval_node<double>(n.get(), std::span<const double>(), *vars_);
  }

  std::string_view src_;
  std::vector<Token> toks_;
  std::size_t i_ = 0;
  std::shared_ptr<const std::vector<std::string>> vars_;
  bool allow_vars_ = true;
};

}  // namespace detail

/// Parse a scalar expression over the given variable names.
inline Expr parse_scalar(std::string_view source, std::vector<std::string> vars) {
  detail::Parser p(source, Expr::make_vars(std::move(vars)));
  return p.parse_whole_expression();
}

// ---------------------------------------------------------------------------
// Tree surgery: simultaneous substitution and the mechanical derivative.

namespace detail {

inline NodeRef substitute_node(const NodeRef& n, const std::vector<std::string>& old_vars,
                               const std::vector<std::pair<std::string, NodeRef>>& repl,
                               const std::vector<std::string>& new_vars) {
  using K = ExprNode::Kind;
  switch (n->kind) {
    case K::number: return n;
    case K::variable: {
      const std::string& name = old_vars[static_cast<std::size_t>(n->var)];
      for (const auto& [from, node] : repl)
        if (from == name) return node;
      for (std::size_t k = 0; k < new_vars.size(); ++k)
        if (new_vars[k] == name) return ast::var(static_cast<int>(k));
      throw Error("substitute: variable '" + name + "' missing from the target variable list");
    }
    case K::neg:
      return ast::node(K::neg, substitute_node(n->a, old_vars, repl, new_vars));
    case K::call:
      return ast::fncall(n->fn, substitute_node(n->a, old_vars, repl, new_vars));
    default:
      return ast::node(n->kind, substitute_node(n->a, old_vars, repl, new_vars),
                       substitute_node(n->b, old_vars, repl, new_vars));
  }
}

inline NodeRef derivative_node(const NodeRef& n, int var) {
  using K = ExprNode::Kind;
  using namespace ast;
  switch (n->kind) {
    case K::number: return num(0.0);
    case K::variable: return num(n->var == var ? 1.0 : 0.0);
    case K::neg: return neg(derivative_node(n->a, var));
    case K::add: return add(derivative_node(n->a, var), derivative_node(n->b, var));
    case K::sub: return sub(derivative_node(n->a, var), derivative_node(n->b, var));
    case K::mul:
      return add(mul(derivative_node(n->a, var), n->b), mul(n->a, derivative_node(n->b, var)));
    case K::div:
      return div(sub(mul(derivative_node(n->a, var), n->b), mul(n->a, derivative_node(n->b, var))),
                 mul(n->b, n->b));
    case K::pow: {
      if (n->b->kind == K::number) {  // d(a^c) = c·a^(c-1)·a'
        const double c = n->b->number;
        return mul(mul(num(c), pow(n->a, num(c - 1.0))), derivative_node(n->a, var));
      }
      // d(a^b) = a^b (b' ln a + b a'/a)
      return mul(pow(n->a, n->b),
                 add(mul(derivative_node(n->b, var), call(Fn::ln, n->a)),
                     mul(n->b, div(derivative_node(n->a, var), n->a))));
    }
    case K::call: {
      NodeRef inner = derivative_node(n->a, var);
      NodeRef outer;
      switch (n->fn) {
        case Fn::sin: outer = call(Fn::cos, n->a); break;
        case Fn::cos: outer = neg(call(Fn::sin, n->a)); break;
        case Fn::tan:
          outer = add(num(1.0), pow(call(Fn::tan, n->a), num(2.0)));
          break;
        case Fn::sinh: outer = call(Fn::cosh, n->a); break;
        case Fn::cosh: outer = call(Fn::sinh, n->a); break;
        case Fn::tanh:
          outer = sub(num(1.0), pow(call(Fn::tanh, n->a), num(2.0)));
          break;
        case Fn::exp: outer = call(Fn::exp, n->a); break;
        case Fn::ln: outer = div(num(1.0), n->a); break;
        case Fn::sqrt: outer = div(num(1.0), mul(num(2.0), call(Fn::sqrt, n->a))); break;
        case Fn::atan: outer = div(num(1.0), add(num(1.0), pow(n->a, num(2.0)))); break;
        case Fn::abs: outer = div(call(Fn::abs, n->a), n->a); break;  // sign(a), a≠0
      }
      return mul(outer, inner);
    }
  }
  throw Error("unreachable node kind");
}

}  // namespace detail

/// Simultaneous substitution. Each pair maps a variable of `e` to an
/// expression over `new_vars`; unmapped variables of `e` must appear in
/// `new_vars` and are carried over.
inline Expr substitute_all(const Expr& e,
                           const std::vector<std::pair<std::string, Expr>>& mapping,
                           std::shared_ptr<const std::vector<std::string>> new_vars) {
  std::vector<std::pair<std::string, NodeRef>> repl;
  repl.reserve(mapping.size());
  for (const auto& [name, r] : mapping) {
    if (r.vars() != *new_vars)
      throw Error("substitute: replacement for '" + name + "' uses a different variable list");
    repl.emplace_back(name, r.root());
  }
  return Expr(detail::substitute_node(e.root(), e.vars(), repl, *new_vars), std::move(new_vars));
}

inline Expr substitute(const Expr& e, std::string_view var, const Expr& replacement) {
  return substitute_all(e, {{std::string(var), replacement}}, replacement.vars_handle());
}

/// d e / d var, built by the usual mechanical rules (no simplification beyond
/// folding of 0/1/constant arithmetic at construction).
inline Expr derivative(const Expr& e, std::string_view var) {
  const auto& vars = e.vars();
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == var)
      return Expr(detail::derivative_node(e.root(), static_cast<int>(i)), e.vars_handle());
  throw Error("derivative: unknown variable '" + std::string(var) + "'");
}

// ---------------------------------------------------------------------------
// Expression-building sugar (same variable list required on both sides).

namespace detail {
inline void check_same_vars(const Expr& a, const Expr& b) {
  if (a.vars() != b.vars()) throw Error("combining expressions over different variable lists");
}
}  // namespace detail

inline Expr operator+(const Expr& a, const Expr& b) {
  detail::check_same_vars(a, b);
  return Expr(ast::add(a.root(), b.root()), a.vars_handle());
}
inline Expr operator-(const Expr& a, const Expr& b) {
  detail::check_same_vars(a, b);
  return Expr(ast::sub(a.root(), b.root()), a.vars_handle());
}
inline Expr operator-(const Expr& a) { return Expr(ast::neg(a.root()), a.vars_handle()); }
inline Expr operator*(const Expr& a, const Expr& b) {
  detail::check_same_vars(a, b);
  return Expr(ast::mul(a.root(), b.root()), a.vars_handle());
}
inline Expr operator/(const Expr& a, const Expr& b) {
  detail::check_same_vars(a, b);
  return Expr(ast::div(a.root(), b.root()), a.vars_handle());
}
inline Expr expr_pow(const Expr& a, double c) {
  return Expr(ast::pow(a.root(), ast::num(c)), a.vars_handle());
}
inline Expr expr_call(Fn f, const Expr& a) { return Expr(ast::call(f, a.root()), a.vars_handle()); }
inline Expr sin(const Expr& a) { return expr_call(Fn::sin, a); }
inline Expr cos(const Expr& a) { return expr_call(Fn::cos, a); }
inline Expr sqrt(const Expr& a) { return expr_call(Fn::sqrt, a); }

}  // namespace geo3
