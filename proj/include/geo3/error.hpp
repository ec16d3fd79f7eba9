// geo3/error.hpp — exception types shared by the whole library.
//
// Three families, chosen to match what callers need to react to:
//   ParseError  — malformed DSL input; carries the byte offset of the problem.
//   DomainError — a mathematically undefined evaluation (log of a non-positive
//                 number, division by zero, jet of sqrt at 0, ...); carries the
//                 offending subexpression when raised through an Expr.
//   GeomError   — a geometric precondition failed (zero-speed point, irregular
//                 surface point, frame not orthonormal, trajectory left the
//                 parameter domain, bad constructor parameters, ...).
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace geo3 {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Syntax error in DSL source. `offset` is a byte index into the source text.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t offset_)
      : Error(what + " (at byte " + std::to_string(offset_) + ")"), offset(offset_) {}
  std::size_t offset;
};

/// Evaluation hit a point where the expression is not defined (or not
/// differentiable, when evaluating jets). `subexpr` is filled in by Expr::eval
/// with the printed form of the node that failed.
struct DomainError : Error {
  explicit DomainError(const std::string& what, std::string subexpr_ = {})
      : Error(subexpr_.empty() ? what : what + " in '" + subexpr_ + "'"),
        subexpr(std::move(subexpr_)) {}
  std::string subexpr;
};

/// A geometric precondition does not hold.
struct GeomError : Error {
  using Error::Error;
};

}  // namespace geo3
