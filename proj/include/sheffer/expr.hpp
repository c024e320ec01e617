#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sheffer/rational.hpp"
#include "sheffer/series.hpp"

namespace sheffer {

/// Syntax tree for series specifications such as "x - x^2/2" or
/// "inv(x*exp(x))". Integer literals are non-negative; p/q is a division.
struct Expr {
  enum class Kind { kNumber, kVariable, kNegate, kAdd, kSub, kMul, kDiv, kPow, kCall };

  Kind kind = Kind::kNumber;
  Rational number;         // kNumber
  long exponent = 0;       // kPow
  std::string function;    // kCall
  std::vector<std::shared_ptr<const Expr>> args;
  /// Byte offset of the token that produced this node.
  std::size_t position = 0;
};

using ExprPtr = std::shared_ptr<const Expr>;

/// Functions accepted in calls: exp log sqrt sin cos tan arctan inv.
const std::vector<std::string>& known_functions();

/// Throws PositionedError(kSyntaxError) on malformed input.
ExprPtr parse_expr(std::string_view text);

/// Canonical text; parse_expr(to_string(e)) reproduces e up to positions.
std::string to_string(const Expr& e);

/// Structural equality, ignoring positions.
bool same_tree(const Expr& a, const Expr& b);

/// Evaluates bottom-up into a series truncated at `order`. Failures of the
/// series engine (log of a series with constant term other than 1, division
/// by a series vanishing at 0, ...) become PositionedError(kDomainError)
/// pointing at the offending node.
TruncatedSeries evaluate(const Expr& e, std::size_t order);

/// parse_expr then evaluate.
TruncatedSeries parse_series(std::string_view text, std::size_t order);

}  // namespace sheffer
