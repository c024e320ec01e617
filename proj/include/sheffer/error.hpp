#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sheffer {

enum class ErrorCode {
  kZeroConstantTerm,
  kNonzeroInnerConstant,
  kNotInvertible,
  kBadConstantTerm,
  kGuardExceeded,
  kOrderExceeded,
  kIndexOutOfRange,
  kUnknownFamily,
  kInvalidPair,
  kSyntaxError,
  kDomainError,
  kCutoffTooSmall,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; `code()` tells callers which
/// precondition failed.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parser and evaluator diagnostics carry a byte offset into the source text.
class PositionedError : public Error {
 public:
  PositionedError(ErrorCode code, std::size_t position, const std::string& what)
      : Error(code, what + " at position " + std::to_string(position)),
        position_(position),
        reason_(what) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t position_;
  std::string reason_;
};

}  // namespace sheffer
