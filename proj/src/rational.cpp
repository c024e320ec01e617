#include "sheffer/rational.hpp"

#include <cctype>

#include "sheffer/error.hpp"

namespace sheffer {

std::string to_string(const Rational& r) {
  Rational c(r);
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(std::string_view text) {
  auto valid = [&] {
    if (text.empty()) return false;
    std::size_t i = 0;
    if (text[0] == '-' || text[0] == '+') ++i;
    bool digits = false, slash = false, denom_digits = false;
    for (; i < text.size(); ++i) {
      char c = text[i];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        (slash ? denom_digits : digits) = true;
      } else if (c == '/' && !slash && digits) {
        slash = true;
      } else {
        return false;
      }
    }
    return digits && (!slash || denom_digits);
  };
  if (!valid()) throw Error(ErrorCode::kSyntaxError, "not a rational literal: '" + std::string(text) + "'");
  std::string s(text);
  if (s[0] == '+') s.erase(0, 1);
  Rational r;
  r.set_str(s, 10);
  if (sgn(r.get_den()) == 0) throw Error(ErrorCode::kDomainError, "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational binomial(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::kNonzeroInnerConstant: return "NonzeroInnerConstant";
    case ErrorCode::kNotInvertible: return "NotInvertible";
    case ErrorCode::kBadConstantTerm: return "BadConstantTerm";
    case ErrorCode::kGuardExceeded: return "GuardExceeded";
    case ErrorCode::kOrderExceeded: return "OrderExceeded";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kUnknownFamily: return "UnknownFamily";
    case ErrorCode::kInvalidPair: return "InvalidPair";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kDomainError: return "DomainError";
    case ErrorCode::kCutoffTooSmall: return "CutoffTooSmall";
  }
  return "Unknown";
}

}  // namespace sheffer
