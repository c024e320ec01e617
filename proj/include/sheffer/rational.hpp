#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>

namespace sheffer {

/// Exact rational backed by GMP. mpq_class keeps values canonical
/// (positive denominator, reduced, zero is 0/1) after every operation.
using Rational = mpq_class;
using Complex = std::complex<double>;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Accepts "p", "-p" and "p/q". Throws Error(kSyntaxError) otherwise.
Rational parse_rational(std::string_view text);

inline double to_double(const Rational& r) { return r.get_d(); }

Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

}  // namespace sheffer
