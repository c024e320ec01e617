#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "sheffer/polynomial.hpp"
#include "sheffer/report.hpp"
#include "sheffer/series.hpp"
#include "sheffer/weyl.hpp"

namespace sheffer {

/// The (f, g) pair that fixes a Sheffer sequence through
///   sum_n s_n(x) t^n/n! = exp(x f^{-1}(t)) / g(f^{-1}(t)).
/// Always satisfies f(0) = 0, f'(0) != 0 and g(0) = 1.
class ShefferPair {
 public:
  /// Validates f and rescales g by 1/g(0). `rescaled`, when given, reports
  /// whether that rescaling changed g. Throws Error(kInvalidPair).
  static ShefferPair make(TruncatedSeries f, TruncatedSeries g, std::string label = {},
                          bool* rescaled = nullptr);

  const TruncatedSeries& f() const noexcept { return f_; }
  const TruncatedSeries& g() const noexcept { return g_; }
  const std::string& label() const noexcept { return label_; }
  std::size_t order() const noexcept { return std::min(f_.order(), g_.order()); }

 private:
  ShefferPair(TruncatedSeries f, TruncatedSeries g, std::string label)
      : f_(std::move(f)), g_(std::move(g)), label_(std::move(label)) {}

  TruncatedSeries f_;
  TruncatedSeries g_;
  std::string label_;
};

struct ShefferSequence {
  ShefferPair pair;
  std::vector<Polynomial> polys;  // s_0 .. s_N

  std::size_t max_index() const { return polys.empty() ? 0 : polys.size() - 1; }
};

/// s_0..s_n from the exponential generating function. Needs n <= pair.order().
ShefferSequence sequence_via_egf(const ShefferPair& pair, std::size_t n);

/// s_0..s_n by repeated application of the raising operator to 1.
ShefferSequence sequence_via_raising(const ShefferPair& pair, std::size_t n);

/// P = f(D), keeping D-powers up to `d_order`. Needs d_order <= pair.order().
WeylElement build_lowering(const ShefferPair& pair, unsigned d_order);

/// M = (X - g'(D)/g(D)) / f'(D) in normal form, D-powers up to `d_order`.
/// Exact on polynomials of degree <= d_order. Needs d_order < pair.order().
WeylElement build_raising(const ShefferPair& pair, unsigned d_order);

/// The s_{n,k} row of length n+1.
std::vector<Rational> sheffer_coeffs(const ShefferSequence& seq, std::size_t n);

/// Ladder identities M s_n = s_{n+1}, P s_n = n s_{n-1}, M P s_n = n s_n and
/// egf/raising route agreement for n <= max_n. Operators come from
/// `operators`, the sequence under test from `seq` (which must reach max_n+1).
std::vector<IdentityCheck> verify_monomiality(const ShefferPair& operators, const ShefferSequence& seq,
                                              std::size_t max_n);
std::vector<IdentityCheck> verify_monomiality(const ShefferPair& pair, std::size_t max_n);

/// [P, M] x^n = x^n for n <= max_n, with the commutator formed in the Weyl
/// algebra and, separately, as P(M x^n) - M(P x^n).
std::vector<IdentityCheck> verify_commutator(const ShefferPair& pair, std::size_t max_n);

}  // namespace sheffer
