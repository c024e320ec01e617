#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "sheffer/catalog.hpp"
#include "sheffer/polynomial.hpp"
#include "sheffer/report.hpp"
#include "sheffer/sequence.hpp"

namespace sheffer {

/// sum c_{ijk} t^k :a^dagger^i a^j:, stored as (i, j) -> polynomial in t.
/// Coefficients with k beyond lambda_order or j beyond a_order are dropped.
class NormallyOrderedSeries {
 public:
  using Key = std::pair<unsigned, unsigned>;

  NormallyOrderedSeries(std::size_t lambda_order, unsigned a_order)
      : lambda_order_(lambda_order), a_order_(a_order) {}

  void add(unsigned adag_power, unsigned a_power, std::size_t lambda_power, const Rational& c);

  const std::map<Key, Polynomial>& terms() const noexcept { return terms_; }
  Polynomial coeff(unsigned adag_power, unsigned a_power) const;
  std::size_t lambda_order() const noexcept { return lambda_order_; }
  unsigned a_order() const noexcept { return a_order_; }

  friend bool operator==(const NormallyOrderedSeries&, const NormallyOrderedSeries&) = default;

 private:
  std::size_t lambda_order_;
  unsigned a_order_;
  std::map<Key, Polynomial> terms_;
};

/// Right side of the normal-ordering formula:
///   :exp(a^dagger [f^{-1}(t + f(a)) - a]) g(a) / g(f^{-1}(t + f(a))):
/// expanded by exact two-variable series composition. Needs
/// pair.order() >= lambda_order + a_order.
NormallyOrderedSeries normal_order_rhs(const ShefferPair& pair, std::size_t lambda_order, unsigned a_order);

/// Brute force: sum_n t^n M^n / n! with M from build_raising, multiplied out
/// in the Weyl algebra. Uses no coherent-state argument. Needs
/// pair.order() > lambda_order + a_order.
NormallyOrderedSeries normal_order_lhs(const ShefferPair& pair, std::size_t lambda_order, unsigned a_order);

struct TermComparison {
  unsigned adag_power;
  unsigned a_power;
  std::size_t lambda_power;
  Rational lhs;
  Rational rhs;
  bool pass() const { return lhs == rhs; }
};

/// Every (i, j, k) present on either side.
std::vector<TermComparison> compare_normal_forms(const NormallyOrderedSeries& lhs,
                                                 const NormallyOrderedSeries& rhs);

/// One row per power of t; a row fails when any (i, j) coefficient differs.
/// `operators` feeds the brute-force side, `closed_form` the composed side.
std::vector<IdentityCheck> verify_normal_order(const ShefferPair& operators, const ShefferPair& closed_form,
                                               std::size_t lambda_order, unsigned a_order);
std::vector<IdentityCheck> verify_normal_order(const ShefferPair& pair, std::size_t lambda_order,
                                               unsigned a_order);

/// Hermitian conjugate for real t: :a^dagger^i a^j: -> :a^dagger^j a^i:.
NormallyOrderedSeries conjugate_normal_form(const NormallyOrderedSeries& s);

// Coherent-state matrix elements. Arguments named `zc` are conj(z).

/// s_{n+l}(z*) / sqrt(l!), the shifted-index guess for <z|M^n|l> / <z|0>. For l = 0
/// this is exact; for l >= 1 see mono_element_exact.
Complex mono_element(const ShefferSequence& seq, std::size_t n, std::size_t l, Complex zc);

/// (M^n x^l)(z*) / sqrt(l!) = <z|M^n|l> / <z|0>, from |l> = a^dagger^l |0> / sqrt(l!).
Complex mono_element_exact(const ShefferPair& pair, std::size_t n, std::size_t l, Complex zc);

/// <z|exp(tM)|0> / <z|0> = exp(z* f^{-1}(t)) / g(f^{-1}(t)), summed from the
/// generating-function series to order `terms`.
EvalResult exp_element_vac(const ShefferPair& pair, Complex t, Complex zc, double guard,
                           std::size_t terms = 24);

/// (1/sqrt(l!)) d^l/dt^l [exp(z* f^{-1}(t)) / g(f^{-1}(t))], the shifted-index
/// guess for <z|exp(tM)|l> / <z|0>.
EvalResult exp_element_state(const ShefferPair& pair, Complex t, Complex zc, std::size_t l, double guard,
                             std::size_t terms = 24);

/// <z|exp(tM)|l> / <z|0> = (1/sqrt(l!)) sum_n t^n/n! (M^n x^l)(z*).
EvalResult exp_element_state_exact(const ShefferPair& pair, Complex t, Complex zc, std::size_t l, double guard,
                                   std::size_t terms = 24);

/// <z|z'>
Complex coherent_overlap(Complex z, Complex zp);

/// g(z') / g(f^{-1}(t + f(z'))) exp(z*[f^{-1}(t + f(z')) - z']) <z|z'>.
Complex exp_element_coherent(const NumericPair& numeric, Complex t, Complex z, Complex zp);

/// f~(x) = f(x + z') - f(z'), g~(x) = g(x + z') / g(z') on the truncated series.
template <class T>
std::pair<Series<T>, Series<T>> shifted_pair(const Series<T>& f, const Series<T>& g, const T& zp);

/// Same matrix element through the shifted pair: exp(z* f~^{-1}(t)) / g~(f~^{-1}(t)) <z|z'>.
EvalResult exp_element_coherent_series(const ShefferPair& pair, Complex t, Complex z, Complex zp, double guard);

/// Numeric evaluators backed by the truncated series, for pairs without closed forms.
NumericPair numeric_from_series(const ShefferPair& pair, double guard);

}  // namespace sheffer
