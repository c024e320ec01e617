#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "sheffer/polynomial.hpp"
#include "sheffer/series.hpp"

namespace sheffer {

/// Element of the Weyl algebra [D, X] = 1 kept in normal form: key (i, j)
/// stands for X^i D^j, with every X to the left of every D. Read with
/// X -> a^dagger and D -> a it is a normally ordered boson operator.
class WeylElement {
 public:
  using Key = std::pair<unsigned, unsigned>;

  WeylElement() = default;

  static WeylElement constant(const Rational& c);
  static WeylElement monomial(unsigned x_power, unsigned d_power, const Rational& c = Rational(1));
  static WeylElement x() { return monomial(1, 0); }
  static WeylElement d() { return monomial(0, 1); }

  const std::map<Key, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coeff(unsigned x_power, unsigned d_power) const;
  void add_term(unsigned x_power, unsigned d_power, const Rational& c);

  unsigned max_x_degree() const;
  unsigned max_d_degree() const;

  /// Drops every term with D-power above max_d.
  WeylElement truncated_d(unsigned max_d) const;

  WeylElement& operator+=(const WeylElement& other);
  WeylElement& operator-=(const WeylElement& other);

  friend bool operator==(const WeylElement&, const WeylElement&) = default;

 private:
  std::map<Key, Rational> terms_;
};

WeylElement operator+(WeylElement a, const WeylElement& b);
WeylElement operator-(WeylElement a, const WeylElement& b);
WeylElement scale(const WeylElement& a, const Rational& c);

/// Normal-ordered product using
///   D^m X^n = sum_k k! C(m,k) C(n,k) X^{n-k} D^{m-k}.
/// With `d_cap`, terms whose D-power exceeds the cap are discarded.
WeylElement multiply(const WeylElement& u, const WeylElement& v, std::optional<unsigned> d_cap = std::nullopt);
inline WeylElement operator*(const WeylElement& u, const WeylElement& v) { return multiply(u, v); }

WeylElement commutator(const WeylElement& u, const WeylElement& v);

/// Action on polynomials: X^i D^j x^n = n!/(n-j)! x^{n+i-j}, zero when j > n.
Polynomial apply(const WeylElement& u, const Polynomial& p);

enum class Variable { kX, kD };

/// sum_k u_k D^k (or X^k). A series truncated at order N gives an operator
/// that acts exactly on polynomials of degree <= N.
WeylElement from_series(const TruncatedSeries& u, Variable var);

/// Truncated operator-valued series in lambda; coeffs[n] multiplies lambda^n.
struct OperatorSeries {
  std::vector<WeylElement> coeffs;
  std::size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

/// exp(lambda * m) up to lambda^order: coeffs[n] = m^n / n!.
OperatorSeries op_exp(const WeylElement& m, std::size_t order, std::optional<unsigned> d_cap = std::nullopt);

}  // namespace sheffer
