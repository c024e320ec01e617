#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sheffer/rational.hpp"

namespace sheffer {

/// Dense univariate polynomial over Q. Trailing zeros are always trimmed, so
/// the zero polynomial has an empty coefficient vector and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(std::size_t k, const Rational& c = Rational(1));

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  /// Coefficient of x^k, zero past the degree.
  Rational operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

  /// Dense row of length `length`, zero-padded.
  std::vector<Rational> row(std::size_t length) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);

  Complex evaluate(Complex z) const;
  Rational evaluate(const Rational& x) const;

  /// Human-readable form in the given variable, e.g. "8*x^3 - 12*x".
  std::string to_string(const std::string& var = "x") const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator-(const Polynomial& a);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial scale(const Polynomial& a, const Rational& c);
Polynomial derivative(const Polynomial& a);
/// x * a(x)
Polynomial shift_up(const Polynomial& a);

/// Sparse polynomial in x, y: key (i, j) is the monomial x^i y^j. Zero
/// coefficients are never stored.
class BivariatePolynomial {
 public:
  using Key = std::pair<unsigned, unsigned>;

  BivariatePolynomial() = default;

  static BivariatePolynomial constant(const Rational& c);
  static BivariatePolynomial monomial(unsigned i, unsigned j, const Rational& c = Rational(1));
  /// p(x) * q(y)
  static BivariatePolynomial outer(const Polynomial& px, const Polynomial& qy);

  const std::map<Key, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coeff(unsigned i, unsigned j) const;
  void add_term(unsigned i, unsigned j, const Rational& c);
  unsigned total_degree() const;

  BivariatePolynomial& operator+=(const BivariatePolynomial& other);
  BivariatePolynomial& operator-=(const BivariatePolynomial& other);

  std::string to_string() const;

  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

 private:
  std::map<Key, Rational> terms_;
};

BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b);
BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b);
BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
BivariatePolynomial scale(const BivariatePolynomial& a, const Rational& c);

}  // namespace sheffer
