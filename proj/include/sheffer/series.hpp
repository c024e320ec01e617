#pragma once

#include <cstddef>
#include <vector>

#include "sheffer/error.hpp"
#include "sheffer/rational.hpp"

namespace sheffer {

template <class T>
struct CoeffTraits;

template <>
struct CoeffTraits<Rational> {
  static bool is_zero(const Rational& c) { return sgn(c) == 0; }
  static bool is_one(const Rational& c) { return c == 1; }
  static Rational from_int(long n) { return Rational(n); }
  static double magnitude(const Rational& c) { return std::abs(c.get_d()); }
  static Complex to_complex(const Rational& c) { return {c.get_d(), 0.0}; }
};

template <>
struct CoeffTraits<Complex> {
  static bool is_zero(const Complex& c) { return c == Complex{}; }
  static bool is_one(const Complex& c) { return c == Complex{1.0, 0.0}; }
  static Complex from_int(long n) { return {static_cast<double>(n), 0.0}; }
  static double magnitude(const Complex& c) { return std::abs(c); }
  static Complex to_complex(const Complex& c) { return c; }
};

/// Univariate formal power series truncated at x^order. The coefficient of
/// x^k lives at index k; there are always order()+1 of them. Binary
/// operations on series of different orders truncate to the smaller one.
template <class T>
class Series {
 public:
  using value_type = T;
  using Traits = CoeffTraits<T>;

  explicit Series(std::size_t order = 0) : coeffs_(order + 1, Traits::from_int(0)) {}

  /// Pads with zeros or drops coefficients so the result has exactly order+1.
  Series(std::vector<T> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1, Traits::from_int(0));
  }

  static Series constant(const T& c, std::size_t order) {
    Series s(order);
    s.coeffs_[0] = c;
    return s;
  }

  /// The series x (just 0 when order is 0).
  static Series variable(std::size_t order) {
    Series s(order);
    if (order >= 1) s.coeffs_[1] = Traits::from_int(1);
    return s;
  }

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const std::vector<T>& coeffs() const noexcept { return coeffs_; }

  /// Coefficient of x^k; throws IndexOutOfRange past the truncation order.
  const T& operator[](std::size_t k) const {
    if (k > order()) throw Error(ErrorCode::kIndexOutOfRange, "coefficient index beyond truncation order");
    return coeffs_[k];
  }
  T& operator[](std::size_t k) {
    if (k > order()) throw Error(ErrorCode::kIndexOutOfRange, "coefficient index beyond truncation order");
    return coeffs_[k];
  }

  Series truncated(std::size_t new_order) const;
  bool is_zero() const;

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<T> coeffs_;
};

using TruncatedSeries = Series<Rational>;
using ComplexSeries = Series<Complex>;

template <class T> Series<T> operator+(const Series<T>& a, const Series<T>& b);
template <class T> Series<T> operator-(const Series<T>& a, const Series<T>& b);
template <class T> Series<T> operator-(const Series<T>& a);
template <class T> Series<T> operator*(const Series<T>& a, const Series<T>& b);
template <class T> Series<T> scale(const Series<T>& a, const T& c);

/// Formal derivative; the result has order N-1 (order 0 stays at order 0).
template <class T> Series<T> derivative(const Series<T>& a);
/// Antiderivative with zero constant term; the result has order N+1.
template <class T> Series<T> integral(const Series<T>& a);

template <class T> Series<T> reciprocal(const Series<T>& a);
template <class T> Series<T> power(const Series<T>& a, int exponent);

/// outer(inner(x)); requires inner(0) = 0.
template <class T> Series<T> compose(const Series<T>& outer, const Series<T>& inner);

/// Compositional inverse by Lagrange inversion: [x^n] a^{-1} = (1/n) [x^{n-1}] (x/a)^n.
template <class T> Series<T> comp_inverse(const Series<T>& a);

template <class T> Series<T> exp_series(const Series<T>& a);
template <class T> Series<T> log_series(const Series<T>& a);
template <class T> Series<T> sqrt_series(const Series<T>& a);
template <class T> Series<T> sin_series(const Series<T>& a);
template <class T> Series<T> cos_series(const Series<T>& a);
template <class T> Series<T> tan_series(const Series<T>& a);
template <class T> Series<T> arctan_series(const Series<T>& a);

/// Coefficients of a(x + c) for the truncated polynomial a.
template <class T> Series<T> taylor_shift(const Series<T>& a, const T& c);

ComplexSeries to_complex(const TruncatedSeries& a);

struct EvalResult {
  Complex value;
  /// |a_N z^N|, the last kept term; a crude stand-in for the truncation error.
  double tail_estimate = 0.0;
};

/// Evaluates the truncated sum at z. Throws GuardExceeded when |z| > guard.
template <class T> EvalResult eval_complex(const Series<T>& a, Complex z, double guard);

}  // namespace sheffer
