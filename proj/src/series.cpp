#include "sheffer/series.hpp"

#include <algorithm>
#include <cmath>

namespace sheffer {

namespace {

template <class T>
using Tr = CoeffTraits<T>;

template <class T>
T ratio(long p, long q) {
  if constexpr (std::is_same_v<T, Rational>) {
    Rational r(p, q);
    r.canonicalize();
    return r;
  } else {
    return T(static_cast<double>(p) / static_cast<double>(q));
  }
}

}  // namespace

template <class T>
Series<T> Series<T>::truncated(std::size_t new_order) const {
  if (new_order > order()) {
    throw Error(ErrorCode::kOrderExceeded, "cannot raise truncation order by truncating");
  }
  return Series(std::vector<T>(coeffs_.begin(), coeffs_.begin() + new_order + 1), new_order);
}

template <class T>
bool Series<T>::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const T& c) { return Tr<T>::is_zero(c); });
}

template <class T>
Series<T> operator+(const Series<T>& a, const Series<T>& b) {
  const std::size_t n = std::min(a.order(), b.order());
  Series<T> r(n);
  for (std::size_t k = 0; k <= n; ++k) r[k] = a[k] + b[k];
  return r;
}

template <class T>
Series<T> operator-(const Series<T>& a, const Series<T>& b) {
  const std::size_t n = std::min(a.order(), b.order());
  Series<T> r(n);
  for (std::size_t k = 0; k <= n; ++k) r[k] = a[k] - b[k];
  return r;
}

template <class T>
Series<T> operator-(const Series<T>& a) {
  Series<T> r(a.order());
  for (std::size_t k = 0; k <= a.order(); ++k) r[k] = -a[k];
  return r;
}

template <class T>
Series<T> operator*(const Series<T>& a, const Series<T>& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<T> r(n + 1, Tr<T>::from_int(0));
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  for (std::size_t i = 0; i <= n; ++i) {
    if (Tr<T>::is_zero(ac[i])) continue;
    for (std::size_t j = 0; i + j <= n; ++j) r[i + j] += ac[i] * bc[j];
  }
  return Series<T>(std::move(r), n);
}

template <class T>
Series<T> scale(const Series<T>& a, const T& c) {
  Series<T> r(a.order());
  for (std::size_t k = 0; k <= a.order(); ++k) r[k] = a[k] * c;
  return r;
}

template <class T>
Series<T> derivative(const Series<T>& a) {
  if (a.order() == 0) return Series<T>(0);
  Series<T> r(a.order() - 1);
  for (std::size_t k = 1; k <= a.order(); ++k) r[k - 1] = a[k] * Tr<T>::from_int(static_cast<long>(k));
  return r;
}

template <class T>
Series<T> integral(const Series<T>& a) {
  Series<T> r(a.order() + 1);
  for (std::size_t k = 0; k <= a.order(); ++k) r[k + 1] = a[k] * ratio<T>(1, static_cast<long>(k + 1));
  return r;
}

template <class T>
Series<T> reciprocal(const Series<T>& a) {
  if (Tr<T>::is_zero(a[0])) throw Error(ErrorCode::kZeroConstantTerm, "reciprocal needs a nonzero constant term");
  const std::size_t n = a.order();
  Series<T> b(n);
  const T inv0 = Tr<T>::from_int(1) / a[0];
  b[0] = inv0;
  for (std::size_t m = 1; m <= n; ++m) {
    T acc = Tr<T>::from_int(0);
    for (std::size_t k = 1; k <= m; ++k) acc += a[k] * b[m - k];
    b[m] = -inv0 * acc;
  }
  return b;
}

template <class T>
Series<T> power(const Series<T>& a, int exponent) {
  Series<T> base = exponent < 0 ? reciprocal(a) : a;
  unsigned e = static_cast<unsigned>(exponent < 0 ? -static_cast<long>(exponent) : exponent);
  Series<T> result = Series<T>::constant(Tr<T>::from_int(1), a.order());
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

template <class T>
Series<T> compose(const Series<T>& outer, const Series<T>& inner) {
  if (!Tr<T>::is_zero(inner[0])) {
    throw Error(ErrorCode::kNonzeroInnerConstant, "composition needs inner(0) = 0");
  }
  const std::size_t n = std::min(outer.order(), inner.order());
  const Series<T> in = inner.truncated(n);
  Series<T> r = Series<T>::constant(outer[n], n);
  for (std::size_t k = n; k-- > 0;) {
    r = r * in;
    r[0] += outer[k];
  }
  return r;
}

template <class T>
Series<T> comp_inverse(const Series<T>& a) {
  if (!Tr<T>::is_zero(a[0]) || a.order() < 1 || Tr<T>::is_zero(a[1])) {
    throw Error(ErrorCode::kNotInvertible, "compositional inverse needs a(0) = 0 and a'(0) != 0");
  }
  const std::size_t n = a.order();
  // a(x)/x, then phi = x/a(x) at order n-1.
  std::vector<T> shifted(a.coeffs().begin() + 1, a.coeffs().end());
  const Series<T> phi = reciprocal(Series<T>(std::move(shifted), n - 1));
  Series<T> result(n);
  Series<T> phi_pow = phi;
  for (std::size_t m = 1; m <= n; ++m) {
    result[m] = phi_pow[m - 1] * ratio<T>(1, static_cast<long>(m));
    if (m < n) phi_pow = phi_pow * phi;
  }
  return result;
}

template <class T>
Series<T> exp_series(const Series<T>& a) {
  if (!Tr<T>::is_zero(a[0])) throw Error(ErrorCode::kBadConstantTerm, "exp needs a zero constant term");
  const std::size_t n = a.order();
  Series<T> b(n);
  b[0] = Tr<T>::from_int(1);
  for (std::size_t m = 1; m <= n; ++m) {
    T acc = Tr<T>::from_int(0);
    for (std::size_t k = 1; k <= m; ++k) acc += Tr<T>::from_int(static_cast<long>(k)) * a[k] * b[m - k];
    b[m] = acc * ratio<T>(1, static_cast<long>(m));
  }
  return b;
}

template <class T>
Series<T> log_series(const Series<T>& a) {
  if (!Tr<T>::is_one(a[0])) throw Error(ErrorCode::kBadConstantTerm, "log needs constant term 1");
  if (a.order() == 0) return Series<T>(0);
  return integral(derivative(a) * reciprocal(a));
}

template <class T>
Series<T> sqrt_series(const Series<T>& a) {
  if (!Tr<T>::is_one(a[0])) throw Error(ErrorCode::kBadConstantTerm, "sqrt needs constant term 1");
  const std::size_t n = a.order();
  Series<T> b(n);
  b[0] = Tr<T>::from_int(1);
  const T half = ratio<T>(1, 2);
  for (std::size_t m = 1; m <= n; ++m) {
    T acc = a[m];
    for (std::size_t k = 1; k < m; ++k) acc -= b[k] * b[m - k];
    b[m] = acc * half;
  }
  return b;
}

namespace {

// s' = c a', c' = -s a' with s(0) = 0, c(0) = 1.
template <class T>
std::pair<Series<T>, Series<T>> sin_cos(const Series<T>& a, const char* name) {
  if (!Tr<T>::is_zero(a[0])) {
    throw Error(ErrorCode::kBadConstantTerm, std::string(name) + " needs a zero constant term");
  }
  const std::size_t n = a.order();
  Series<T> s(n), c(n);
  c[0] = Tr<T>::from_int(1);
  for (std::size_t m = 1; m <= n; ++m) {
    T ss = Tr<T>::from_int(0), cc = Tr<T>::from_int(0);
    for (std::size_t k = 1; k <= m; ++k) {
      const T ka = Tr<T>::from_int(static_cast<long>(k)) * a[k];
      ss += ka * c[m - k];
      cc -= ka * s[m - k];
    }
    const T inv_m = ratio<T>(1, static_cast<long>(m));
    s[m] = ss * inv_m;
    c[m] = cc * inv_m;
  }
  return {std::move(s), std::move(c)};
}

}  // namespace

template <class T>
Series<T> sin_series(const Series<T>& a) {
  return sin_cos(a, "sin").first;
}

template <class T>
Series<T> cos_series(const Series<T>& a) {
  return sin_cos(a, "cos").second;
}

template <class T>
Series<T> tan_series(const Series<T>& a) {
  auto [s, c] = sin_cos(a, "tan");
  return s * reciprocal(c);
}

template <class T>
Series<T> arctan_series(const Series<T>& a) {
  if (!Tr<T>::is_zero(a[0])) throw Error(ErrorCode::kBadConstantTerm, "arctan needs a zero constant term");
  if (a.order() == 0) return Series<T>(0);
  Series<T> one_plus_sq = a * a;
  one_plus_sq[0] += Tr<T>::from_int(1);
  return integral(derivative(a) * reciprocal(one_plus_sq));
}

template <class T>
Series<T> taylor_shift(const Series<T>& a, const T& c) {
  const std::size_t n = a.order();
  Series<T> r(n);
  // Horner: r <- r*(x + c) + a_k, truncation never bites since deg r <= n.
  for (std::size_t k = n + 1; k-- > 0;) {
    for (std::size_t j = n; j >= 1; --j) r[j] = r[j - 1] + r[j] * c;
    r[0] = r[0] * c + a[k];
  }
  return r;
}

ComplexSeries to_complex(const TruncatedSeries& a) {
  ComplexSeries r(a.order());
  for (std::size_t k = 0; k <= a.order(); ++k) r[k] = CoeffTraits<Rational>::to_complex(a[k]);
  return r;
}

template <class T>
EvalResult eval_complex(const Series<T>& a, Complex z, double guard) {
  if (!(std::abs(z) <= guard)) {
    throw Error(ErrorCode::kGuardExceeded, "|z| = " + std::to_string(std::abs(z)) + " exceeds guard " +
                                               std::to_string(guard));
  }
  Complex acc{};
  for (std::size_t k = a.order() + 1; k-- > 0;) acc = acc * z + Tr<T>::to_complex(a[k]);
  const double tail = Tr<T>::magnitude(a[a.order()]) * std::pow(std::abs(z), static_cast<double>(a.order()));
  return {acc, tail};
}

#define SHEFFER_INSTANTIATE_SERIES(T)                                        \
  template class Series<T>;                                                  \
  template Series<T> operator+(const Series<T>&, const Series<T>&);          \
  template Series<T> operator-(const Series<T>&, const Series<T>&);          \
  template Series<T> operator-(const Series<T>&);                            \
  template Series<T> operator*(const Series<T>&, const Series<T>&);          \
  template Series<T> scale(const Series<T>&, const T&);                      \
  template Series<T> derivative(const Series<T>&);                           \
  template Series<T> integral(const Series<T>&);                             \
  template Series<T> reciprocal(const Series<T>&);                           \
  template Series<T> power(const Series<T>&, int);                           \
  template Series<T> compose(const Series<T>&, const Series<T>&);            \
  template Series<T> comp_inverse(const Series<T>&);                         \
  template Series<T> exp_series(const Series<T>&);                           \
  template Series<T> log_series(const Series<T>&);                           \
  template Series<T> sqrt_series(const Series<T>&);                          \
  template Series<T> sin_series(const Series<T>&);                           \
  template Series<T> cos_series(const Series<T>&);                           \
  template Series<T> tan_series(const Series<T>&);                           \
  template Series<T> arctan_series(const Series<T>&);                        \
  template Series<T> taylor_shift(const Series<T>&, const T&);               \
  template EvalResult eval_complex(const Series<T>&, Complex, double);

SHEFFER_INSTANTIATE_SERIES(Rational)
SHEFFER_INSTANTIATE_SERIES(Complex)

#undef SHEFFER_INSTANTIATE_SERIES

}  // namespace sheffer
