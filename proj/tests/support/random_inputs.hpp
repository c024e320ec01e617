#pragma once

#include <random>

#include "sheffer/polynomial.hpp"
#include "sheffer/series.hpp"
#include "sheffer/weyl.hpp"

namespace sheffer::testing {

inline Rational random_rational(std::mt19937& rng, int max_num = 9, int max_den = 4) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Rational random_nonzero(std::mt19937& rng) {
  for (;;) {
    Rational r = random_rational(rng);
    if (r != 0) return r;
  }
}

/// Random series with the given constant term (random when `c0` is null).
inline TruncatedSeries random_series(std::mt19937& rng, std::size_t order, const Rational* c0 = nullptr) {
  TruncatedSeries s(order);
  for (std::size_t k = 0; k <= order; ++k) s[k] = random_rational(rng);
  if (c0 != nullptr) s[0] = *c0;
  return s;
}

/// f with f(0) = 0 and f'(0) != 0.
inline TruncatedSeries random_invertible(std::mt19937& rng, std::size_t order) {
  const Rational zero(0);
  TruncatedSeries f = random_series(rng, order, &zero);
  f[1] = random_nonzero(rng);
  return f;
}

inline Polynomial random_polynomial(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = random_rational(rng);
  return Polynomial(std::move(c));
}

inline WeylElement random_weyl(std::mt19937& rng, unsigned max_power, int terms) {
  std::uniform_int_distribution<unsigned> pw(0, max_power);
  WeylElement u;
  for (int i = 0; i < terms; ++i) u.add_term(pw(rng), pw(rng), random_rational(rng));
  return u;
}

}  // namespace sheffer::testing
