#include "sheffer/weyl.hpp"

#include <algorithm>

namespace sheffer {

WeylElement WeylElement::constant(const Rational& c) { return monomial(0, 0, c); }

WeylElement WeylElement::monomial(unsigned x_power, unsigned d_power, const Rational& c) {
  WeylElement w;
  w.add_term(x_power, d_power, c);
  return w;
}

Rational WeylElement::coeff(unsigned x_power, unsigned d_power) const {
  auto it = terms_.find({x_power, d_power});
  return it == terms_.end() ? Rational(0) : it->second;
}

void WeylElement::add_term(unsigned x_power, unsigned d_power, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace({x_power, d_power}, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

unsigned WeylElement::max_x_degree() const {
  unsigned m = 0;
  for (const auto& [k, c] : terms_) m = std::max(m, k.first);
  return m;
}

unsigned WeylElement::max_d_degree() const {
  unsigned m = 0;
  for (const auto& [k, c] : terms_) m = std::max(m, k.second);
  return m;
}

WeylElement WeylElement::truncated_d(unsigned max_d) const {
  WeylElement w;
  for (const auto& [k, c] : terms_)
    if (k.second <= max_d) w.terms_.emplace(k, c);
  return w;
}

WeylElement& WeylElement::operator+=(const WeylElement& other) {
  for (const auto& [k, c] : other.terms_) add_term(k.first, k.second, c);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& other) {
  for (const auto& [k, c] : other.terms_) add_term(k.first, k.second, -c);
  return *this;
}

WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }

WeylElement scale(const WeylElement& a, const Rational& c) {
  WeylElement r;
  for (const auto& [k, v] : a.terms()) r.add_term(k.first, k.second, v * c);
  return r;
}

namespace {

// k! C(m,k) C(n,k)
Rational reorder_coeff(unsigned m, unsigned n, unsigned k) {
  mpz_class f, bm, bn;
  mpz_fac_ui(f.get_mpz_t(), k);
  mpz_bin_uiui(bm.get_mpz_t(), m, k);
  mpz_bin_uiui(bn.get_mpz_t(), n, k);
  return Rational(f * bm * bn);
}

}  // namespace

WeylElement multiply(const WeylElement& u, const WeylElement& v, std::optional<unsigned> d_cap) {
  WeylElement r;
  for (const auto& [ku, cu] : u.terms()) {
    const auto [a, b] = ku;
    for (const auto& [kv, cv] : v.terms()) {
      const auto [c, d] = kv;
      // X^a (D^b X^c) D^d
      const Rational cc = cu * cv;
      for (unsigned k = 0; k <= std::min(b, c); ++k) {
        const unsigned dp = b + d - k;
        if (d_cap && dp > *d_cap) continue;
        r.add_term(a + c - k, dp, cc * reorder_coeff(b, c, k));
      }
    }
  }
  return r;
}

WeylElement commutator(const WeylElement& u, const WeylElement& v) { return u * v - v * u; }

Polynomial apply(const WeylElement& u, const Polynomial& p) {
  if (p.is_zero() || u.is_zero()) return {};
  const std::size_t deg = static_cast<std::size_t>(p.degree());
  std::vector<Rational> out(deg + u.max_x_degree() + 1, Rational(0));
  for (const auto& [k, c] : u.terms()) {
    const auto [i, j] = k;
    for (std::size_t n = j; n <= deg; ++n) {
      const Rational& pn = p.coeffs()[n];
      if (sgn(pn) == 0) continue;
      mpz_class falling(1);
      for (std::size_t t = 0; t < j; ++t) falling *= static_cast<unsigned long>(n - t);
      out[n + i - j] += c * pn * Rational(falling);
    }
  }
  return Polynomial(std::move(out));
}

WeylElement from_series(const TruncatedSeries& u, Variable var) {
  WeylElement w;
  for (std::size_t k = 0; k <= u.order(); ++k) {
    const auto e = static_cast<unsigned>(k);
    if (var == Variable::kD) w.add_term(0, e, u[k]);
    else w.add_term(e, 0, u[k]);
  }
  return w;
}

OperatorSeries op_exp(const WeylElement& m, std::size_t order, std::optional<unsigned> d_cap) {
  OperatorSeries s;
  s.coeffs.reserve(order + 1);
  s.coeffs.push_back(WeylElement::constant(Rational(1)));
  for (std::size_t n = 1; n <= order; ++n) {
    Rational inv_n(1, static_cast<unsigned long>(n));
    s.coeffs.push_back(scale(multiply(s.coeffs.back(), m, d_cap), inv_n));
  }
  return s;
}

}  // namespace sheffer
