#include "sheffer/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace sheffer {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(std::size_t k, const Rational& c) {
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

std::vector<Rational> Polynomial::row(std::size_t length) const {
  std::vector<Rational> r(length, Rational(0));
  for (std::size_t k = 0; k < std::min(length, coeffs_.size()); ++k) r[k] = coeffs_[k];
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

Complex Polynomial::evaluate(Complex z) const {
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + it->get_d();
  return acc;
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (k == 0 || !unit) out << sheffer::to_string(mag);
    if (k > 0) {
      if (!unit) out << "*";
      out << var;
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
Polynomial operator-(const Polynomial& a) { return scale(a, Rational(-1)); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.coeffs().size() + b.coeffs().size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) r[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return Polynomial(std::move(r));
}

Polynomial scale(const Polynomial& a, const Rational& c) {
  std::vector<Rational> r = a.coeffs();
  for (auto& x : r) x *= c;
  return Polynomial(std::move(r));
}

Polynomial derivative(const Polynomial& a) {
  if (a.degree() < 1) return {};
  std::vector<Rational> r(a.coeffs().size() - 1);
  for (std::size_t k = 1; k < a.coeffs().size(); ++k) r[k - 1] = a.coeffs()[k] * static_cast<unsigned long>(k);
  return Polynomial(std::move(r));
}

Polynomial shift_up(const Polynomial& a) {
  if (a.is_zero()) return {};
  std::vector<Rational> r(a.coeffs().size() + 1, Rational(0));
  std::copy(a.coeffs().begin(), a.coeffs().end(), r.begin() + 1);
  return Polynomial(std::move(r));
}

BivariatePolynomial BivariatePolynomial::constant(const Rational& c) { return monomial(0, 0, c); }

BivariatePolynomial BivariatePolynomial::monomial(unsigned i, unsigned j, const Rational& c) {
  BivariatePolynomial p;
  p.add_term(i, j, c);
  return p;
}

BivariatePolynomial BivariatePolynomial::outer(const Polynomial& px, const Polynomial& qy) {
  BivariatePolynomial p;
  for (std::size_t i = 0; i < px.coeffs().size(); ++i)
    for (std::size_t j = 0; j < qy.coeffs().size(); ++j)
      p.add_term(static_cast<unsigned>(i), static_cast<unsigned>(j), px.coeffs()[i] * qy.coeffs()[j]);
  return p;
}

Rational BivariatePolynomial::coeff(unsigned i, unsigned j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

void BivariatePolynomial::add_term(unsigned i, unsigned j, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

unsigned BivariatePolynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
  return d;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& other) {
  for (const auto& [k, c] : other.terms_) add_term(k.first, k.second, c);
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& other) {
  for (const auto& [k, c] : other.terms_) add_term(k.first, k.second, -c);
  return *this;
}

std::string BivariatePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [i, j] = it->first;
    const Rational& c = it->second;
    if (!first) out << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) out << "-";
    first = false;
    Rational mag = abs(c);
    bool wrote = false;
    if (mag != 1 || (i == 0 && j == 0)) {
      out << sheffer::to_string(mag);
      wrote = true;
    }
    auto factor = [&](const char* v, unsigned e) {
      if (e == 0) return;
      if (wrote) out << "*";
      out << v;
      if (e > 1) out << "^" << e;
      wrote = true;
    };
    factor("x", i);
    factor("y", j);
  }
  return out.str();
}

BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) { return a -= b; }

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial r;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

BivariatePolynomial scale(const BivariatePolynomial& a, const Rational& c) {
  BivariatePolynomial r;
  for (const auto& [k, v] : a.terms()) r.add_term(k.first, k.second, v * c);
  return r;
}

}  // namespace sheffer
