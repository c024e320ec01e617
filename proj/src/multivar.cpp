#include "sheffer/multivar.hpp"

#include <map>
#include <string>

#include "sheffer/catalog.hpp"
#include "sheffer/error.hpp"

namespace sheffer {

namespace {

// Split p into slices along one variable: slice[k] is the polynomial in the
// other variable multiplying (that variable)^k.
std::map<unsigned, Polynomial> slices(const BivariatePolynomial& p, bool along_y) {
  std::map<unsigned, std::vector<Rational>> rows;
  for (const auto& [key, c] : p.terms()) {
    const auto [i, j] = key;
    const unsigned outer = along_y ? i : j;
    const unsigned inner = along_y ? j : i;
    auto& v = rows[outer];
    if (v.size() <= inner) v.resize(inner + 1);
    v[inner] = c;
  }
  std::map<unsigned, Polynomial> out;
  for (auto& [k, v] : rows) out.emplace(k, Polynomial(std::move(v)));
  return out;
}

BivariatePolynomial apply_along(const WeylElement& u, const BivariatePolynomial& p, bool along_y) {
  BivariatePolynomial out;
  for (const auto& [k, poly] : slices(p, along_y)) {
    const Polynomial r = apply(u, poly);
    for (int e = 0; e <= r.degree(); ++e) {
      const auto ue = static_cast<unsigned>(e);
      if (along_y) {
        out.add_term(k, ue, r[ue]);
      } else {
        out.add_term(ue, k, r[ue]);
      }
    }
  }
  return out;
}

IdentityCheck row(std::string family, std::string identity, int n, bool pass, std::string detail = {}) {
  return {std::move(family), std::move(identity), n, pass, true, std::move(detail)};
}

IdentityCheck recorded(std::string family, std::string identity, int n, bool pass, std::string detail = {}) {
  return {std::move(family), std::move(identity), n, pass, false, std::move(detail)};
}

std::string mismatch(const BivariatePolynomial& got, const BivariatePolynomial& want) {
  return got == want ? std::string{} : "got " + got.to_string() + ", expected " + want.to_string();
}

std::string mismatch(const Polynomial& got, const Polynomial& want) {
  return got == want ? std::string{} : "got " + got.to_string() + ", expected " + want.to_string();
}

WeylElement f_of_d(const ShefferPair& pair, unsigned d_order) { return build_lowering(pair, d_order); }

}  // namespace

BivariatePolynomial hkdf(unsigned m, std::size_t n) {
  if (m == 0) throw Error(ErrorCode::kIndexOutOfRange, "hkdf index m must be at least 1");
  BivariatePolynomial out;
  const Rational nf = factorial(static_cast<unsigned>(n));
  for (std::size_t r = 0; m * r <= n; ++r) {
    const std::size_t xp = n - m * r;
    out.add_term(static_cast<unsigned>(xp), static_cast<unsigned>(r),
                 nf / (factorial(static_cast<unsigned>(xp)) * factorial(static_cast<unsigned>(r))));
  }
  return out;
}

BivariatePolynomial apply_x(const WeylElement& u, const BivariatePolynomial& p) { return apply_along(u, p, false); }
BivariatePolynomial apply_y(const WeylElement& u, const BivariatePolynomial& p) { return apply_along(u, p, true); }

std::vector<IdentityCheck> hkdf_ladder_check(unsigned m, std::size_t max_n) {
  const std::string fam = "hkdf m=" + std::to_string(m);
  std::vector<IdentityCheck> rows;
  std::vector<BivariatePolynomial> h;
  for (std::size_t n = 0; n <= max_n + 1; ++n) h.push_back(hkdf(m, n));

  // M = x + m y D_x^{m-1}; the y factor is applied by shifting y-powers.
  const WeylElement dpow = WeylElement::monomial(0, m - 1);
  auto raise = [&](const BivariatePolynomial& p) {
    BivariatePolynomial out = apply_x(WeylElement::x(), p);
    const BivariatePolynomial dp = apply_x(dpow, p);
    for (const auto& [key, c] : dp.terms()) out.add_term(key.first, key.second + 1, c * m);
    return out;
  };

  // exp(x t + y t^m) by E_k = (1/k) sum_j j u_j E_{k-j}, u_1 = x, u_m = y (u_1 = x + y when m = 1).
  std::vector<BivariatePolynomial> u(max_n + 1);
  if (max_n >= 1) u[1].add_term(1, 0, Rational(1));
  if (m <= max_n) u[m].add_term(0, 1, Rational(1));
  std::vector<BivariatePolynomial> e(max_n + 1);
  e[0] = BivariatePolynomial::constant(Rational(1));
  for (std::size_t k = 1; k <= max_n; ++k) {
    BivariatePolynomial acc;
    for (std::size_t j = 1; j <= k; ++j) {
      if (u[j].is_zero()) continue;
      acc += scale(u[j] * e[k - j], Rational(static_cast<unsigned long>(j)));
    }
    e[k] = scale(acc, Rational(1, static_cast<unsigned long>(k)));
  }

  for (std::size_t n = 0; n <= max_n; ++n) {
    const int ni = static_cast<int>(n);
    const BivariatePolynomial up = raise(h[n]);
    rows.push_back(row(fam, "M H_n = H_{n+1}", ni, up == h[n + 1], mismatch(up, h[n + 1])));
    const BivariatePolynomial down = apply_x(WeylElement::d(), h[n]);
    const BivariatePolynomial want =
        n == 0 ? BivariatePolynomial{} : scale(h[n - 1], Rational(static_cast<unsigned long>(n)));
    rows.push_back(row(fam, "D_x H_n = n H_{n-1}", ni, down == want, mismatch(down, want)));
    const BivariatePolynomial egf = scale(e[n], factorial(static_cast<unsigned>(n)));
    rows.push_back(row(fam, "H_n = n! [t^n] exp(x t + y t^m)", ni, egf == h[n], mismatch(h[n], egf)));
  }
  return rows;
}

BivariatePolynomial umbral_S(const ShefferSequence& seq, std::size_t n) {
  if (n > seq.max_index()) throw Error(ErrorCode::kOrderExceeded, "sequence too short for S_n");
  BivariatePolynomial out;
  const Rational nf = factorial(static_cast<unsigned>(n));
  for (std::size_t r = 0; 2 * r <= n; ++r) {
    const std::size_t k = n - 2 * r;
    const Rational c = nf / (factorial(static_cast<unsigned>(k)) * factorial(static_cast<unsigned>(r)));
    out += scale(BivariatePolynomial::outer(seq.polys[k], seq.polys[r]), c);
  }
  return out;
}

std::vector<BivariatePolynomial> umbral_S(const ShefferPair& pair, std::size_t max_n) {
  const ShefferSequence seq = sequence_via_egf(pair, max_n);
  std::vector<BivariatePolynomial> out;
  for (std::size_t n = 0; n <= max_n; ++n) out.push_back(umbral_S(seq, n));
  return out;
}

std::vector<IdentityCheck> heat_check(const ShefferPair& pair, std::size_t max_n) {
  const auto s = umbral_S(pair, max_n);
  const WeylElement p = f_of_d(pair, static_cast<unsigned>(max_n));
  std::vector<IdentityCheck> rows;
  for (std::size_t n = 0; n <= max_n; ++n) {
    const BivariatePolynomial lhs = apply_y(p, s[n]);
    const BivariatePolynomial rhs = apply_x(p, apply_x(p, s[n]));
    rows.push_back(row(pair.label(), "f(D_y) S_n = f(D_x)^2 S_n", static_cast<int>(n), lhs == rhs, mismatch(lhs, rhs)));
  }
  return rows;
}

std::vector<IdentityCheck> theta_pi_check(const ShefferPair& pair, std::size_t max_degree) {
  const auto dmax = static_cast<unsigned>(max_degree + 1);
  const WeylElement p = f_of_d(pair, dmax);
  const WeylElement m = build_raising(pair, dmax);
  auto pi = [&](const BivariatePolynomial& q) { return apply_x(p, q); };
  auto theta = [&](const BivariatePolynomial& q) {
    BivariatePolynomial out = apply_x(m, q);
    out += scale(apply_y(m, apply_y(p, q)), Rational(2));
    return out;
  };
  // Same, with the factor f(D) taken in x.
  auto theta_x = [&](const BivariatePolynomial& q) {
    BivariatePolynomial out = apply_x(m, q);
    out += scale(apply_y(m, apply_x(p, q)), Rational(2));
    return out;
  };

  std::vector<IdentityCheck> rows;
  const std::string& fam = pair.label();
  for (unsigned deg = 0; deg <= max_degree; ++deg) {
    bool ok = true;
    std::string detail;
    for (unsigned i = 0; i <= deg; ++i) {
      const BivariatePolynomial mono = BivariatePolynomial::monomial(i, deg - i);
      const BivariatePolynomial c = pi(theta(mono)) - theta(pi(mono));
      if (c != mono && ok) {
        ok = false;
        detail = "on x^" + std::to_string(i) + " y^" + std::to_string(deg - i) + ": " + mismatch(c, mono);
      }
    }
    rows.push_back(row(fam, "[Pi, Theta] = 1 on total degree n", static_cast<int>(deg), ok, detail));
  }

  const auto s = umbral_S(pair, max_degree);
  for (std::size_t n = 0; n < max_degree; ++n) {
    const int ni = static_cast<int>(n);
    const BivariatePolynomial up = theta(s[n]);
    rows.push_back(recorded(fam, "Theta S_n = S_{n+1} (recorded)", ni, up == s[n + 1], mismatch(up, s[n + 1])));
    const BivariatePolynomial up_x = theta_x(s[n]);
    rows.push_back(recorded(fam, "(M_x + 2 M_y f(D_x)) S_n = S_{n+1} (recorded)", ni, up_x == s[n + 1],
                       mismatch(up_x, s[n + 1])));
    const BivariatePolynomial down = pi(s[n]);
    const BivariatePolynomial want =
        n == 0 ? BivariatePolynomial{} : scale(s[n - 1], Rational(static_cast<unsigned long>(n)));
    rows.push_back(recorded(fam, "Pi S_n = n S_{n-1} (recorded)", ni, down == want, mismatch(down, want)));
  }
  return rows;
}

Polynomial pi_recursion(const Polynomial& q, std::size_t n) {
  Polynomial cur = q;
  for (std::size_t step = 0; step < n; ++step) {
    // pi(X + s) = sum_k pi^{(k)}(X)/k! s^k and int_0^inf s^k e^{-s} ds = k!.
    Polynomial integral;
    Polynomial deriv = cur;
    Rational kf(1);
    for (unsigned k = 0; !deriv.is_zero(); ++k) {
      if (k > 0) kf *= k;
      integral += scale(scale(deriv, 1 / kf), kf);
      deriv = derivative(deriv);
    }
    cur = shift_up(integral);
  }
  return cur;
}

namespace {

ShefferPair bessel_pair(std::size_t d_order) { return family("bessel", d_order + 2).pair; }

}  // namespace

std::vector<IdentityCheck> pi_recursion_check(const Polynomial& q, std::size_t max_n) {
  const auto d = static_cast<unsigned>(std::max(q.degree(), 0) + max_n + 1);
  const WeylElement m = build_raising(bessel_pair(d), d);
  std::vector<IdentityCheck> rows;
  Polynomial weyl = q;
  for (std::size_t n = 0; n <= max_n; ++n) {
    const Polynomial rec = pi_recursion(q, n);
    rows.push_back(row("bessel", "pi_n = (X (1-D)^{-1})^n q", static_cast<int>(n), rec == weyl, mismatch(rec, weyl)));
    weyl = apply(m, weyl);
  }
  return rows;
}

EvolutionResult evolution_solution(const Polynomial& q, std::size_t y_order) {
  const auto d = static_cast<unsigned>(std::max(q.degree(), 0) + y_order + 2);
  const ShefferPair pair = bessel_pair(d);
  const WeylElement p = build_lowering(pair, d);
  const WeylElement m = build_raising(pair, d);
  const WeylElement pm = p + m;

  EvolutionResult out;
  out.recursion.push_back(q);
  for (std::size_t k = 0; k < y_order; ++k) {
    out.recursion.push_back(scale(apply(pm, out.recursion.back()), Rational(1, static_cast<unsigned long>(k + 1))));
  }

  const OperatorSeries ep = op_exp(p, y_order);
  const OperatorSeries em = op_exp(m, y_order);
  std::vector<Polynomial> emq;
  for (std::size_t b = 0; b <= y_order; ++b) emq.push_back(apply(em.coeffs[b], q));
  std::vector<Polynomial> prod(y_order + 1);
  for (std::size_t a = 0; a <= y_order; ++a) {
    for (std::size_t b = 0; a + b <= y_order; ++b) prod[a + b] += apply(ep.coeffs[a], emq[b]);
  }
  // exp(-y^2/2) = sum_c (-1/2)^c y^{2c} / c!
  out.factored.assign(y_order + 1, Polynomial{});
  Rational gc(1);
  for (std::size_t c = 0; 2 * c <= y_order; ++c) {
    if (c > 0) gc *= Rational(-1, 2 * static_cast<long>(c));
    for (std::size_t k = 0; k + 2 * c <= y_order; ++k) out.factored[k + 2 * c] += scale(prod[k], gc);
  }
  return out;
}

std::vector<IdentityCheck> evolution_check(const Polynomial& q, std::size_t y_order) {
  const EvolutionResult r = evolution_solution(q, y_order);
  std::vector<IdentityCheck> rows;
  for (std::size_t k = 0; k <= y_order; ++k) {
    rows.push_back(row("bessel", "exp(y(P+M)) q = exp(-y^2/2) exp(yP) exp(yM) q at y^k", static_cast<int>(k),
                       r.recursion[k] == r.factored[k], mismatch(r.recursion[k], r.factored[k])));
  }
  return rows;
}

}  // namespace sheffer
