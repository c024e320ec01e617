#include "sheffer/sequence.hpp"

namespace sheffer {

ShefferPair ShefferPair::make(TruncatedSeries f, TruncatedSeries g, std::string label, bool* rescaled) {
  if (f.order() < 1) throw Error(ErrorCode::kInvalidPair, "f must be given to order >= 1");
  if (sgn(f[0]) != 0) throw Error(ErrorCode::kInvalidPair, "f(0) must be 0");
  if (sgn(f[1]) == 0) throw Error(ErrorCode::kInvalidPair, "f'(0) must be nonzero");
  if (sgn(g[0]) == 0) throw Error(ErrorCode::kInvalidPair, "g(0) must be nonzero");
  const bool needs_rescale = g[0] != 1;
  if (needs_rescale) {
    const Rational inv = 1 / g[0];
    g = scale(g, Rational(inv));
  }
  if (rescaled) *rescaled = needs_rescale;
  return ShefferPair(std::move(f), std::move(g), std::move(label));
}

ShefferSequence sequence_via_egf(const ShefferPair& pair, std::size_t n) {
  if (n > pair.order()) {
    throw Error(ErrorCode::kOrderExceeded, "sequence index " + std::to_string(n) + " beyond series order " +
                                               std::to_string(pair.order()));
  }
  const std::size_t order = std::max<std::size_t>(n, 1);
  const TruncatedSeries finv = comp_inverse(pair.f().truncated(order));
  const TruncatedSeries prefactor =
      reciprocal(compose(pair.g().truncated(std::min(order, pair.g().order())), finv));

  // exp(x F) = sum_k x^k F^k / k!, so [x^k] s_m = m!/k! [t^m] (R F^k).
  std::vector<std::vector<Rational>> rows(n + 1);
  for (std::size_t m = 0; m <= n; ++m) rows[m].assign(m + 1, Rational(0));
  TruncatedSeries q = prefactor;
  for (std::size_t k = 0; k <= n; ++k) {
    const Rational inv_kfact = 1 / factorial(static_cast<unsigned>(k));
    for (std::size_t m = k; m <= n; ++m) {
      rows[m][k] = factorial(static_cast<unsigned>(m)) * inv_kfact * q[m];
    }
    if (k < n) q = q * finv;
  }
  ShefferSequence seq{pair, {}};
  seq.polys.reserve(n + 1);
  for (auto& r : rows) seq.polys.emplace_back(std::move(r));
  return seq;
}

WeylElement build_lowering(const ShefferPair& pair, unsigned d_order) {
  if (d_order > pair.f().order()) {
    throw Error(ErrorCode::kOrderExceeded, "lowering operator needs f to order " + std::to_string(d_order));
  }
  return from_series(pair.f().truncated(d_order), Variable::kD);
}

WeylElement build_raising(const ShefferPair& pair, unsigned d_order) {
  if (d_order + 1 > pair.order()) {
    throw Error(ErrorCode::kOrderExceeded, "raising operator at D-order " + std::to_string(d_order) +
                                               " needs series order " + std::to_string(d_order + 1));
  }
  const TruncatedSeries g = pair.g().truncated(d_order + 1);
  const TruncatedSeries f = pair.f().truncated(d_order + 1);
  const TruncatedSeries k = reciprocal(derivative(f));
  const TruncatedSeries h = derivative(g) * reciprocal(g.truncated(d_order));
  // (X - h(D)) k(D) = X k(D) - (h k)(D)
  WeylElement m = WeylElement::x() * from_series(k, Variable::kD);
  m -= from_series(h * k, Variable::kD);
  return m;
}

ShefferSequence sequence_via_raising(const ShefferPair& pair, std::size_t n) {
  ShefferSequence seq{pair, {}};
  seq.polys.push_back(Polynomial::constant(Rational(1)));
  if (n == 0) return seq;
  const WeylElement m = build_raising(pair, static_cast<unsigned>(n - 1));
  for (std::size_t k = 1; k <= n; ++k) seq.polys.push_back(apply(m, seq.polys.back()));
  return seq;
}

std::vector<Rational> sheffer_coeffs(const ShefferSequence& seq, std::size_t n) {
  if (n >= seq.polys.size()) {
    throw Error(ErrorCode::kIndexOutOfRange, "row " + std::to_string(n) + " not generated");
  }
  return seq.polys[n].row(n + 1);
}

std::vector<IdentityCheck> verify_monomiality(const ShefferPair& operators, const ShefferSequence& seq,
                                              std::size_t max_n) {
  if (seq.polys.size() < max_n + 2) {
    throw Error(ErrorCode::kOrderExceeded, "sequence must reach index " + std::to_string(max_n + 1));
  }
  const auto d_order = static_cast<unsigned>(max_n + 1);
  const WeylElement m = build_raising(operators, d_order);
  const WeylElement p = build_lowering(operators, d_order);
  const ShefferSequence raised = sequence_via_raising(operators, max_n + 1);
  const std::string& fam = operators.label();

  std::vector<IdentityCheck> rows;
  auto record = [&](const char* id, std::size_t n, const Polynomial& lhs, const Polynomial& rhs) {
    IdentityCheck row{fam, id, static_cast<int>(n), lhs == rhs, true, {}};
    if (!row.pass) row.detail = "lhs = " + lhs.to_string() + ", rhs = " + rhs.to_string();
    rows.push_back(std::move(row));
  };
  for (std::size_t n = 0; n <= max_n; ++n) {
    const Polynomial& s = seq.polys[n];
    const Rational rn(static_cast<unsigned long>(n));
    record("M s_n = s_{n+1}", n, apply(m, s), seq.polys[n + 1]);
    record("P s_n = n s_{n-1}", n, apply(p, s), n == 0 ? Polynomial{} : scale(seq.polys[n - 1], rn));
    record("M P s_n = n s_n", n, apply(m, apply(p, s)), scale(s, rn));
    record("egf route = raising route", n, s, raised.polys[n]);
  }
  return rows;
}

std::vector<IdentityCheck> verify_monomiality(const ShefferPair& pair, std::size_t max_n) {
  return verify_monomiality(pair, sequence_via_egf(pair, max_n + 1), max_n);
}

std::vector<IdentityCheck> verify_commutator(const ShefferPair& pair, std::size_t max_n) {
  const auto d_order = static_cast<unsigned>(max_n + 1);
  const WeylElement m = build_raising(pair, d_order);
  const WeylElement p = build_lowering(pair, d_order);
  const WeylElement c = commutator(p, m);
  std::vector<IdentityCheck> rows;
  for (std::size_t n = 0; n <= max_n; ++n) {
    const Polynomial xn = Polynomial::monomial(static_cast<unsigned>(n));
    const Polynomial weyl = apply(c, xn);
    const Polynomial direct = apply(p, apply(m, xn)) - apply(m, apply(p, xn));
    IdentityCheck row{pair.label(), "[P, M] x^n = x^n", static_cast<int>(n), weyl == xn && direct == xn, true, {}};
    if (!row.pass) row.detail = "weyl route " + weyl.to_string() + ", direct " + direct.to_string();
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace sheffer
