#include "sheffer/normal_order.hpp"

#include <cmath>
#include <set>
#include <tuple>

namespace sheffer {

void NormallyOrderedSeries::add(unsigned adag_power, unsigned a_power, std::size_t lambda_power,
                                const Rational& c) {
  if (sgn(c) == 0 || lambda_power > lambda_order_ || a_power > a_order_) return;
  Polynomial& p = terms_[{adag_power, a_power}];
  p += Polynomial::monomial(lambda_power, c);
  if (p.is_zero()) terms_.erase({adag_power, a_power});
}

Polynomial NormallyOrderedSeries::coeff(unsigned adag_power, unsigned a_power) const {
  auto it = terms_.find({adag_power, a_power});
  return it == terms_.end() ? Polynomial{} : it->second;
}

namespace {

// Truncated series in t whose coefficients are truncated series in a.
class TaSeries {
 public:
  TaSeries(std::size_t t_order, std::size_t a_order) : c_(t_order + 1, TruncatedSeries(a_order)) {}

  std::size_t t_order() const { return c_.size() - 1; }
  std::size_t a_order() const { return c_[0].order(); }
  TruncatedSeries& operator[](std::size_t k) { return c_[k]; }
  const TruncatedSeries& operator[](std::size_t k) const { return c_[k]; }

  friend TaSeries operator*(const TaSeries& x, const TaSeries& y) {
    TaSeries r(x.t_order(), x.a_order());
    for (std::size_t i = 0; i <= r.t_order(); ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; i + j <= r.t_order(); ++j) r[i + j] = r[i + j] + x[i] * y[j];
    }
    return r;
  }

  friend TaSeries operator-(TaSeries x, const TaSeries& y) {
    for (std::size_t k = 0; k <= x.t_order(); ++k) x[k] = x[k] - y[k];
    return x;
  }

 private:
  std::vector<TruncatedSeries> c_;
};

// outer(inner) with inner(0, 0) = 0: Horner in the univariate outer series.
TaSeries compose(const TruncatedSeries& outer, const TaSeries& inner) {
  if (sgn(inner[0][0]) != 0) throw Error(ErrorCode::kNonzeroInnerConstant, "inner series must vanish at 0");
  TaSeries r(inner.t_order(), inner.a_order());
  const std::size_t n = outer.order();
  r[0][0] = outer[n];
  for (std::size_t k = n; k-- > 0;) {
    r = r * inner;
    r[0][0] += outer[k];
  }
  return r;
}

TaSeries reciprocal(const TaSeries& x) {
  TaSeries b(x.t_order(), x.a_order());
  const TruncatedSeries inv0 = sheffer::reciprocal(x[0]);
  b[0] = inv0;
  for (std::size_t n = 1; n <= x.t_order(); ++n) {
    TruncatedSeries acc(x.a_order());
    for (std::size_t k = 1; k <= n; ++k) acc = acc + x[k] * b[n - k];
    b[n] = -(inv0 * acc);
  }
  return b;
}

}  // namespace

NormallyOrderedSeries normal_order_rhs(const ShefferPair& pair, std::size_t lambda_order, unsigned a_order) {
  const std::size_t total = lambda_order + a_order;
  if (pair.order() < std::max<std::size_t>(total, 1)) {
    throw Error(ErrorCode::kOrderExceeded, "normal_order_rhs needs series order " + std::to_string(total));
  }
  const std::size_t n = std::max<std::size_t>(total, 1);
  const TruncatedSeries finv = comp_inverse(pair.f().truncated(n));

  // u(t, a) = t + f(a)
  TaSeries u(lambda_order, a_order);
  u[0] = pair.f().truncated(a_order);
  if (lambda_order >= 1) u[1][0] = 1;

  const TaSeries shifted = compose(finv, u);  // f^{-1}(t + f(a))
  TaSeries a_series(lambda_order, a_order);
  if (a_order >= 1) a_series[0][1] = 1;
  const TaSeries exponent = shifted - a_series;

  TaSeries g_a(lambda_order, a_order);
  g_a[0] = pair.g().truncated(a_order);
  const TaSeries ratio = g_a * reciprocal(compose(pair.g().truncated(n), shifted));

  NormallyOrderedSeries out(lambda_order, a_order);
  TaSeries power = ratio;  // exponent^i / i! * ratio
  for (std::size_t i = 0; i <= lambda_order; ++i) {
    for (std::size_t k = 0; k <= lambda_order; ++k)
      for (std::size_t j = 0; j <= a_order; ++j)
        out.add(static_cast<unsigned>(i), static_cast<unsigned>(j), k, power[k][j]);
    if (i < lambda_order) {
      power = power * exponent;
      const Rational inv(1, static_cast<unsigned long>(i + 1));
      for (std::size_t k = 0; k <= lambda_order; ++k) power[k] = scale(power[k], inv);
    }
  }
  return out;
}

NormallyOrderedSeries normal_order_lhs(const ShefferPair& pair, std::size_t lambda_order, unsigned a_order) {
  // M raises a^dagger-degree by at most one per factor, so a D-power above
  // a_order + lambda_order can never come back down to a_order.
  const auto cap = static_cast<unsigned>(a_order + lambda_order);
  const WeylElement m = build_raising(pair, cap);
  const OperatorSeries e = op_exp(m, lambda_order, cap);
  NormallyOrderedSeries out(lambda_order, a_order);
  for (std::size_t k = 0; k <= lambda_order; ++k)
    for (const auto& [key, c] : e.coeffs[k].terms()) out.add(key.first, key.second, k, c);
  return out;
}

std::vector<TermComparison> compare_normal_forms(const NormallyOrderedSeries& lhs,
                                                 const NormallyOrderedSeries& rhs) {
  std::set<std::tuple<unsigned, unsigned, std::size_t>> keys;
  for (const auto* s : {&lhs, &rhs})
    for (const auto& [key, poly] : s->terms())
      for (std::size_t k = 0; k < poly.coeffs().size(); ++k)
        if (sgn(poly.coeffs()[k]) != 0) keys.emplace(key.first, key.second, k);
  std::vector<TermComparison> out;
  out.reserve(keys.size());
  for (const auto& [i, j, k] : keys) out.push_back({i, j, k, lhs.coeff(i, j)[k], rhs.coeff(i, j)[k]});
  return out;
}

std::vector<IdentityCheck> verify_normal_order(const ShefferPair& operators, const ShefferPair& closed_form,
                                               std::size_t lambda_order, unsigned a_order) {
  const auto lhs = normal_order_lhs(operators, lambda_order, a_order);
  const auto rhs = normal_order_rhs(closed_form, lambda_order, a_order);
  const auto terms = compare_normal_forms(lhs, rhs);
  std::vector<IdentityCheck> rows;
  for (std::size_t k = 0; k <= lambda_order; ++k) {
    IdentityCheck row{operators.label(), "N[exp(tM)] = :closed form: at t^k", static_cast<int>(k), true, true, {}};
    std::size_t checked = 0, bad = 0;
    for (const auto& t : terms) {
      if (t.lambda_power != k) continue;
      ++checked;
      if (!t.pass()) {
        if (bad++ == 0) {
          row.detail = "first mismatch at a^dagger^" + std::to_string(t.adag_power) + " a^" +
                       std::to_string(t.a_power) + ": lhs " + to_string(t.lhs) + ", rhs " + to_string(t.rhs);
        }
      }
    }
    row.pass = bad == 0;
    if (row.pass) row.detail = std::to_string(checked) + " terms equal";
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<IdentityCheck> verify_normal_order(const ShefferPair& pair, std::size_t lambda_order,
                                               unsigned a_order) {
  return verify_normal_order(pair, pair, lambda_order, a_order);
}

NormallyOrderedSeries conjugate_normal_form(const NormallyOrderedSeries& s) {
  unsigned max_adag = 0;
  for (const auto& [key, p] : s.terms()) max_adag = std::max(max_adag, key.first);
  NormallyOrderedSeries out(s.lambda_order(), std::max(s.a_order(), max_adag));
  for (const auto& [key, p] : s.terms())
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) out.add(key.second, key.first, k, p.coeffs()[k]);
  return out;
}

namespace {

double inv_sqrt_factorial(std::size_t l) {
  double r = 1.0;
  for (std::size_t t = 2; t <= l; ++t) r /= std::sqrt(static_cast<double>(t));
  return r;
}

}  // namespace

Complex mono_element(const ShefferSequence& seq, std::size_t n, std::size_t l, Complex zc) {
  if (n + l > seq.max_index()) {
    throw Error(ErrorCode::kOrderExceeded, "need s_" + std::to_string(n + l) + ", sequence stops at s_" +
                                               std::to_string(seq.max_index()));
  }
  return seq.polys[n + l].evaluate(zc) * inv_sqrt_factorial(l);
}

Complex mono_element_exact(const ShefferPair& pair, std::size_t n, std::size_t l, Complex zc) {
  Polynomial p = Polynomial::monomial(l);
  if (n > 0) {
    const WeylElement m = build_raising(pair, static_cast<unsigned>(n + l - 1));
    for (std::size_t k = 0; k < n; ++k) p = apply(m, p);
  }
  return p.evaluate(zc) * inv_sqrt_factorial(l);
}

EvalResult exp_element_vac(const ShefferPair& pair, Complex t, Complex zc, double guard, std::size_t terms) {
  return exp_element_state(pair, t, zc, 0, guard, terms);
}

EvalResult exp_element_state(const ShefferPair& pair, Complex t, Complex zc, std::size_t l, double guard,
                             std::size_t terms) {
  if (std::abs(t) > guard) throw Error(ErrorCode::kGuardExceeded, "|lambda| exceeds guard");
  const std::size_t top = std::min(terms + l, pair.order());
  if (top < l) throw Error(ErrorCode::kOrderExceeded, "derivative order beyond series order");
  const ShefferSequence seq = sequence_via_egf(pair, top);
  ComplexSeries c(top - l);
  for (std::size_t n = 0; n + l <= top; ++n)
    c[n] = seq.polys[n + l].evaluate(zc) / factorial(static_cast<unsigned>(n)).get_d();
  EvalResult r = eval_complex(c, t, guard);
  const double s = inv_sqrt_factorial(l);
  return {r.value * s, r.tail_estimate * s};
}

EvalResult exp_element_state_exact(const ShefferPair& pair, Complex t, Complex zc, std::size_t l, double guard,
                                   std::size_t terms) {
  if (std::abs(t) > guard) throw Error(ErrorCode::kGuardExceeded, "|lambda| exceeds guard");
  if (pair.order() < l + 2) throw Error(ErrorCode::kOrderExceeded, "series order too small");
  const std::size_t n_max = std::min(terms, pair.order() - l - 1);
  const WeylElement m = build_raising(pair, static_cast<unsigned>(l + n_max));
  ComplexSeries c(n_max);
  Polynomial p = Polynomial::monomial(l);
  for (std::size_t n = 0; n <= n_max; ++n) {
    c[n] = p.evaluate(zc) / factorial(static_cast<unsigned>(n)).get_d();
    if (n < n_max) p = apply(m, p);
  }
  EvalResult r = eval_complex(c, t, guard);
  const double s = inv_sqrt_factorial(l);
  return {r.value * s, r.tail_estimate * s};
}

Complex coherent_overlap(Complex z, Complex zp) {
  return std::exp(std::conj(z) * zp - 0.5 * std::norm(zp) - 0.5 * std::norm(z));
}

Complex exp_element_coherent(const NumericPair& numeric, Complex t, Complex z, Complex zp) {
  const Complex w = numeric.f_inverse(t + numeric.f(zp));
  return numeric.g(zp) / numeric.g(w) * std::exp(std::conj(z) * (w - zp)) * coherent_overlap(z, zp);
}

template <class T>
std::pair<Series<T>, Series<T>> shifted_pair(const Series<T>& f, const Series<T>& g, const T& zp) {
  Series<T> ft = taylor_shift(f, zp);
  ft[0] = CoeffTraits<T>::from_int(0);
  Series<T> gt = taylor_shift(g, zp);
  if (CoeffTraits<T>::is_zero(gt[0])) throw Error(ErrorCode::kInvalidPair, "g vanishes at the shift point");
  const T inv = CoeffTraits<T>::from_int(1) / gt[0];
  return {std::move(ft), scale(gt, inv)};
}

template std::pair<TruncatedSeries, TruncatedSeries> shifted_pair(const TruncatedSeries&, const TruncatedSeries&,
                                                                  const Rational&);
template std::pair<ComplexSeries, ComplexSeries> shifted_pair(const ComplexSeries&, const ComplexSeries&,
                                                              const Complex&);

EvalResult exp_element_coherent_series(const ShefferPair& pair, Complex t, Complex z, Complex zp, double guard) {
  if (std::abs(t) > guard) throw Error(ErrorCode::kGuardExceeded, "|lambda| exceeds guard");
  const auto [ft, gt] = shifted_pair(to_complex(pair.f()), to_complex(pair.g()), zp);
  const ComplexSeries finv = comp_inverse(ft);
  const ComplexSeries gen = reciprocal(compose(gt, finv)) * exp_series(scale(finv, std::conj(z)));
  EvalResult r = eval_complex(gen, t, guard);
  const Complex ov = coherent_overlap(z, zp);
  return {r.value * ov, r.tail_estimate * std::abs(ov)};
}

NumericPair numeric_from_series(const ShefferPair& pair, double guard) {
  const TruncatedSeries f = pair.f();
  const TruncatedSeries g = pair.g();
  const TruncatedSeries finv = comp_inverse(pair.f());
  return {[f, guard](Complex z) { return eval_complex(f, z, guard).value; },
          [finv, guard](Complex w) { return eval_complex(finv, w, guard).value; },
          [g, guard](Complex z) { return eval_complex(g, z, guard).value; }};
}

}  // namespace sheffer
