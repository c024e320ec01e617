#include "sheffer/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "sheffer/error.hpp"
#include "sheffer/normal_order.hpp"
#include "sheffer/sequence.hpp"

namespace sheffer {

namespace {

// sqrt(n! / m!) for n >= m.
double sqrt_factorial_ratio(std::size_t n, std::size_t m) {
  return std::exp(0.5 * (std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(m) + 1.0)));
}

double vec_norm(const FockVector& v, ExecPolicy policy) {
  return policy == ExecPolicy::kSerial ? kernels::serial::norm2(v) : kernels::omp::norm2(v);
}

void vec_axpy(Complex alpha, const FockVector& x, FockVector& y, ExecPolicy policy) {
  if (policy == ExecPolicy::kSerial) {
    kernels::serial::axpy(alpha, x, y);
  } else {
    kernels::omp::axpy(alpha, x, y);
  }
}

// Bra for <z| with the factor <z|0> = exp(-|z|^2/2) divided out.
FockVector bare_coherent(Complex z, std::size_t dim) {
  FockVector v(dim);
  Complex p = 1.0;
  for (std::size_t n = 0; n < dim; ++n) {
    v[n] = p;
    p *= z / std::sqrt(static_cast<double>(n + 1));
  }
  return v;
}

// Split a normal-form raising operator X k(D) - (hk)(D) into k and hk.
std::pair<ComplexSeries, ComplexSeries> raising_parts(const WeylElement& m, std::size_t order) {
  ComplexSeries k(order);
  ComplexSeries hk(order);
  for (const auto& [key, c] : m.terms()) {
    const auto [xp, dp] = key;
    if (dp > order) continue;
    if (xp == 1) k[dp] += c.get_d();
    if (xp == 0) hk[dp] -= c.get_d();
    if (xp > 1) throw Error(ErrorCode::kInvalidPair, "raising operator is not linear in X");
  }
  return {k, hk};
}

FockMatrix raising_from_parts(const ComplexSeries& k, const ComplexSeries& hk, std::size_t dim,
                              const std::string& label) {
  const FockMatrix adag = creation(dim);
  FockMatrix m = multiply(adag, series_in_a(k, dim), ExecPolicy::kSerial) - series_in_a(hk, dim);
  m.set_label(label);
  return m;
}

struct ErrorPair {
  double abs = 0.0;
  double rel = 0.0;
  void add(Complex numeric, Complex reference) {
    const double e = std::abs(numeric - reference);
    abs = std::max(abs, e);
    const double scale = std::abs(reference);
    rel = std::max(rel, scale > 0.0 ? e / scale : (e > 0.0 ? INFINITY : 0.0));
  }
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

NumericCheck make_row(const std::string& family, std::string identity, const std::string& params,
                      const ErrorPair& err, double tail, double tol, bool asserted = true) {
  NumericCheck row;
  row.family = family;
  row.identity = std::move(identity);
  row.params = params;
  row.max_abs_err = err.abs;
  row.max_rel_err = err.rel;
  row.tail_estimate = tail;
  row.pass = err.rel <= tol;
  row.asserted = asserted;
  return row;
}

// Candidates that match, and a finding row naming the survivor.
NumericCheck adjudicate(const std::string& family, const std::string& question, const std::string& params,
                        const std::vector<std::pair<std::string, ErrorPair>>& tries, double tail, double tol) {
  NumericCheck row;
  row.family = family;
  row.identity = "adjudication: " + question;
  row.params = params;
  row.tail_estimate = tail;
  std::size_t winners = 0;
  std::string detail;
  double best = INFINITY;
  for (const auto& [name, err] : tries) {
    const bool ok = err.rel <= tol;
    if (ok) {
      ++winners;
      row.max_abs_err = err.abs;
      row.max_rel_err = err.rel;
    }
    best = std::min(best, err.rel);
    if (!detail.empty()) detail += "; ";
    detail += (ok ? "holds: " : "rejected: ") + name + " (rel err " + fmt(err.rel) + ")";
  }
  if (winners == 0) row.max_rel_err = best;
  row.pass = winners == 1;
  row.detail = detail;
  return row;
}

}  // namespace

FockMatrix::FockMatrix(std::size_t dim, std::string label)
    : dim_(dim), label_(std::move(label)), data_(dim * dim, Complex{}) {}

FockMatrix FockMatrix::identity(std::size_t dim) {
  FockMatrix m(dim, "1");
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

FockMatrix annihilation(std::size_t dim) {
  FockMatrix m(dim, "a");
  for (std::size_t n = 1; n < dim; ++n) m(n - 1, n) = std::sqrt(static_cast<double>(n));
  return m;
}

FockMatrix creation(std::size_t dim) {
  FockMatrix m(dim, "a^dagger");
  for (std::size_t n = 1; n < dim; ++n) m(n, n - 1) = std::sqrt(static_cast<double>(n));
  return m;
}

FockMatrix multiply(const FockMatrix& a, const FockMatrix& b, ExecPolicy policy) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::kIndexOutOfRange, "dimension mismatch");
  FockMatrix c(a.dim(), "(" + a.label() + ")(" + b.label() + ")");
  if (policy == ExecPolicy::kSerial) {
    kernels::serial::matmul(a.data(), b.data(), c.data(), a.dim());
  } else {
    kernels::omp::matmul(a.data(), b.data(), c.data(), a.dim());
  }
  return c;
}

FockMatrix operator+(const FockMatrix& a, const FockMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::kIndexOutOfRange, "dimension mismatch");
  FockMatrix c(a.dim(), a.label() + " + " + b.label());
  for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] = a.data()[i] + b.data()[i];
  return c;
}

FockMatrix operator-(const FockMatrix& a, const FockMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::kIndexOutOfRange, "dimension mismatch");
  FockMatrix c(a.dim(), a.label() + " - " + b.label());
  for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] = a.data()[i] - b.data()[i];
  return c;
}

FockVector apply(const FockMatrix& m, const FockVector& v, ExecPolicy policy) {
  if (v.size() != m.dim()) throw Error(ErrorCode::kIndexOutOfRange, "dimension mismatch");
  FockVector out(m.dim());
  if (policy == ExecPolicy::kSerial) {
    kernels::serial::matvec(m.data(), v, out, m.dim());
  } else {
    kernels::omp::matvec(m.data(), v, out, m.dim());
  }
  return out;
}

FockMatrix image(const WeylElement& u, std::size_t dim) {
  FockMatrix out(dim, "weyl image");
  for (const auto& [key, c] : u.terms()) {
    const auto [i, j] = key;
    const double cd = c.get_d();
    // a^dagger^i a^j |m> = sqrt(m!/(m-j)!) sqrt((m-j+i)!/(m-j)!) |m-j+i>
    for (std::size_t m = j; m < dim; ++m) {
      const std::size_t base = m - j;
      const std::size_t row = base + i;
      if (row >= dim) break;
      out(row, m) += cd * sqrt_factorial_ratio(m, base) * sqrt_factorial_ratio(row, base);
    }
  }
  return out;
}

FockMatrix series_in_a(const ComplexSeries& s, std::size_t dim) {
  FockMatrix out(dim, "series(a)");
  const std::size_t kmax = std::min(s.order(), dim - 1);
  for (std::size_t k = 0; k <= kmax; ++k) {
    if (s[k] == Complex{}) continue;
    for (std::size_t m = 0; m + k < dim; ++m) out(m, m + k) = s[k] * sqrt_factorial_ratio(m + k, m);
  }
  return out;
}

FockMatrix raising_matrix(const ShefferPair& pair, std::size_t dim) {
  if (pair.order() < dim) throw Error(ErrorCode::kOrderExceeded, "pair order below Fock cutoff");
  const WeylElement m = build_raising(pair, static_cast<unsigned>(dim - 1));
  const auto [k, hk] = raising_parts(m, dim - 1);
  return raising_from_parts(k, hk, dim, "M(a, a^dagger)");
}

FockMatrix shifted_raising_matrix(const ShefferPair& pair, Complex zp, std::size_t dim) {
  if (pair.order() < dim) throw Error(ErrorCode::kOrderExceeded, "pair order below Fock cutoff");
  const WeylElement m = build_raising(pair, static_cast<unsigned>(dim - 1));
  const auto [k, hk] = raising_parts(m, dim - 1);
  return raising_from_parts(taylor_shift(k, zp), taylor_shift(hk, zp), dim, "M(a + z', a^dagger)");
}

FockMatrix exp_creation(Complex c, std::size_t dim) {
  FockMatrix out(dim, "exp(c a^dagger)");
  for (std::size_t m = 0; m < dim; ++m) {
    Complex p = 1.0;
    for (std::size_t n = m; n < dim; ++n) {
      // c^{n-m}/(n-m)! sqrt(n!/m!)
      out(n, m) = p * sqrt_factorial_ratio(n, m);
      p *= c / static_cast<double>(n - m + 1);
    }
  }
  return out;
}

FockVector number_state(std::size_t n, std::size_t dim) {
  if (n >= dim) throw Error(ErrorCode::kIndexOutOfRange, "number state beyond cutoff");
  FockVector v(dim);
  v[n] = 1.0;
  return v;
}

FockVector coherent_state(Complex z, std::size_t dim) {
  FockVector v = bare_coherent(z, dim);
  const double norm = std::exp(-0.5 * std::norm(z));
  for (Complex& c : v) c *= norm;
  return v;
}

Complex inner(const FockVector& u, const FockVector& v) {
  if (u.size() != v.size()) throw Error(ErrorCode::kIndexOutOfRange, "dimension mismatch");
  Complex s{};
  for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

double coherent_tail(Complex z, std::size_t dim) {
  const double r = std::abs(z);
  if (r == 0.0) return 0.0;
  const double d = static_cast<double>(dim);
  return std::exp(-0.5 * r * r + d * std::log(r) - 0.5 * std::lgamma(d + 1.0));
}

ExpmResult expm_apply(const FockMatrix& m, Complex t, const FockVector& v, ExecPolicy policy) {
  constexpr std::size_t kMaxTerms = 80;
  constexpr double kGrowth = 1e6;
  constexpr double kStop = 1e-18;
  const double v_norm = vec_norm(v, policy);
  if (v_norm == 0.0 || t == Complex{}) return {v, 0.0, 1, 0};

  for (std::size_t substeps = 1; substeps <= (1u << 16); substeps *= 2) {
    const Complex h = t / static_cast<double>(substeps);
    FockVector x = v;
    ExpmResult out;
    out.substeps = substeps;
    bool ok = true;
    for (std::size_t s = 0; s < substeps && ok; ++s) {
      FockVector sum = x;
      FockVector term = x;
      const double base = vec_norm(x, policy);
      double last = base;
      bool converged = false;
      for (std::size_t k = 1; k <= kMaxTerms; ++k) {
        term = apply(m, term, policy);
        for (Complex& c : term) c *= h / static_cast<double>(k);
        vec_axpy(1.0, term, sum, policy);
        ++out.terms;
        last = vec_norm(term, policy);
        if (last > kGrowth * base) break;
        if (last <= kStop * vec_norm(sum, policy)) {
          converged = true;
          break;
        }
      }
      if (!converged) {
        ok = false;
        break;
      }
      const double sum_norm = vec_norm(sum, policy);
      out.tail_estimate += sum_norm > 0.0 ? last / sum_norm : 0.0;
      x = std::move(sum);
    }
    if (ok) {
      out.value = std::move(x);
      return out;
    }
  }
  throw Error(ErrorCode::kCutoffTooSmall, "Taylor series for exp(tM) failed to converge");
}

std::string format_params(const CoherentParams& p) {
  std::ostringstream os;
  os.precision(6);
  os << "z=" << p.z.real() << (p.z.imag() < 0 ? "" : "+") << p.z.imag() << "i"
     << " z'=" << p.zp.real() << (p.zp.imag() < 0 ? "" : "+") << p.zp.imag() << "i"
     << " lambda=" << p.lambda.real() << (p.lambda.imag() < 0 ? "" : "+") << p.lambda.imag() << "i";
  return os.str();
}

std::vector<CoherentParams> draw_params(const FamilyEntry& entry, std::size_t count, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto disc = [&](double radius) {
    const double r = radius * std::sqrt(unit(rng));
    return std::polar(r, 2.0 * std::numbers::pi * unit(rng));
  };
  const double zp_radius = std::min(1.0, entry.shift_guard);
  const double lambda_radius = std::min(0.1, 0.5 * entry.guard_radius);
  std::vector<CoherentParams> out;
  for (std::size_t i = 0; i < count; ++i) {
    const Complex z = disc(1.0);
    const Complex zp = disc(zp_radius);
    out.push_back({z, zp, disc(lambda_radius)});
  }
  return out;
}

FamilyEntry fock_family(std::string_view label, std::size_t cutoff) { return family(label, cutoff + 2); }

NumericCheck shift_identity_check(const FamilyEntry& entry, Complex zp, const FockOptions& options,
                                  std::size_t block) {
  const std::size_t d = options.cutoff;
  if (d < 32) throw Error(ErrorCode::kCutoffTooSmall, "Fock cutoff below 32");
  if (std::abs(zp) > std::min(1.0, entry.shift_guard)) throw Error(ErrorCode::kGuardExceeded, "|z'| exceeds guard");
  const FockMatrix m = raising_matrix(entry.pair, d);
  const FockMatrix lhs = multiply(multiply(exp_creation(-zp, d), m, options.policy), exp_creation(zp, d),
                                  options.policy);
  const FockMatrix rhs = shifted_raising_matrix(entry.pair, zp, d);
  double abs_err = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < block; ++i) {
    for (std::size_t j = 0; j < block; ++j) {
      abs_err = std::max(abs_err, std::abs(lhs(i, j) - rhs(i, j)));
      scale = std::max(scale, std::abs(rhs(i, j)));
    }
  }
  NumericCheck row;
  row.family = entry.label;
  row.identity = "exp(-z' a^dagger) M exp(z' a^dagger) = M(a + z', a^dagger)";
  std::ostringstream os;
  os.precision(6);
  os << "z'=" << zp.real() << (zp.imag() < 0 ? "" : "+") << zp.imag() << "i block=" << block;
  row.params = os.str();
  row.max_abs_err = abs_err;
  row.max_rel_err = scale > 0.0 ? abs_err / scale : abs_err;
  row.tail_estimate = coherent_tail(zp, d);
  row.pass = row.max_rel_err <= options.tolerance;
  return row;
}

std::vector<NumericCheck> fock_verify(const FamilyEntry& entry, const CoherentParams& params,
                                      const FockOptions& options) {
  const std::size_t d = options.cutoff;
  const double tol = options.tolerance;
  if (d < 32) throw Error(ErrorCode::kCutoffTooSmall, "Fock cutoff below 32");
  if (std::abs(params.z) > 1.0) throw Error(ErrorCode::kGuardExceeded, "|z| exceeds 1");
  if (std::abs(params.zp) > std::min(1.0, entry.shift_guard)) throw Error(ErrorCode::kGuardExceeded, "|z'| exceeds guard");
  if (std::abs(params.lambda) >= entry.guard_radius) throw Error(ErrorCode::kGuardExceeded, "|lambda| exceeds guard");
  if (options.max_power + options.max_level + 2 >= d) {
    throw Error(ErrorCode::kCutoffTooSmall, "cutoff too small for requested powers");
  }

  const std::string& fam = entry.label;
  const std::string ps = format_params(params);
  const Complex z = params.z;
  const Complex zc = std::conj(z);
  const Complex zp = params.zp;
  const Complex t = params.lambda;
  const ExecPolicy pol = options.policy;
  const double guard = entry.guard_radius;

  const FockMatrix m = raising_matrix(entry.pair, d);
  const FockVector bra = bare_coherent(z, d);
  const double bra_tail = coherent_tail(z, d) * std::exp(0.5 * std::norm(z));

  std::vector<NumericCheck> rows;
  const ShefferSequence seq = sequence_via_egf(entry.pair, options.max_power + options.max_level);

  // <z|M^n|l> / <z|0>
  std::vector<std::vector<Complex>> mono(options.max_level + 1);
  for (std::size_t l = 0; l <= options.max_level; ++l) {
    FockVector v = number_state(l, d);
    for (std::size_t n = 0; n <= options.max_power; ++n) {
      mono[l].push_back(inner(bra, v));
      v = apply(m, v, pol);
    }
  }
  for (std::size_t l = 0; l <= options.max_level; ++l) {
    ErrorPair shifted;
    ErrorPair exact;
    for (std::size_t n = 0; n <= options.max_power; ++n) {
      shifted.add(mono[l][n], mono_element(seq, n, l, zc));
      exact.add(mono[l][n], mono_element_exact(entry.pair, n, l, zc));
    }
    const std::string ln = std::to_string(l);
    if (l == 0) {
      rows.push_back(make_row(fam, "<z|M^n|0> = s_n(z*) <z|0>", ps, shifted, bra_tail, tol));
    } else {
      NumericCheck q = make_row(fam, "<z|M^n|" + ln + "> = s_{n+" + ln + "}(z*)/sqrt(" + ln + "!) <z|0>", ps, shifted,
                                bra_tail, tol, false);
      q.detail = "shifted-index form, kept as a finding";
      rows.push_back(q);
      rows.push_back(make_row(fam, "<z|M^n|" + ln + "> = (M^n x^" + ln + ")(z*)/sqrt(" + ln + "!) <z|0>", ps, exact,
                              bra_tail, tol));
    }
  }

  // Closed forms for <z|M^n|0> listed per family.
  const auto vac = vacuum_candidates(fam);
  {
    std::vector<std::pair<std::string, ErrorPair>> tries;
    for (const auto& cand : vac) {
      ErrorPair err;
      for (std::size_t n = 0; n <= options.max_power; ++n) err.add(mono[0][n], cand.poly(n).evaluate(zc));
      tries.emplace_back(cand.name, err);
    }
    if (tries.size() == 1) {
      rows.push_back(make_row(fam, "<z|M^n|0> = " + tries[0].first + " <z|0>", ps, tries[0].second, bra_tail, tol));
    } else {
      for (const auto& [name, err] : tries) {
        rows.push_back(make_row(fam, "<z|M^n|0> = " + name + " <z|0>", ps, err, bra_tail, tol, false));
      }
      rows.push_back(adjudicate(fam, "<z|M^n|0>", ps, tries, bra_tail, tol));
    }
  }

  // <z|exp(tM)|l> / <z|0>
  for (std::size_t l = 0; l <= options.max_level; ++l) {
    const ExpmResult ev = expm_apply(m, t, number_state(l, d), pol);
    const Complex num = inner(bra, ev.value);
    const std::string ln = std::to_string(l);
    if (l == 0) {
      const EvalResult ref = exp_element_vac(entry.pair, t, zc, guard, std::min<std::size_t>(d - 2, 32));
      ErrorPair err;
      err.add(num, ref.value);
      rows.push_back(make_row(fam, "<z|exp(tM)|0> = exp(z* f^-1(t)) / g(f^-1(t)) <z|0>", ps, err,
                              ev.tail_estimate + bra_tail + ref.tail_estimate, tol));
      continue;
    }
    const EvalResult guess = exp_element_state(entry.pair, t, zc, l, guard, std::min<std::size_t>(d - 2 - l, 32));
    const EvalResult exact = exp_element_state_exact(entry.pair, t, zc, l, guard, std::min<std::size_t>(d - 2 - l, 32));
    ErrorPair eq;
    ErrorPair ee;
    eq.add(num, guess.value);
    ee.add(num, exact.value);
    NumericCheck q = make_row(fam, "<z|exp(tM)|" + ln + "> = d^" + ln + "/dt^" + ln + " [exp(z* f^-1(t)) / g(f^-1(t))] / sqrt(" + ln + "!) <z|0>",
                              ps, eq, ev.tail_estimate + bra_tail + guess.tail_estimate, tol, false);
    q.detail = "shifted-index form, kept as a finding";
    rows.push_back(q);
    rows.push_back(make_row(fam, "<z|exp(tM)|" + ln + "> = sum_n t^n/n! (M^n x^" + ln + ")(z*) / sqrt(" + ln + "!) <z|0>",
                            ps, ee, ev.tail_estimate + bra_tail + exact.tail_estimate, tol));
  }

  // <z|exp(tM)|z'>
  const ExpmResult ez = expm_apply(m, t, coherent_state(zp, d), pol);
  const FockVector ket_bra = coherent_state(z, d);
  const Complex num = inner(ket_bra, ez.value);
  const Complex w = entry.numeric.f_inverse(t + entry.numeric.f(zp));
  const double tail = ez.tail_estimate + coherent_tail(z, d) + coherent_tail(zp, d) + coherent_tail(w, d);
  if (tail > tol) throw Error(ErrorCode::kCutoffTooSmall, "truncation tail " + fmt(tail) + " above tolerance");

  {
    ErrorPair err;
    err.add(num, exp_element_coherent(entry.numeric, t, z, zp));
    rows.push_back(make_row(fam, "<z|exp(tM)|z'> = g(z')/g(f^-1(t + f(z'))) exp(z*[f^-1(t + f(z')) - z']) <z|z'>",
                            ps, err, tail, tol));
  }
  {
    const EvalResult ref = exp_element_coherent_series(entry.pair, t, z, zp, guard);
    ErrorPair err;
    err.add(num, ref.value);
    rows.push_back(make_row(fam, "<z|exp(tM)|z'> via shifted pair f(x+z')-f(z'), g(x+z')/g(z')", ps, err,
                            tail + ref.tail_estimate, tol));
  }
  {
    const Complex ov = coherent_overlap(z, zp);
    std::vector<std::pair<std::string, ErrorPair>> tries;
    for (const auto& cand : coherent_candidates(fam)) {
      ErrorPair err;
      err.add(num, cand.value(t, zc, zp) * ov);
      tries.emplace_back(cand.name, err);
    }
    if (tries.size() == 1) {
      rows.push_back(make_row(fam, "<z|exp(tM)|z'> = " + tries[0].first + " <z|z'>", ps, tries[0].second, tail, tol));
    } else {
      for (const auto& [name, err] : tries) {
        rows.push_back(make_row(fam, "<z|exp(tM)|z'> = " + name + " <z|z'>", ps, err, tail, tol, false));
      }
      rows.push_back(adjudicate(fam, "<z|exp(tM)|z'>", ps, tries, tail, tol));
    }
  }
  {
    const ExpmResult e0 = expm_apply(m, 0.0, coherent_state(zp, d), pol);
    ErrorPair err;
    err.add(inner(ket_bra, e0.value), coherent_overlap(z, zp));
    NumericCheck row = make_row(fam, "<z|exp(0 M)|z'> = <z|z'>", ps, err, coherent_tail(z, d) + coherent_tail(zp, d),
                                1e-10);
    rows.push_back(row);
  }
  rows.push_back(shift_identity_check(entry, zp, options));
  return rows;
}

}  // namespace sheffer
