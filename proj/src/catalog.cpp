#include "sheffer/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sheffer/special.hpp"

namespace sheffer {

namespace {

constexpr double kEntire = std::numeric_limits<double>::infinity();

TruncatedSeries var(std::size_t order) { return TruncatedSeries::variable(order); }
TruncatedSeries one(std::size_t order) { return TruncatedSeries::constant(Rational(1), order); }

Rational q(long p, long d) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

enum class Id { kHermite, kLaguerre, kBessel, kBell, kLowerFactorial, kHahn, kIdempotent };

Id lookup(std::string_view label) {
  static const std::pair<std::string_view, Id> table[] = {
      {"hermite", Id::kHermite}, {"laguerre", Id::kLaguerre},
      {"bessel", Id::kBessel},   {"bell", Id::kBell},
      {"lower_factorial", Id::kLowerFactorial},
      {"hahn", Id::kHahn},       {"idempotent", Id::kIdempotent},
  };
  for (const auto& [name, id] : table)
    if (name == label) return id;
  throw Error(ErrorCode::kUnknownFamily, "no family named '" + std::string(label) + "'");
}

double guard_of(Id id) {
  switch (id) {
    case Id::kHermite: return kEntire;
    case Id::kLaguerre: return 1.0;
    case Id::kBessel: return 0.5;
    case Id::kBell: return kEntire;
    case Id::kLowerFactorial: return 1.0;
    case Id::kHahn: return 1.0;
    case Id::kIdempotent: return kEntire;
  }
  return 0.0;
}

// Lambert W coefficients (-n)^{n-1}/n!, straight from the closed form.
TruncatedSeries lambert_closed_form(std::size_t order) {
  TruncatedSeries w(order);
  for (std::size_t n = 1; n <= order; ++n) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), n, n - 1);
    if ((n - 1) % 2 == 1) p = -p;
    w[n] = Rational(p) / factorial(static_cast<unsigned>(n));
  }
  return w;
}

Polynomial x_poly() { return Polynomial::monomial(1); }

}  // namespace

const std::vector<std::string>& family_labels() {
  static const std::vector<std::string> labels = {"hermite", "laguerre",        "bessel",    "bell",
                                                  "lower_factorial", "hahn", "idempotent"};
  return labels;
}

FamilyEntry family(std::string_view label, std::size_t order) {
  const Id id = lookup(label);
  order = std::max<std::size_t>(order, 2);
  const TruncatedSeries x = var(order);
  TruncatedSeries f(order), g = one(order);
  NumericPair num;
  double shift_guard = 1.0;
  std::string notes;

  switch (id) {
    case Id::kHermite:
      f = scale(x, q(1, 2));
      g = exp_series(scale(x * x, q(1, 4)));
      num = {[](Complex z) { return z / 2.0; }, [](Complex w) { return 2.0 * w; },
             [](Complex z) { return std::exp(z * z / 4.0); }};
      notes = "g(x) = exp(x^2/4) reproduces G = exp(2 t x - t^2).";
      break;
    case Id::kLaguerre:
      f = x * reciprocal(x - one(order));
      g = reciprocal(one(order) - x);
      num = {[](Complex z) { return z / (z - 1.0); }, [](Complex w) { return w / (w - 1.0); },
             [](Complex z) { return 1.0 / (1.0 - z); }};
      shift_guard = 0.3;
      notes =
          "s_n = n! L_n(x). The raising operator is -X D^2 + (2X - 1) D - X + 1; a "
          "constant term of -1 is a sign slip (M 1 must equal s_1 = 1 - x). Fock-space adjudication: "
          "<z|M^n|0> = n! L_n(z*) <z|0>, not n! L_{n-1}(z*). The coherent-state prefactor is "
          "1/(1 + t(z' - 1)); the variant 1/(1 - t(z' - 1)) fails the Fock check and disagrees with "
          "the generating function at z' = 0.";
      break;
    case Id::kBessel:
      f = x - scale(x * x, q(1, 2));
      num = {[](Complex z) { return z - z * z / 2.0; },
             [](Complex w) { return 1.0 - std::sqrt(1.0 - 2.0 * w); }, [](Complex) { return Complex{1.0}; }};
      shift_guard = 0.3;
      notes = "g = 1: the generating function exp(x(1 - sqrt(1 - 2t))) has no prefactor.";
      break;
    case Id::kBell:
      f = log_series(one(order) + x);
      num = {[](Complex z) { return std::log(1.0 + z); }, [](Complex w) { return std::exp(w) - 1.0; },
             [](Complex) { return Complex{1.0}; }};
      shift_guard = 0.6;
      notes = "Exponential (Touchard) polynomials; coefficients are Stirling numbers of the second kind.";
      break;
    case Id::kLowerFactorial:
      f = exp_series(x) - one(order);
      num = {[](Complex z) { return std::exp(z) - 1.0; }, [](Complex w) { return std::log(1.0 + w); },
             [](Complex) { return Complex{1.0}; }};
      notes = "s_n(x) = x(x-1)...(x-n+1).";
      break;
    case Id::kHahn:
      f = tan_series(x);
      g = reciprocal(cos_series(x));
      num = {[](Complex z) { return std::tan(z); }, [](Complex w) { return std::atan(w); },
             [](Complex z) { return 1.0 / std::cos(z); }};
      shift_guard = 0.45;
      notes =
          "g(x) = sec(x) reproduces the prefactor 1/sqrt(1 + t^2). Fock-space adjudication: the "
          "exponent of <z|exp(tM)|z'> is z*[arctan(t + tan z') - z']; the variant arctan(t tan z') "
          "does not match.";
      break;
    case Id::kIdempotent:
      f = comp_inverse(x * exp_series(x));
      num = {[](Complex z) { return lambert_w0(z); }, [](Complex w) { return w * std::exp(w); },
             [](Complex) { return Complex{1.0}; }};
      shift_guard = 0.1;
      notes = "f is the Lambert W series (radius 1/e), obtained as the compositional inverse of x e^x.";
      break;
  }
  return {std::string(label), ShefferPair::make(f, g, std::string(label)), guard_of(id), shift_guard,
          std::move(num), std::move(notes)};
}

std::vector<Polynomial> oracle_polys(std::string_view label, std::size_t n) {
  const Id id = lookup(label);
  std::vector<Polynomial> out;
  out.reserve(n + 1);
  const Polynomial X = x_poly();
  switch (id) {
    case Id::kHermite: {
      out.push_back(Polynomial::constant(Rational(1)));
      if (n >= 1) out.push_back(scale(X, Rational(2)));
      for (std::size_t k = 1; k + 1 <= n; ++k) {
        out.push_back(scale(X * out[k], Rational(2)) - scale(out[k - 1], Rational(2 * static_cast<long>(k))));
      }
      break;
    }
    case Id::kLaguerre: {
      std::vector<Polynomial> lag{Polynomial::constant(Rational(1))};
      if (n >= 1) lag.push_back(Polynomial({Rational(1), Rational(-1)}));
      for (std::size_t k = 1; k + 1 <= n; ++k) {
        const auto kk = static_cast<long>(k);
        Polynomial next = Polynomial({Rational(2 * kk + 1), Rational(-1)}) * lag[k] - scale(lag[k - 1], Rational(kk));
        lag.push_back(scale(next, q(1, kk + 1)));
      }
      for (std::size_t k = 0; k <= n; ++k) out.push_back(scale(lag[k], factorial(static_cast<unsigned>(k))));
      break;
    }
    case Id::kBessel: {
      // [x^k] s_m = (2m-k-1)! / ((k-1)! (m-k)! 2^{m-k}),  1 <= k <= m.
      out.push_back(Polynomial::constant(Rational(1)));
      for (std::size_t m = 1; m <= n; ++m) {
        std::vector<Rational> c(m + 1, Rational(0));
        for (std::size_t k = 1; k <= m; ++k) {
          mpz_class two_pow;
          mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, m - k);
          c[k] = factorial(static_cast<unsigned>(2 * m - k - 1)) /
                 (factorial(static_cast<unsigned>(k - 1)) * factorial(static_cast<unsigned>(m - k)) *
                  Rational(two_pow));
        }
        out.emplace_back(std::move(c));
      }
      break;
    }
    case Id::kBell: {
      std::vector<std::vector<Rational>> s{{Rational(1)}};
      for (std::size_t m = 0; m < n; ++m) {
        std::vector<Rational> next(m + 2, Rational(0));
        for (std::size_t k = 1; k <= m + 1; ++k) {
          const Rational left = k <= m ? s[m][k] : Rational(0);
          next[k] = Rational(static_cast<unsigned long>(k)) * left + s[m][k - 1];
        }
        s.push_back(std::move(next));
      }
      for (auto& row : s) out.emplace_back(std::move(row));
      break;
    }
    case Id::kLowerFactorial: {
      out.push_back(Polynomial::constant(Rational(1)));
      for (std::size_t k = 0; k < n; ++k) {
        out.push_back(out.back() * Polynomial({Rational(-static_cast<long>(k)), Rational(1)}));
      }
      break;
    }
    case Id::kHahn: {
      // G = (1 + t^2)^{-1/2} exp(x arctan t), expanded with explicit series.
      std::vector<Rational> atan_c(n + 1, Rational(0)), pref(n + 1, Rational(0));
      for (std::size_t j = 0; 2 * j + 1 <= n; ++j)
        atan_c[2 * j + 1] = q(j % 2 == 0 ? 1 : -1, static_cast<long>(2 * j + 1));
      for (std::size_t j = 0; 2 * j <= n; ++j) {
        mpz_class four_pow;
        mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, j);
        const auto ju = static_cast<unsigned>(j);
        Rational c = factorial(2 * ju) / (Rational(four_pow) * factorial(ju) * factorial(ju));
        pref[2 * j] = j % 2 == 0 ? c : Rational(-c);
      }
      auto mul = [n](const std::vector<Rational>& a, const std::vector<Rational>& b) {
        std::vector<Rational> r(n + 1, Rational(0));
        for (std::size_t i = 0; i <= n; ++i)
          for (std::size_t j = 0; i + j <= n; ++j) r[i + j] += a[i] * b[j];
        return r;
      };
      std::vector<std::vector<Rational>> rows(n + 1);
      for (std::size_t m = 0; m <= n; ++m) rows[m].assign(m + 1, Rational(0));
      std::vector<Rational> term = pref;
      for (std::size_t k = 0; k <= n; ++k) {
        for (std::size_t m = k; m <= n; ++m)
          rows[m][k] = factorial(static_cast<unsigned>(m)) / factorial(static_cast<unsigned>(k)) * term[m];
        term = mul(term, atan_c);
      }
      for (auto& r : rows) out.emplace_back(std::move(r));
      break;
    }
    case Id::kIdempotent: {
      for (std::size_t m = 0; m <= n; ++m) {
        std::vector<Rational> c(m + 1, Rational(0));
        for (std::size_t k = 0; k <= m; ++k) {
          mpz_class p(1);
          if (m - k > 0) mpz_ui_pow_ui(p.get_mpz_t(), k, m - k);
          c[k] = binomial(static_cast<unsigned>(m), static_cast<unsigned>(k)) * Rational(p);
        }
        out.emplace_back(std::move(c));
      }
      break;
    }
  }
  return out;
}

Complex egf_eval(std::string_view label, Complex t, Complex x) {
  const Id id = lookup(label);
  const double guard = guard_of(id);
  if (!(std::abs(t) < guard)) {
    throw Error(ErrorCode::kGuardExceeded, "|lambda| = " + std::to_string(std::abs(t)) + " reaches guard " +
                                               std::to_string(guard) + " for " + std::string(label));
  }
  switch (id) {
    case Id::kHermite: return std::exp(2.0 * t * x - t * t);
    case Id::kLaguerre: return std::exp(x * t / (t - 1.0)) / (1.0 - t);
    case Id::kBessel: return std::exp(x * (1.0 - std::sqrt(1.0 - 2.0 * t)));
    case Id::kBell: return std::exp(x * (std::exp(t) - 1.0));
    case Id::kLowerFactorial: return std::exp(x * std::log(1.0 + t));
    case Id::kHahn: return std::exp(x * std::atan(t)) / std::sqrt(1.0 + t * t);
    case Id::kIdempotent: return std::exp(x * t * std::exp(t));
  }
  return {};
}

OperatorForms reference_operators(std::string_view label, unsigned d_order) {
  const Id id = lookup(label);
  const std::size_t order = std::max(d_order, 2U);
  const WeylElement X = WeylElement::x();
  const WeylElement D = WeylElement::d();
  const WeylElement I = WeylElement::constant(Rational(1));
  auto in_d = [](const TruncatedSeries& s) { return from_series(s, Variable::kD); };
  OperatorForms out;
  switch (id) {
    case Id::kHermite:
      out.raising = scale(X, Rational(2)) - D;
      out.lowering = scale(D, q(1, 2));
      break;
    case Id::kLaguerre: {
      // Variant with the sign slip: -X D^2 + (2X - 1) D - X - 1.
      out.raising = scale(X * D * D, Rational(-1)) + (scale(X, Rational(2)) - I) * D - X - I;
      for (unsigned k = 1; k <= d_order; ++k) out.lowering.add_term(0, k, Rational(-1));
      break;
    }
    case Id::kBessel:
      for (unsigned k = 0; k <= d_order; ++k) out.raising.add_term(1, k, Rational(1));
      out.lowering = D - scale(D * D, q(1, 2));
      break;
    case Id::kBell:
      out.raising = X * (I + D);
      for (unsigned k = 1; k <= d_order; ++k) out.lowering.add_term(0, k, q(k % 2 == 1 ? 1 : -1, k));
      break;
    case Id::kLowerFactorial:
      for (unsigned k = 0; k <= d_order; ++k) {
        Rational c = 1 / factorial(k);
        out.raising.add_term(1, k, k % 2 == 0 ? c : Rational(-c));
        if (k >= 1) out.lowering.add_term(0, k, c);
      }
      break;
    case Id::kHahn: {
      const TruncatedSeries x = var(order);
      const TruncatedSeries c = cos_series(x);
      const TruncatedSeries cos2 = (c * c).truncated(d_order);
      const TruncatedSeries tan = tan_series(x).truncated(d_order);
      out.raising = (X - in_d(tan)) * in_d(cos2);
      out.raising = out.raising.truncated_d(d_order);
      out.lowering = in_d(tan);
      break;
    }
    case Id::kIdempotent: {
      const TruncatedSeries w = lambert_closed_form(order + 1);
      std::vector<Rational> w_over_x(w.coeffs().begin() + 1, w.coeffs().end());
      const TruncatedSeries d_over_w = reciprocal(TruncatedSeries(std::move(w_over_x), d_order));
      // X (1 + W(D))/W(D) D = X (D + D/W(D))
      out.raising = X * (D + in_d(d_over_w));
      out.raising = out.raising.truncated_d(d_order);
      out.lowering = in_d(w.truncated(d_order));
      break;
    }
  }
  return out;
}

FamilySpec family_spec(std::string_view label) {
  switch (lookup(label)) {
    case Id::kHermite:
      return {"x/2", "exp(x^2/4)"};
    case Id::kLaguerre:
      return {"x/(x - 1)", "1/(1 - x)"};
    case Id::kBessel:
      return {"x - x^2/2", "1"};
    case Id::kBell:
      return {"log(1 + x)", "1"};
    case Id::kLowerFactorial:
      return {"exp(x) - 1", "1"};
    case Id::kHahn:
      return {"tan(x)", "1/cos(x)"};
    case Id::kIdempotent:
      return {"inv(x*exp(x))", "1"};
  }
  return {};
}

std::vector<CoherentCandidate> coherent_candidates(std::string_view label) {
  const Id id = lookup(label);
  switch (id) {
    case Id::kHermite:
      return {{"exp(t(2z* - z') - t^2)",
               [](Complex t, Complex zc, Complex zp) { return std::exp(t * (2.0 * zc - zp) - t * t); }}};
    case Id::kLaguerre: {
      auto expo = [](Complex t, Complex zc, Complex zp) {
        return std::exp(zc * t * (1.0 - zp) * (1.0 - zp) / (t * (1.0 - zp) - 1.0));
      };
      return {{"1/(1 - t(z'-1)) exp(z* t (1-z')^2 / (t(1-z') - 1))",
               [expo](Complex t, Complex zc, Complex zp) { return expo(t, zc, zp) / (1.0 - t * (zp - 1.0)); }},
              {"1/(1 + t(z'-1)) exp(z* t (1-z')^2 / (t(1-z') - 1))",
               [expo](Complex t, Complex zc, Complex zp) { return expo(t, zc, zp) / (1.0 + t * (zp - 1.0)); }}};
    }
    case Id::kBessel:
      return {{"exp(z*[1 - sqrt(1 - 2(t + z' - z'^2/2)) - z'])", [](Complex t, Complex zc, Complex zp) {
                 return std::exp(zc * (1.0 - std::sqrt(1.0 - 2.0 * (t + zp - zp * zp / 2.0)) - zp));
               }}};
    case Id::kBell:
      return {{"exp(z*(z'+1)(e^t - 1))", [](Complex t, Complex zc, Complex zp) {
                 return std::exp(zc * (zp + 1.0) * (std::exp(t) - 1.0));
               }}};
    case Id::kLowerFactorial:
      return {{"exp(z*[ln(e^z' + t) - z'])", [](Complex t, Complex zc, Complex zp) {
                 return std::exp(zc * (std::log(std::exp(zp) + t) - zp));
               }}};
    case Id::kHahn: {
      auto pref = [](Complex t, Complex zp) { return std::cos(std::atan(t + std::tan(zp))) / std::cos(zp); };
      return {{"cos(arctan(t + tan z'))/cos z' exp(z*[arctan(t tan z') - z'])",
               [pref](Complex t, Complex zc, Complex zp) {
                 return pref(t, zp) * std::exp(zc * (std::atan(t * std::tan(zp)) - zp));
               }},
              {"cos(arctan(t + tan z'))/cos z' exp(z*[arctan(t + tan z') - z'])",
               [pref](Complex t, Complex zc, Complex zp) {
                 return pref(t, zp) * std::exp(zc * (std::atan(t + std::tan(zp)) - zp));
               }}};
    }
    case Id::kIdempotent:
      return {{"exp(z*[t e^{t + W(z')} + z'(e^t - 1)])", [](Complex t, Complex zc, Complex zp) {
                 return std::exp(zc * (t * std::exp(t + lambert_w0(zp)) + zp * (std::exp(t) - 1.0)));
               }}};
  }
  return {};
}

std::vector<VacuumCandidate> vacuum_candidates(std::string_view label) {
  const Id id = lookup(label);
  const std::string name(label);
  if (id == Id::kLaguerre) {
    return {{"n! L_{n-1}(z*)",
             [](std::size_t n) {
               if (n == 0) return Polynomial{};
               const auto lag = oracle_polys("laguerre", n - 1);
               // oracle holds (n-1)! L_{n-1}; rescale to n! L_{n-1}.
               return scale(lag[n - 1], Rational(static_cast<unsigned long>(n)));
             }},
            {"n! L_n(z*)", [](std::size_t n) { return oracle_polys("laguerre", n)[n]; }}};
  }
  return {{"oracle s_n(z*)", [name](std::size_t n) { return oracle_polys(name, n)[n]; }}};
}

}  // namespace sheffer
