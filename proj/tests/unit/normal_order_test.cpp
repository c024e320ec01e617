#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "sheffer/catalog.hpp"
#include "sheffer/normal_order.hpp"

namespace sheffer {
namespace {

const std::size_t kLambda = 6;
const unsigned kA = 8;

using testing::bell_normal_form;
using testing::exp_trunc;
using testing::hermite_normal_form;
using testing::mul_trunc;

TEST(NormalOrder, HermiteClosedForm) {
  const FamilyEntry e = family("hermite", kLambda + kA + 2);
  const NormallyOrderedSeries closed = hermite_normal_form(kLambda, kA);
  EXPECT_EQ(normal_order_rhs(e.pair, kLambda, kA), closed);
  EXPECT_EQ(normal_order_lhs(e.pair, kLambda, kA), closed);
}

TEST(NormalOrder, HermiteConjugateTermMap) {
  // :exp(2t a^dagger) exp(-t^2 - t a): -> :exp(-t a^dagger) exp(-t^2) exp(2t a):
  const FamilyEntry e = family("hermite", kLambda + kA + 2);
  const NormallyOrderedSeries conj = conjugate_normal_form(normal_order_rhs(e.pair, kLambda, kA));
  const Polynomial gauss = exp_trunc(Polynomial::monomial(2, -1), kLambda);
  for (unsigned i = 0; i <= kA; ++i) {
    for (unsigned j = 0; j <= kLambda; ++j) {
      const Polynomial c = mul_trunc(
          mul_trunc(Polynomial::monomial(i, Rational(i % 2 ? -1 : 1) / factorial(i)),
                    Polynomial::monomial(j, Rational(mpz_class(1) << j) / factorial(j)), kLambda),
          gauss, kLambda);
      EXPECT_EQ(conj.coeff(i, j), c) << i << "," << j;
    }
  }
}

TEST(NormalOrder, BellClosedForm) {
  const FamilyEntry e = family("bell", kLambda + kA + 2);
  const NormallyOrderedSeries closed = bell_normal_form(kLambda, kA);
  EXPECT_EQ(normal_order_rhs(e.pair, kLambda, kA), closed);
  EXPECT_EQ(normal_order_lhs(e.pair, kLambda, kA), closed);
}

TEST(NormalOrder, BellLowOrderTerms) {
  const FamilyEntry e = family("bell", 12);
  const NormallyOrderedSeries lhs = normal_order_lhs(e.pair, 2, 4);
  // t: a^dagger a + a^dagger
  EXPECT_EQ(lhs.coeff(1, 1)[1], 1);
  EXPECT_EQ(lhs.coeff(1, 0)[1], 1);
  // t^2: (a^dagger^2 a^2 + 2 a^dagger^2 a + a^dagger a + a^dagger^2) / 2
  EXPECT_EQ(lhs.coeff(2, 2)[2], Rational(1, 2));
  EXPECT_EQ(lhs.coeff(2, 1)[2], 1);
  EXPECT_EQ(lhs.coeff(1, 1)[2], Rational(1, 2));
  EXPECT_EQ(lhs.coeff(2, 0)[2], Rational(1, 2));
  EXPECT_EQ(lhs.coeff(1, 0)[2], Rational(1, 2));
}

TEST(NormalOrder, WeylSquareOfHermiteRaising) {
  // (2X - D)^2 / 2 = 2X^2 - 2XD + D^2/2 - 1
  const WeylElement m = scale(WeylElement::x(), 2) - WeylElement::d();
  const OperatorSeries s = op_exp(m, 2);
  WeylElement expected = WeylElement::monomial(2, 0, 2) + WeylElement::monomial(1, 1, -2) +
                         WeylElement::monomial(0, 2, Rational(1, 2)) + WeylElement::constant(-1);
  EXPECT_EQ(s.coeffs[2], expected);
}

class NormalOrderFamily : public ::testing::TestWithParam<std::string> {};

TEST_P(NormalOrderFamily, BruteForceEqualsComposedSeries) {
  const FamilyEntry e = family(GetParam(), kLambda + kA + 2);
  const auto rows = verify_normal_order(e.pair, kLambda, kA);
  ASSERT_EQ(rows.size(), kLambda + 1);
  for (const auto& r : rows) EXPECT_TRUE(r.pass) << r.n << " " << r.detail;
}

TEST_P(NormalOrderFamily, OrderZeroIsIdentity) {
  const FamilyEntry e = family(GetParam(), 12);
  NormallyOrderedSeries one(0, 4);
  one.add(0, 0, 0, 1);
  EXPECT_EQ(normal_order_rhs(e.pair, 0, 4), one);
  EXPECT_EQ(normal_order_lhs(e.pair, 0, 4), one);
}

TEST_P(NormalOrderFamily, CorruptedGFailsFirstAtOrderOne) {
  const FamilyEntry e = family(GetParam(), kLambda + kA + 2);
  TruncatedSeries g = e.pair.g();
  g[2] += Rational(1, 3);
  const ShefferPair bad = ShefferPair::make(e.pair.f(), g, e.label);
  const auto rows = verify_normal_order(e.pair, bad, kLambda, kA);
  EXPECT_TRUE(rows[0].pass);
  EXPECT_FALSE(rows[1].pass);
  EXPECT_NE(rows[1].detail.find("first mismatch"), std::string::npos);
}

TEST_P(NormalOrderFamily, ConjugateIsAnInvolution) {
  const FamilyEntry e = family(GetParam(), 14);
  const NormallyOrderedSeries s = normal_order_rhs(e.pair, 4, 6);
  const NormallyOrderedSeries c = conjugate_normal_form(s);
  EXPECT_EQ(conjugate_normal_form(c), s);
  for (const auto& [key, poly] : s.terms()) {
    if (key.second <= c.a_order()) {
      EXPECT_EQ(c.coeff(key.second, key.first), poly);
    }
  }
}

TEST_P(NormalOrderFamily, MatrixElementChainIsConsistent) {
  const std::size_t n = 8;
  const FamilyEntry e = family(GetParam(), n + 6);
  const ShefferSequence seq = sequence_via_egf(e.pair, n + 2);
  const Complex zc(0.3, -0.4);
  const double guard = std::min(1.0, e.guard_radius);
  const Complex t = 0.05 * std::min(1.0, guard);
  // Summing mono elements against t^n/n! reproduces the vacuum element.
  Complex sum = 0.0;
  for (std::size_t k = 0; k <= n; ++k) {
    EXPECT_LT(std::abs(mono_element(seq, k, 0, zc) - mono_element_exact(e.pair, k, 0, zc)), 1e-13);
    sum += mono_element(seq, k, 0, zc) * std::pow(t, static_cast<int>(k)) / factorial(k).get_d();
  }
  const Complex vac = exp_element_vac(e.pair, t, zc, guard, n).value;
  EXPECT_LT(std::abs(sum - vac), 1e-13);
  EXPECT_LT(std::abs(vac - egf_eval(GetParam(), t, zc)), 1e-9);
  // The coherent element at z' = 0 is the vacuum element times <z|0>.
  const Complex z = std::conj(zc);
  const Complex coh = exp_element_coherent(e.numeric, t, z, 0.0);
  EXPECT_LT(std::abs(coh - egf_eval(GetParam(), t, zc) * coherent_overlap(z, 0.0)), 1e-13);
  EXPECT_LT(std::abs(exp_element_state(e.pair, t, zc, 0, guard, n).value - vac), 1e-15);
  EXPECT_LT(std::abs(exp_element_state_exact(e.pair, t, zc, 0, guard, n).value - vac), 1e-13);
}

TEST_P(NormalOrderFamily, FirstDerivativeAtZeroIsS1) {
  const FamilyEntry e = family(GetParam(), 8);
  const ShefferSequence seq = sequence_via_egf(e.pair, 2);
  const Complex zc(0.2, 0.7);
  const double guard = std::min(1.0, e.guard_radius);
  const EvalResult r = exp_element_state(e.pair, 0.0, zc, 1, guard, 6);
  EXPECT_LT(std::abs(r.value - seq.polys[1].evaluate(zc)), 1e-14);
  // At t = 0 the exact state element is (x^l)(z*)/sqrt(l!).
  const EvalResult x2 = exp_element_state_exact(e.pair, 0.0, zc, 2, guard, 6);
  EXPECT_LT(std::abs(x2.value - zc * zc / std::sqrt(2.0)), 1e-14);
}

TEST_P(NormalOrderFamily, ZeroParameterGivesOverlap) {
  const FamilyEntry e = family(GetParam(), 24);
  const Complex z(0.3, 0.1);
  const Complex zp(0.05, -0.02);
  EXPECT_LT(std::abs(exp_element_coherent(e.numeric, 0.0, z, zp) - coherent_overlap(z, zp)), 1e-15);
}

TEST_P(NormalOrderFamily, SeriesRouteMatchesClosedRoute) {
  const FamilyEntry e = family(GetParam(), 40);
  const Complex z(0.3, 0.1);
  const Complex zp = Complex(0.05, -0.02) * std::min(1.0, e.shift_guard);
  const Complex t(0.03, 0.01);
  const Complex closed = exp_element_coherent(e.numeric, t, z, zp);
  const EvalResult series = exp_element_coherent_series(e.pair, t, z, zp, std::min(1.0, e.guard_radius) / 2);
  EXPECT_LT(std::abs(series.value - closed) / std::abs(closed), 1e-10);
}

INSTANTIATE_TEST_SUITE_P(All, NormalOrderFamily, ::testing::ValuesIn(family_labels()),
                         [](const auto& info) { return info.param; });

TEST(MatrixElements, SpecificValues) {
  const FamilyEntry h = family("hermite", 12);
  const ShefferSequence hs = sequence_via_egf(h.pair, 6);
  EXPECT_EQ(mono_element(hs, 2, 0, 0.0), Complex(-2.0));
  EXPECT_EQ(mono_element(hs, 0, 0, Complex(0.4, 0.4)), Complex(1.0));
  const Complex zc(0.5, 0.2);
  EXPECT_LT(std::abs(exp_element_state(h.pair, 0.0, zc, 2, 1.0, 8).value -
                     (4.0 * zc * zc - 2.0) / std::sqrt(2.0)),
            1e-14);
  const Complex t(0.07, -0.02);
  EXPECT_LT(std::abs(exp_element_vac(h.pair, t, zc, 1.0).value - std::exp(2.0 * t * zc - t * t)), 1e-14);
  const Complex z(0.3, -0.6), zp(0.4, 0.1);
  EXPECT_LT(std::abs(exp_element_coherent(h.numeric, t, z, zp) -
                     std::exp(t * (2.0 * std::conj(z) - zp) - t * t) * coherent_overlap(z, zp)),
            1e-14);

  const FamilyEntry b = family("bell", 12);
  const ShefferSequence bs = sequence_via_egf(b.pair, 6);
  // B_4 = x^4 + 6x^3 + 7x^2 + x
  const Complex w(0.5, -0.3);
  EXPECT_LT(std::abs(mono_element(bs, 3, 1, w) - (std::pow(w, 4) + 6.0 * std::pow(w, 3) + 7.0 * w * w + w)), 1e-13);
  EXPECT_LT(std::abs(mono_element(bs, 3, 1, w) - mono_element_exact(b.pair, 3, 1, w)), 1e-13);
  EXPECT_LT(std::abs(exp_element_vac(b.pair, 0.1, 0.5, 1.0).value - std::exp(0.5 * (std::exp(0.1) - 1.0))), 1e-14);
  EXPECT_LT(std::abs(exp_element_coherent(b.numeric, t, z, zp) -
                     std::exp(std::conj(z) * (zp + 1.0) * (std::exp(t) - 1.0)) * coherent_overlap(z, zp)),
            1e-14);
}

TEST(MatrixElements, ShiftedIndexFormNeedsUnitFirstPolynomial) {
  // s_{n+l}/sqrt(l!) only equals <z|M^n|l>/<z|0> at l = 1 when M 1 = x.
  const FamilyEntry lag = family("laguerre", 12);
  const ShefferSequence ls = sequence_via_egf(lag.pair, 6);
  const Complex w(0.5, -0.3);
  EXPECT_GT(std::abs(mono_element(ls, 2, 1, w) - mono_element_exact(lag.pair, 2, 1, w)), 1e-3);
  const FamilyEntry bes = family("bessel", 12);
  const ShefferSequence bs = sequence_via_egf(bes.pair, 6);
  EXPECT_GT(std::abs(mono_element(bs, 2, 2, w) - mono_element_exact(bes.pair, 2, 2, w)), 1e-3);
}

TEST(ShiftedPair, PolynomialLowering) {
  // f = x - x^2/2 shifted by c: (1 - c) x - x^2/2
  const FamilyEntry e = family("bessel", 6);
  const Rational c(1, 3);
  const auto [ft, gt] = shifted_pair(e.pair.f(), e.pair.g(), c);
  EXPECT_EQ(ft[0], 0);
  EXPECT_EQ(ft[1], Rational(2, 3));
  EXPECT_EQ(ft[2], Rational(-1, 2));
  EXPECT_EQ(ft[3], 0);
  EXPECT_EQ(gt[0], 1);
}

}  // namespace
}  // namespace sheffer
