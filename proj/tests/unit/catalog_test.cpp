#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "expect_error.hpp"
#include "random_inputs.hpp"
#include "sheffer/catalog.hpp"

namespace sheffer {
namespace {

using testing::expect_code;

Polynomial P(std::initializer_list<Rational> c) { return Polynomial(std::vector<Rational>(c)); }

class CatalogFamily : public ::testing::TestWithParam<std::string> {};

TEST_P(CatalogFamily, GeneratedMatchesOracle) {
  const std::size_t n = 12;
  const FamilyEntry e = family(GetParam(), n + 2);
  const auto oracle = oracle_polys(GetParam(), n);
  ASSERT_EQ(oracle.size(), n + 1);
  const ShefferSequence egf = sequence_via_egf(e.pair, n);
  const ShefferSequence raised = sequence_via_raising(e.pair, n);
  for (std::size_t k = 0; k <= n; ++k) {
    EXPECT_EQ(egf.polys[k], oracle[k]) << k;
    EXPECT_EQ(raised.polys[k], oracle[k]) << k;
  }
}

TEST_P(CatalogFamily, MonomialityAndCommutator) {
  const FamilyEntry e = family(GetParam(), 16);
  EXPECT_TRUE(all_pass(verify_monomiality(e.pair, 12)));
  EXPECT_TRUE(all_pass(verify_commutator(e.pair, 8)));
}

TEST_P(CatalogFamily, GeneratingFunctionSumsPolynomials) {
  const std::size_t n = 40;
  const auto polys = oracle_polys(GetParam(), n);
  const FamilyEntry e = family(GetParam(), 4);
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  for (int trial = 0; trial < 5; ++trial) {
    const Complex x(u(rng), u(rng));
    const Complex t = Complex(u(rng), u(rng)) * std::min(0.1, e.guard_radius / 4);
    Complex sum = 0.0;
    Complex tk = 1.0;
    for (std::size_t k = 0; k <= n; ++k) {
      sum += polys[k].evaluate(x) * tk / factorial(static_cast<unsigned>(k)).get_d();
      tk *= t;
    }
    const Complex closed = egf_eval(GetParam(), t, x);
    EXPECT_LT(std::abs(sum - closed) / std::abs(closed), 1e-12) << t << " " << x;
  }
}

TEST_P(CatalogFamily, NumericPairIsConsistent) {
  const FamilyEntry e = family(GetParam(), 30);
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> u(-0.1, 0.1);
  for (int trial = 0; trial < 5; ++trial) {
    const Complex w(u(rng), u(rng));
    EXPECT_LT(std::abs(e.numeric.f(e.numeric.f_inverse(w)) - w), 1e-13);
    EXPECT_LT(std::abs(eval_complex(e.pair.f(), w, 0.5).value - e.numeric.f(w)), 1e-13);
    EXPECT_LT(std::abs(eval_complex(e.pair.g(), w, 0.5).value - e.numeric.g(w)), 1e-13);
  }
}

// The vacuum element <z|exp(tM)|0>/<z|0> is the generating function at x = z*,
// which every surviving coherent candidate must reduce to at z' = 0.
TEST_P(CatalogFamily, CoherentCandidateReducesToGeneratingFunction) {
  const auto cands = coherent_candidates(GetParam());
  ASSERT_FALSE(cands.empty());
  const Complex t(0.05, -0.03);
  const Complex zc(0.4, 0.2);
  const Complex ref = egf_eval(GetParam(), t, zc);
  EXPECT_LT(std::abs(cands.back().value(t, zc, 0.0) - ref), 1e-13);
}

TEST_P(CatalogFamily, ReferenceOperatorsActLikeBuiltOnes) {
  const unsigned d = 10;
  const FamilyEntry e = family(GetParam(), d + 2);
  const WeylElement m = build_raising(e.pair, d);
  const WeylElement p = build_lowering(e.pair, d);
  const OperatorForms ref = reference_operators(GetParam(), d);
  for (unsigned k = 0; k <= d; ++k) {
    const Polynomial xk = Polynomial::monomial(k);
    EXPECT_EQ(apply(ref.lowering, xk), apply(p, xk)) << k;
    Polynomial expected = apply(m, xk);
    // The reference Laguerre raising operator ends in -X - 1 where the pair gives -X + 1.
    if (GetParam() == "laguerre") expected -= scale(xk, Rational(2));
    EXPECT_EQ(apply(ref.raising, xk), expected) << k;
  }
}

INSTANTIATE_TEST_SUITE_P(All, CatalogFamily, ::testing::ValuesIn(family_labels()),
                         [](const auto& info) { return info.param; });

TEST(Catalog, LowOrderValues) {
  EXPECT_EQ(oracle_polys("hermite", 3)[3], P({0, -12, 0, 8}));
  EXPECT_EQ(oracle_polys("laguerre", 2)[2], P({2, -4, 1}));
  EXPECT_EQ(oracle_polys("bessel", 2)[2], P({0, 1, 1}));
  EXPECT_EQ(oracle_polys("bell", 3)[3], P({0, 1, 3, 1}));
  EXPECT_EQ(oracle_polys("lower_factorial", 3)[3], P({0, 2, -3, 1}));
  EXPECT_EQ(oracle_polys("hahn", 2)[2], P({-1, 0, 1}));
  EXPECT_EQ(oracle_polys("idempotent", 2)[2], P({0, 2, 1}));
}

TEST(Catalog, LabelsAndErrors) {
  EXPECT_EQ(family_labels().size(), 7u);
  expect_code(ErrorCode::kUnknownFamily, [] { family("chebyshev", 4); });
  expect_code(ErrorCode::kUnknownFamily, [] { oracle_polys("", 4); });
  expect_code(ErrorCode::kGuardExceeded, [] { egf_eval("laguerre", 1.0, 0.0); });
  expect_code(ErrorCode::kGuardExceeded, [] { egf_eval("bessel", Complex(0.0, 0.6), 0.0); });
  EXPECT_NO_THROW(egf_eval("hermite", 5.0, 0.0));
  EXPECT_NO_THROW(egf_eval("bell", 5.0, 0.0));
}

TEST(Catalog, GuardRadii) {
  EXPECT_TRUE(std::isinf(family("hermite", 4).guard_radius));
  EXPECT_TRUE(std::isinf(family("bell", 4).guard_radius));
  EXPECT_TRUE(std::isinf(family("idempotent", 4).guard_radius));
  EXPECT_EQ(family("laguerre", 4).guard_radius, 1.0);
  EXPECT_EQ(family("bessel", 4).guard_radius, 0.5);
  EXPECT_EQ(family("lower_factorial", 4).guard_radius, 1.0);
  EXPECT_EQ(family("hahn", 4).guard_radius, 1.0);
}

TEST(Catalog, CandidatesForDisputedForms) {
  EXPECT_EQ(coherent_candidates("laguerre").size(), 2u);
  EXPECT_EQ(coherent_candidates("hahn").size(), 2u);
  EXPECT_EQ(vacuum_candidates("laguerre").size(), 2u);
  EXPECT_EQ(vacuum_candidates("hermite").size(), 1u);
  // n! L_{n-1} and n! L_n differ already at n = 1.
  const auto v = vacuum_candidates("laguerre");
  EXPECT_NE(v[0].poly(1), v[1].poly(1));
  EXPECT_EQ(v[1].poly(1), P({1, -1}));
}

TEST(Catalog, NotesRecordAdjudication) {
  EXPECT_NE(family("laguerre", 4).notes.find("n! L_n(z*)"), std::string::npos);
  EXPECT_NE(family("hahn", 4).notes.find("arctan(t + tan z')"), std::string::npos);
}

}  // namespace
}  // namespace sheffer
