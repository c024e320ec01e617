#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "expect_error.hpp"
#include "random_inputs.hpp"
#include "sheffer/json_io.hpp"

namespace sheffer {
namespace {

using testing::expect_code;

// RFC 4180 field splitter for one line.
std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  return out;
}

TEST(JsonIo, SeriesRoundTrip) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const TruncatedSeries s = testing::random_series(rng, 7);
    const Json j = to_json(s);
    EXPECT_EQ(j.at("order"), 7);
    EXPECT_EQ(series_from_json(Json::parse(j.dump())), s);
  }
  const Json j = to_json(TruncatedSeries(std::vector<Rational>{0, Rational(-3, 2)}, 1));
  EXPECT_EQ(j.dump(), R"({"coeffs":["0","-3/2"],"order":1})");
}

TEST(JsonIo, SeriesRejectsBadInput) {
  expect_code(ErrorCode::kIndexOutOfRange, [] { series_from_json(Json::parse(R"({"order":0,"coeffs":["1","2"]})")); });
  expect_code(ErrorCode::kSyntaxError, [] { series_from_json(Json::parse(R"({"order":1,"coeffs":[0.5]})")); });
  expect_code(ErrorCode::kDomainError, [] { series_from_json(Json::parse(R"({"order":1,"coeffs":["1/0"]})")); });
  EXPECT_THROW(series_from_json(Json::parse(R"({"coeffs":[]})")), Json::exception);
  EXPECT_EQ(series_from_json(Json::parse(R"({"order":2,"coeffs":[1,"1/2"]})"))[1], Rational(1, 2));
}

TEST(JsonIo, PolynomialRoundTrip) {
  std::mt19937 rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial p = testing::random_polynomial(rng, 6);
    EXPECT_EQ(polynomial_from_json(to_json(p)), p);
  }
  EXPECT_EQ(to_json(Polynomial(std::vector<Rational>{0, -12, 0, 8})).dump(), R"(["0","-12","0","8"])");
  EXPECT_EQ(to_json(Polynomial{}).dump(), "[]");
}

TEST(JsonIo, WeylRoundTrip) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const WeylElement u = testing::random_weyl(rng, 4, 5);
    EXPECT_EQ(weyl_from_json(to_json(u)), u);
  }
  EXPECT_EQ(to_json(WeylElement::monomial(1, 2, Rational(1, 3))).dump(), R"({"terms":[{"c":"1/3","d":2,"x":1}]})");
}

TEST(JsonIo, BivariateAndNormalForm) {
  BivariatePolynomial p;
  p.add_term(2, 1, Rational(-1, 2));
  EXPECT_EQ(to_json(p).dump(), R"({"terms":[{"c":"-1/2","x":2,"y":1}]})");
  NormallyOrderedSeries s(2, 3);
  s.add(1, 0, 1, 2);
  EXPECT_EQ(to_json(s).dump(), R"([{"a":0,"adag":1,"lambda_poly":["0","2","0"]}])");
}

TEST(JsonIo, NonFiniteDoublesBecomeNull) {
  NumericCheck r;
  r.max_rel_err = std::numeric_limits<double>::infinity();
  r.max_abs_err = std::nan("");
  const Json j = to_json(r);
  EXPECT_TRUE(j.at("max_rel_err").is_null());
  EXPECT_TRUE(j.at("max_abs_err").is_null());
  EXPECT_EQ(j.at("tail_estimate"), 0.0);
  EXPECT_TRUE(to_json(Complex(INFINITY, 1.0)).at("re").is_null());
  EXPECT_EQ(to_json(Complex(0.5, -1.0)).at("im"), -1.0);
}

TEST(JsonIo, ReportRowKeys) {
  const IdentityCheck id{"bell", "M s_n = s_{n+1}", 3, true, true, ""};
  const Json j = to_json(id);
  for (const char* k : {"family", "identity", "n", "pass", "asserted", "detail"}) EXPECT_TRUE(j.contains(k)) << k;
  EXPECT_EQ(j.size(), 6u);
  const Json n = to_json(NumericCheck{});
  EXPECT_EQ(n.size(), 9u);
  EXPECT_EQ(rows_to_json(std::vector<IdentityCheck>{id, id}).size(), 2u);
}

TEST(JsonIo, FamilyEntry) {
  const Json j = family_to_json(family("bessel", 4));
  EXPECT_EQ(j.at("label"), "bessel");
  EXPECT_EQ(j.at("f"), "x - x^2/2");
  EXPECT_EQ(j.at("f_coeffs").dump(), R"(["0","1","-1/2","0","0"])");
  EXPECT_EQ(j.at("guard_radius"), 0.5);
  EXPECT_TRUE(family_to_json(family("hermite", 4)).at("guard_radius").is_null());
}

TEST(Csv, QuotingFollowsRfc4180) {
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(split_csv(csv_field("x, \"y\"") + "," + csv_field("z")), (std::vector<std::string>{"x, \"y\"", "z"}));
}

TEST(Csv, RowsMatchHeader) {
  const std::size_t columns = split_csv(csv_report_header()).size();
  EXPECT_EQ(columns, 11u);
  const IdentityCheck id{"hahn", "[P, M] x^n = x^n", 4, false, true, "weyl route 1, direct 2"};
  auto fields = split_csv(csv_row("commutator", id));
  ASSERT_EQ(fields.size(), columns);
  EXPECT_EQ(fields[3], "4");
  EXPECT_EQ(fields[8], "false");
  EXPECT_EQ(fields[10], "weyl route 1, direct 2");
  NumericCheck n;
  n.family = "laguerre";
  n.identity = "<z|exp(tM)|z'>";
  n.params = "z=0.1+0.2i";
  n.max_rel_err = 1.5e-12;
  n.pass = true;
  n.asserted = false;
  fields = split_csv(csv_row("coherent", n));
  ASSERT_EQ(fields.size(), columns);
  EXPECT_EQ(fields[6], "1.500000e-12");
  EXPECT_EQ(fields[9], "false");
}

}  // namespace
}  // namespace sheffer
