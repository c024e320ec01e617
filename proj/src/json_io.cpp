#include "sheffer/json_io.hpp"

#include <cmath>
#include <sstream>

#include "sheffer/error.hpp"

namespace sheffer {

namespace {

Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

std::vector<std::string> rational_strings(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const Rational& c : v) out.push_back(to_string(c));
  return out;
}

Rational rational_from(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw Error(ErrorCode::kSyntaxError, "coefficient must be a \"p/q\" string or an integer");
}

std::string fmt_double(double x) {
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  std::ostringstream os;
  os.precision(6);
  os << std::scientific << x;
  return os.str();
}

}  // namespace

Json to_json(const TruncatedSeries& s) {
  return Json{{"order", s.order()}, {"coeffs", rational_strings(s.coeffs())}};
}

TruncatedSeries series_from_json(const Json& j) {
  const auto order = j.at("order").get<std::size_t>();
  std::vector<Rational> c;
  for (const Json& x : j.at("coeffs")) c.push_back(rational_from(x));
  if (c.size() > order + 1) throw Error(ErrorCode::kIndexOutOfRange, "more coefficients than order + 1");
  return TruncatedSeries(std::move(c), order);
}

Json to_json(const Polynomial& p) { return rational_strings(p.coeffs()); }

Polynomial polynomial_from_json(const Json& j) {
  std::vector<Rational> c;
  for (const Json& x : j) c.push_back(rational_from(x));
  return Polynomial(std::move(c));
}

Json to_json(const BivariatePolynomial& p) {
  Json terms = Json::array();
  for (const auto& [key, c] : p.terms()) terms.push_back({{"x", key.first}, {"y", key.second}, {"c", to_string(c)}});
  return Json{{"terms", terms}};
}

Json to_json(const WeylElement& u) {
  Json terms = Json::array();
  for (const auto& [key, c] : u.terms()) terms.push_back({{"x", key.first}, {"d", key.second}, {"c", to_string(c)}});
  return Json{{"terms", terms}};
}

WeylElement weyl_from_json(const Json& j) {
  WeylElement u;
  for (const Json& t : j.at("terms")) u.add_term(t.at("x").get<unsigned>(), t.at("d").get<unsigned>(), rational_from(t.at("c")));
  return u;
}

Json to_json(const NormallyOrderedSeries& s) {
  Json out = Json::array();
  for (const auto& [key, poly] : s.terms()) {
    Json lp = rational_strings(poly.row(s.lambda_order() + 1));
    out.push_back({{"adag", key.first}, {"a", key.second}, {"lambda_poly", lp}});
  }
  return out;
}

Json to_json(const Complex& z) { return Json{{"re", number(z.real())}, {"im", number(z.imag())}}; }

Json to_json(const IdentityCheck& r) {
  return Json{{"family", r.family}, {"identity", r.identity}, {"n", r.n},
              {"pass", r.pass},     {"asserted", r.asserted}, {"detail", r.detail}};
}

Json to_json(const NumericCheck& r) {
  return Json{{"family", r.family},
              {"identity", r.identity},
              {"params", r.params},
              {"max_abs_err", number(r.max_abs_err)},
              {"max_rel_err", number(r.max_rel_err)},
              {"tail_estimate", number(r.tail_estimate)},
              {"pass", r.pass},
              {"asserted", r.asserted},
              {"detail", r.detail}};
}

Json family_to_json(const FamilyEntry& entry) {
  const FamilySpec spec = family_spec(entry.label);
  return Json{{"label", entry.label},
              {"f", spec.f},
              {"g", spec.g},
              {"f_coeffs", rational_strings(entry.pair.f().coeffs())},
              {"g_coeffs", rational_strings(entry.pair.g().coeffs())},
              {"guard_radius", number(entry.guard_radius)},
              {"shift_guard", number(entry.shift_guard)},
              {"notes", entry.notes}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_report_header() {
  return "suite,family,identity,n,params,max_abs_err,max_rel_err,tail_estimate,pass,asserted,detail";
}

std::string csv_row(const std::string& suite, const IdentityCheck& r) {
  return csv_field(suite) + "," + csv_field(r.family) + "," + csv_field(r.identity) + "," + std::to_string(r.n) +
         ",,,,," + (r.pass ? "true" : "false") + "," + (r.asserted ? "true" : "false") + "," + csv_field(r.detail);
}

std::string csv_row(const std::string& suite, const NumericCheck& r) {
  return csv_field(suite) + "," + csv_field(r.family) + "," + csv_field(r.identity) + ",," + csv_field(r.params) +
         "," + fmt_double(r.max_abs_err) + "," + fmt_double(r.max_rel_err) + "," + fmt_double(r.tail_estimate) + "," +
         (r.pass ? "true" : "false") + "," + (r.asserted ? "true" : "false") + "," + csv_field(r.detail);
}

}  // namespace sheffer
