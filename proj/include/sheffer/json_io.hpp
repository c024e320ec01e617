#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "sheffer/catalog.hpp"
#include "sheffer/normal_order.hpp"
#include "sheffer/polynomial.hpp"
#include "sheffer/report.hpp"
#include "sheffer/series.hpp"
#include "sheffer/weyl.hpp"

namespace sheffer {

using Json = nlohmann::json;

// Rationals travel as "p/q" strings (or "p" for integers) so that no
// precision is lost; doubles that are not finite are written as null.

Json to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const Json& j);

Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json to_json(const BivariatePolynomial& p);
Json to_json(const WeylElement& u);
WeylElement weyl_from_json(const Json& j);

Json to_json(const NormallyOrderedSeries& s);
Json to_json(const Complex& z);

Json to_json(const IdentityCheck& r);
Json to_json(const NumericCheck& r);

template <class Row>
Json rows_to_json(const std::vector<Row>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back(to_json(r));
  return out;
}

/// One catalog entry for `list`.
Json family_to_json(const FamilyEntry& entry);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& s);

/// One header for both kinds of report row; columns that do not apply are empty.
std::string csv_report_header();
std::string csv_row(const std::string& suite, const IdentityCheck& r);
std::string csv_row(const std::string& suite, const NumericCheck& r);

}  // namespace sheffer
