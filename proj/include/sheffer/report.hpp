#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace sheffer {

/// One row of an exact verification report.
struct IdentityCheck {
  std::string family;
  std::string identity;
  int n = 0;
  bool pass = false;
  bool asserted = true;
  std::string detail;
};

/// One row of a floating-point verification report.
struct NumericCheck {
  std::string family;
  std::string identity;
  std::string params;
  double max_abs_err = 0.0;
  double max_rel_err = 0.0;
  double tail_estimate = 0.0;
  bool pass = false;
  /// Rows that only document a finding, such as a formula under test
  /// or a losing candidate, carry asserted = false and do not decide overall
  /// success.
  bool asserted = true;
  std::string detail;
};

inline bool decides(const IdentityCheck& r) { return r.pass || !r.asserted; }
inline bool decides(const NumericCheck& r) { return r.pass || !r.asserted; }

template <class Row>
bool all_pass(const std::vector<Row>& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return decides(r); });
}

}  // namespace sheffer
