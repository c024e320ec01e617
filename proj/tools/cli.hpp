#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sheffer::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kDomain = 3,
};

struct RunConfig {
  std::size_t order = 16;
  std::size_t lambda_order = 6;
  std::size_t a_order = 8;
  std::size_t cutoff = 64;
  double tolerance = 1e-8;
  std::string format = "json";
  int threads = 0;  // 0: OpenMP default
};

/// Suites run by `verify` when none is named.
const std::vector<std::string>& default_suites();

/// Entry point behind the `sheffer` executable; data goes to `out`,
/// diagnostics to `err`. Environment variables SHEFFER_ORDER,
/// SHEFFER_LAMBDA_ORDER, SHEFFER_A_ORDER, SHEFFER_CUTOFF, SHEFFER_TOLERANCE,
/// SHEFFER_FORMAT and SHEFFER_THREADS override the RunConfig defaults.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sheffer::cli
