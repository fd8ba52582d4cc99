#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace modkperm {

struct VerifyConfig {
  /// Overrides the largest n of every range in a suite.
  std::optional<int> max_n;
  /// Overrides the largest k of every range in a suite.
  std::optional<int> max_k;
};

struct CheckResult {
  /// Identity and checked range, e.g. "a_k recursion == closed form, k≤6, n≤60".
  std::string label;
  bool passed = false;
  /// First counterexample or error message when the check fails.
  std::string detail;
};

/// core, modk, counting, sef, series, table2, remarks and all.
const std::vector<std::string>& suite_names();

/// Runs one suite. Throws std::invalid_argument for an unknown name.
std::vector<CheckResult> run_suite(std::string_view name, const VerifyConfig& config = {});

/// "label: PASS", or "label: FAIL (detail)".
std::string format_check(const CheckResult& result);

}  // namespace modkperm
