#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace modkperm::cli {

enum ExitCode : int {
  ok = 0,
  verification_failure = 1,
  usage_error = 2,
  uncovered_formula = 3,
};

/// Runs one command line (without the program name). Data goes to `out`,
/// diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace modkperm::cli
