#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orthant::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kSuccess = 0,
  kValidationError = 1,
  kBudgetError = 2,
};

/// Runs the tool with argv-style arguments (args[0] is the program name).
/// Reports go to `out`, diagnostics to `err`; `in` is read when no model
/// file is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace orthant::cli
