#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace teamlogic::cli {

enum ExitCode : int {
  kHolds = 0,
  kFails = 1,
  kUsage = 2,
  kBudget = 3,
};

/// Runs one invocation. `args` excludes the program name. Output goes to
/// `out`, diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace teamlogic::cli
