#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace attractor {

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalid = 1,
  kExitUsage = 2,
  kExitBudget = 3,
  kExitInternal = 4,
};

/// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace attractor
