#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bcs::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kInvalidSolution = 2,
  kCapacityError = 3,
};

/// Runs the command line `args` (without the program name), writing reports
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Worker count from BCS_WORKERS, falling back to 1.
int default_workers();

}  // namespace bcs::cli
