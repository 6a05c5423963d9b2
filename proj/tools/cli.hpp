#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace skewtrace::cli {

enum ExitCode : int {
  kSuccess = 0,
  kTheoremViolated = 1,
  kUsageError = 2,
  kNoCounterexample = 3,
};

/// Runs one invocation; args[0] is the program name. Machine-readable JSON
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skewtrace::cli
