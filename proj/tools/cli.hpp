#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace unshuffle::cli {

enum ExitStatus : int {
  kSuccess = 0,
  kMismatch = 1,
  kUsage = 2,
  kInfeasible = 3,
};

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`; the return value is the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace unshuffle::cli
