#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace geographer::cli {

/// Stable exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kInadmissible = 2,
  kOpen = 3,
  kUsage = 64,
};

/// Runs the command line `args` (without the program name). Documents go to
/// `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace geographer::cli
