#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace uplus::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,
  kUsage = 2,
  kContradiction = 3,
  kResourceLimit = 4,
};

/// Runs one command line (without the program name). Output goes to out,
/// diagnostics to err. Deterministic for identical arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace uplus::cli
