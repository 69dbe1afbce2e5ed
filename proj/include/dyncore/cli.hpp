#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dyncore::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kParse = 2,
  kCapacity = 3,
  kVerification = 4,
};

/// Runs the command line `args` (args[0] is the program name). The JSON
/// report goes to `out` only on success or verification failure;
/// diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dyncore::cli
