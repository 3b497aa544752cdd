#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nprime {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,  // bad input, failed verification, unsupported parameters
  kExitExhausted = 2,
  kExitInconclusive = 3,
};

/// Entry point for the `nprime` tool. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nprime
