#pragma once

#include <ostream>

namespace patineq {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  ///< verification failure or inequality violation
  kExitUsage = 2,    ///< bad flags, invalid pattern, budget refusal
};

/// Runs the command line tool; output goes to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace patineq
