#pragma once

#include <ostream>

namespace tck {

/// Exit statuses of the command-line front end.
enum ExitStatus : int {
  kExitOk = 0,
  kExitInvalid = 1,       // bad usage or inadmissible curve parameters
  kExitVerifyFailed = 2,  // a verification did not pass
};

/// Runs the tangentcone-kit command line. Reports go to `out`, diagnostics to
/// `err`; the return value is an ExitStatus.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tck
