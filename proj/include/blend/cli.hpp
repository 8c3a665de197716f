#pragma once

#include <iosfwd>

namespace blend {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitValidation = 2,
  kExitNumerical = 3,
  kExitAcceptance = 4,
};

/// Subcommands eval, stationary, sweep, radial, bounds and verify. Results go
/// to --out or `out`; diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace blend
