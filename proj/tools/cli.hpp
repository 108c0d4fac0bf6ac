#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kottler::cli {

/// Process exit codes.
enum ExitCode : int {
  exit_ok = 0,
  exit_io = 1,
  exit_invalid = 2,
  exit_verification_failed = 3,
  exit_integrator = 4,
};

/// Runs the command line `args` (without the program name). Human-readable
/// output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kottler::cli
