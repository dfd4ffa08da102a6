#pragma once

#include <iosfwd>

namespace bforge {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitMalformed = 1,
  kExitNoBasis = 2,
  kExitNoOperator = 3,
  kExitInvariant = 4,
  kExitCorpusMismatch = 5,
};

/// Runs the bforge command line (argv[0] is the program name).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bforge
