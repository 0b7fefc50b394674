#pragma once

#include <ostream>

namespace trilin::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 2,
  kUndefined = 3,
  kVerificationFailed = 4,
};

/// Parses argv (argv[0] is the program name), runs one subcommand, and
/// writes results to `out` and messages to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace trilin::cli
