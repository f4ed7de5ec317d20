#pragma once

#include <ostream>

namespace ldwb {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kPass = 0, kViolation = 1, kInputError = 2 };

/// Entry point of the ldwb command line; argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ldwb
