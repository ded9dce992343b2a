#pragma once

#include <ostream>

namespace kmf::cli {

/// Process exit codes.
enum ExitCode : int {
    kSuccess = 0,
    kDataError = 1,
    kUsageError = 2,
    kNotConverged = 3,
};

/// Parses argv (argv[0] is the program name) and runs the chosen subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kmf::cli
