#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hurwitz::cli {

// Process exit codes.
enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kInvalidInput = 2,
    kResourceGuard = 3,
};

// Runs the command line `args` (without the program name). Reports go to
// `out`, diagnostics to `err`. Reads HURWITZ_GUARD_NODES from the environment.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hurwitz::cli
