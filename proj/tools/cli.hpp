#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jacobsthal::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
    kInternalError = 3,
};

/// Runs the command line `args` (args[0] is the program name). Structured
/// results go to `out`, diagnostics and progress to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace jacobsthal::cli
