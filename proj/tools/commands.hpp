#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cotan::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitInvariantFailure = 1,
    kExitUsage = 2,
    kExitPrecondition = 3,
    kExitIo = 4,
};

/// Runs the command line `args` (without the program name). Records go to
/// `out` unless redirected with --out/--report; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cotan::cli
