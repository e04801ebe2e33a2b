#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace archcop::cli {

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kUsageError = 2,
    kConvergenceFailure = 3,
};

/// Runs one command line (args[0] is the program name). Output that would go
/// to a file without --out is written to `out`; `in` backs `--in -`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace archcop::cli
