#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qcdist::cli {

enum ExitCode : int { kSuccess = 0, kFailure = 1, kUsage = 2 };

/// Runs the command line `args` (program name excluded), writing results to
/// `out` and diagnostics to `err`. Returns 0 on success, 1 on a computation or
/// validity error and 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace qcdist::cli
