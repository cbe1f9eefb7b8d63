#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace olp::cli {

enum ExitCode : int { ok = 0, usage = 1, semantic = 2, cross_check = 3 };

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace olp::cli
