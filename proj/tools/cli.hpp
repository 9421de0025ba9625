#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace yokotl::cli {

enum ExitCode { kOk = 0, kUsage = 1, kComputation = 2, kMismatch = 3 };

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace yokotl::cli
