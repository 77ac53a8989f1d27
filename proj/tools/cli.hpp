#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jets::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kOk = 0, kUsage = 2, kMismatch = 3 };

/// Run the command line (without the program name); returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jets::cli
