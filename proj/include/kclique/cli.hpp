#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kclique {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitMismatch = 1, kExitUsage = 2 };

/// Runs the command-line tool on `args` (without the program name). Normal
/// output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kclique
