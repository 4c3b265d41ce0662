#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twr {

/// Exit statuses of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitParse = 2 };

/// Runs one command. `args` excludes the program name. JSON goes to `out`, a
/// one-line summary or diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twr
