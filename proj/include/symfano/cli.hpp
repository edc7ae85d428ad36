#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symfano {

/// Exit codes of the command-line tool.
enum ExitCode : int { ExitOk = 0, ExitFailure = 1, ExitUsage = 2 };

/// Runs the tool on `args` (without the program name). A path of "-" reads
/// standard input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace symfano
