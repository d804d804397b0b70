#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace whk {

/// Exit codes of the command-line tool.
enum ExitCode { exit_ok = 0, exit_check_failed = 1, exit_input_error = 2 };

/// Runs the tool on the arguments (without the program name), writing reports
/// and objects to out and diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace whk
