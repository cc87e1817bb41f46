#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cgsb {

/// Exit codes of `run`.
enum ExitCode : int { exit_ok = 0, exit_failure = 1, exit_usage = 2 };

/// The `cgsb` command line. args[0] is the program name. Reports go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cgsb
