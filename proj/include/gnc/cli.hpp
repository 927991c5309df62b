#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gnc::cli {

/// Exit codes shared by every subcommand.
inline constexpr int exit_ok = 0;
inline constexpr int exit_error = 1;
/// compute only: the requested quantity does not exist.
inline constexpr int exit_not_exist = 2;

/// Runs the command line `args` (without the program name). Reads graphs
/// from `in` when no --g6/--file is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace gnc::cli
