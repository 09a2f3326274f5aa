#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace locsid {

/// Exit codes of the command-line tool.
inline constexpr int exit_ok = 0;
inline constexpr int exit_negative = 1;
inline constexpr int exit_usage = 2;

/// Runs one command; args excludes the program name. JSON goes to `out`
/// (or the -o file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace locsid
