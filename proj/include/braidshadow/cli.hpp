#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace braidshadow {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;  // mathematical failure, exceeded cap
inline constexpr int kExitUsage = 2;   // bad arguments, unreadable or malformed input

/// Runs one command line (without the program name). Human-readable output
/// goes to `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace braidshadow
