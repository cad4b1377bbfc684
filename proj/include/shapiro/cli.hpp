#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shapiro {

// Exit codes of the hgt command line.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

// Runs `hgt` with argv-style arguments (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shapiro
