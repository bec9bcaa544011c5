#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hasse::cli {

// Exit codes. Mathematical negatives (obstructed curves, empty scans) exit 0.
inline constexpr int kOk = 0;
inline constexpr int kInvalidInput = 1;
inline constexpr int kResourceLimit = 4;
inline constexpr int kOracleMismatch = 5;

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hasse::cli
