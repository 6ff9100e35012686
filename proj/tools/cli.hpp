#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rowadj::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kParseError = 2;
inline constexpr int kStructureError = 3;
inline constexpr int kMissingValue = 4;
inline constexpr int kMismatch = 5;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rowadj::cli
