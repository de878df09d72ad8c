#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rgate::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitComputationFailure = 2;
inline constexpr int kExitObstructed = 3;

// Runs one invocation (args without the program name) and writes to the given
// streams. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rgate::cli
