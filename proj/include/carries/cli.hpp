#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace carries::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation. `args` excludes the program name.
/// Exit codes: 0 success, 1 invalid mathematical input, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace carries::cli
