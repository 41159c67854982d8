#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hilbgen::cli {

/// Exit codes: 0 success, 1 a computation or check reported failure, 2 usage error.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kUsage = 2;

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hilbgen::cli
