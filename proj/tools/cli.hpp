#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace radix::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitObstructed = 2;
inline constexpr int kExitMalformed = 64;

/// Runs one invocation; `args` excludes the program name. Text goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace radix::cli
