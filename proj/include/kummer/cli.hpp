#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kummer::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInternalError = 2;

inline constexpr int kDefaultLambdaCap = 31;

/// Runs one command. `args` excludes the program name. Exit codes: 0 success,
/// 1 bad input (diagnostic on `err`), 2 failed self-check (a bug).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kummer::cli
