#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace tileforge::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNoSolution = 1;  // untileable, infeasible, at-maximum
inline constexpr int kUsage = 2;       // usage, parse and validation errors

// Runs one command; `args` excludes the program name.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace tileforge::cli
