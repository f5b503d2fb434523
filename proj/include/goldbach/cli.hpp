#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace goldbach::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNumeric = 2;

// Runs one subcommand. `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace goldbach::cli
