#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nuclearity::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitVerificationFailed = 3;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nuclearity::cli
