#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dilemma::cli {

// Exit codes: 0 success, 1 internal error, 2 validation or usage error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_internal = 1;
inline constexpr int exit_usage = 2;

// args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dilemma::cli
