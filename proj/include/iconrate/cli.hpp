#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace iconrate::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point shared by the `iconrate` binary and in-process tests.
/// args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace iconrate::cli
