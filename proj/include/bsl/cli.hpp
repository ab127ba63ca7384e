#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bsl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. args[0] is the program name. Never throws.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bsl::cli
