#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace radspec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitSolver = 3;
inline constexpr int kExitDomain = 4;

/// Full command dispatch with injectable streams (args exclude the program
/// name). Returns one of the kExit codes; never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace radspec::cli
