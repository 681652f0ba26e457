#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ricci::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFalse = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `ricci` tool. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ricci::cli
