#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace stasheff::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailures = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kCacheEnv = "STASHEFF_CACHE_DIR";

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// diagnostics and warnings to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stasheff::cli
