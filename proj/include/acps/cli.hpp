#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace acps::cli {

/// Exit codes: 0 success, 1 domain/runtime error, 2 usage or config error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command (`solve`, `compare`, `sweep`, `conformable`). `args`
/// excludes the program name. Progress lines go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace acps::cli
