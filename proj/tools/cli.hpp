#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fishlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Largest n accepted by `enumerate`.
inline constexpr int kMaxEnumerateN = 9;

/// Runs one invocation. `args` excludes the program name. Data goes to
/// `out`, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace fishlab::cli
