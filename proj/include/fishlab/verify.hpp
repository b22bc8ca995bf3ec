#pragma once

#include <string>
#include <vector>

namespace fishlab::verify {

enum class Suite { perm, poset, matrix, counts, all };

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string counterexample; ///< first failing object, empty on success
};

struct Report {
  std::vector<CheckResult> checks;
  bool passed() const;
};

inline constexpr int kMaxN = 8;
inline constexpr int kMaxCountsN = 7;
inline constexpr int kMaxD = 4;

/// Runs every property of the chosen suite exhaustively for 1 <= n <= max_n
/// and 0 <= d <= max_d. Throws ResourceError when the ranges exceed the
/// limits above and InputError for max_n < 1 or max_d < 0.
Report run_suite(Suite suite, int max_n, int max_d);

/// One "[PASS] name" or "[FAIL] name: counterexample" line per check.
std::string format_report(const Report& report);

} // namespace fishlab::verify
