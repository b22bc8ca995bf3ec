#pragma once

// Brute-force reference definitions of every class. Nothing here calls the
// predicates or bijections of the other modules; the module types are used
// only to hand results back in a comparable form.

#include "fishlab/matrices.hpp"
#include "fishlab/permutations.hpp"
#include "fishlab/posets.hpp"
#include "fishlab/sequences.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fishlab::oracle {

inline constexpr int kMaxSequenceLength = 8;
inline constexpr int kMaxPermutationLength = 9;
inline constexpr int kMaxPosetSize = 8;
inline constexpr int kMaxMatrixWeight = 7;

enum class PermutationFilter { difference_d, avoids_tau, avoids_sigma };
enum class PosetFilter { difference_d, special_free };
enum class MatrixFilter { fishburn, column_restricted };

/// Every sequence in {0..n-1}^n satisfying the d-ascent definition, in
/// lexicographic order.
std::vector<Sequence> filter_sequences(int n, int d);

/// S_n filtered through a direct reading of the chosen definition.
/// avoids_tau and avoids_sigma use the patterns of length d+3.
std::vector<Permutation> filter_permutations(int n, PermutationFilter filter, int d);

/// All inversion sequences of length n filtered by the chosen definition;
/// param is d for difference_d and the pattern size m for special_free.
std::vector<FactorialPoset> filter_posets(int n, PosetFilter filter, int param);

/// Every upper-triangular matrix of weight n (dimension <= n) passing the
/// filter, by dimension then row-major order.
std::vector<TriMatrix> filter_matrices(int n, MatrixFilter filter);

struct CountRow {
  std::string cls;
  int n;
  int d;
  std::uint64_t count;
};

/// Counts keyed by (class, n, d), in insertion order.
class CountTable {
public:
  /// Throws InputError if the key is already present.
  void add(std::string cls, int n, int d, std::uint64_t count);
  std::optional<std::uint64_t> find(const std::string& cls, int n, int d) const;
  const std::vector<CountRow>& rows() const { return rows_; }

  std::string to_csv() const;
  std::string to_markdown() const;

private:
  std::vector<CountRow> rows_;
};

/// Side-by-side counts from the fast enumerators and the oracle filters.
/// Sequence classes ("seq", "perm", "poset" and their "-oracle" twins) cover
/// 1 <= n <= max_n and 0 <= d <= max_d; matrix classes ("fishburn",
/// "colres" and twins) cover weights up to min(max_n, max_matrix_weight),
/// recorded under d = 0.
CountTable build_count_table(int max_n, int max_d, int max_matrix_weight = 6);

} // namespace fishlab::oracle
