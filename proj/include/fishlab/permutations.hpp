#pragma once

#include "fishlab/sequences.hpp"

#include <compare>
#include <span>
#include <vector>

namespace fishlab {

/// A permutation of [n] in one-line notation pi_1 ... pi_n.
class Permutation {
public:
  /// Throws InputError unless values is a rearrangement of 1..n, n >= 1.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(values_.size()); }
  const std::vector<int>& values() const { return values_; }

  /// pi_i for a 1-based position i.
  int at(int position) const { return values_[position - 1]; }
  /// 1-based position of value v.
  int position_of(int value) const { return positions_[value - 1]; }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.values_ == b.values_;
  }
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.values_ <=> b.values_;
  }

private:
  std::vector<int> values_;
  std::vector<int> positions_;
};

/// Values v with active[v] set; index 0 is unused.
using ActiveMask = std::vector<bool>;

/// d-active flags of pi. 1 is active; k >= 2 is inactive iff k sits left of
/// k-1 and at least d active elements smaller than k-1 lie strictly between
/// them. Each k depends only on smaller values, so one pass over k suffices.
ActiveMask active_mask(const Permutation& pi, int d);

/// Act(pi) as an ascending list of values.
std::vector<int> active_elements(const Permutation& pi, int d);

/// Ascbot(pi): values pi_i with pi_{i+1} > pi_i, ascending.
std::vector<int> ascent_bottoms(const Permutation& pi);

/// Ascbot(pi) is a subset of Act(pi).
bool is_difference_permutation(const Permutation& pi, int d);

/// A classical pattern with three kinds of extra constraints. All indices and
/// values are 1-based, matching the usual bar/overline/underline notation.
struct BivincularPattern {
  std::vector<int> values;         ///< rearrangement of [k]
  std::vector<int> adjacent_after; ///< positions p: matches of p, p+1 are adjacent in the host
  std::vector<int> value_links;    ///< values v: host(v+1) == host(v) + 1
  std::vector<int> active_marks;   ///< positions whose host element must be d-active

  int length() const { return static_cast<int>(values.size()); }

  /// Throws InputError if the fields violate their index ranges.
  void validate() const;

  friend bool operator==(const BivincularPattern&, const BivincularPattern&) = default;
};

/// (m-1) | m 1 2 ... (m-2), with m-2 overlined. Requires m >= 3.
BivincularPattern tau_pattern(int m);

/// The d! patterns (d+2) | (d+3) mu (d+1), mu in S_d, mu underlined and d+1
/// overlined; ordered by mu lexicographically.
std::vector<BivincularPattern> sigma_family(int d);

/// True iff pi contains an occurrence of p. Active marks are evaluated
/// against Act(pi) for parameter d.
bool contains_pattern(const Permutation& pi, const BivincularPattern& p, int d);

/// x_i = number of active elements smaller than i standing left of i.
/// Throws DomainError unless pi is a difference d permutation.
Sequence phi(const Permutation& pi, int d);

/// Inverse of phi: inserts 2..n one at a time, at the front when x_k = 0 and
/// otherwise right after the x_k-th active element from the left. Throws
/// DomainError unless x is a d-ascent sequence.
Permutation phi_inv(std::span<const int> x, int d);

/// All difference d permutations of [n], sorted by one-line notation.
std::vector<Permutation> enumerate_difference_permutations(int n, int d);

} // namespace fishlab
