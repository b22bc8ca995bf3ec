#pragma once

#include "fishlab/sequences.hpp"

#include <compare>
#include <span>
#include <utility>
#include <vector>

namespace fishlab {

/// A factorial poset on [n], stored as its inversion sequence
/// omega(P) = a_1 ... a_n with 0 <= a_i <= i-1. The order is recovered as
/// u <_P v  iff  u <= a_v. The prefix P[i] is the poset on a_1 ... a_i.
class FactorialPoset {
public:
  /// Throws InputError unless 0 <= a_i <= i-1 for every i and n >= 1.
  explicit FactorialPoset(std::vector<int> omega);

  int size() const { return static_cast<int>(omega_.size()); }
  const std::vector<int>& omega() const { return omega_; }
  /// a_i for 1-based i.
  int label(int i) const { return omega_[i - 1]; }

  /// P[i], the subposet on [i].
  FactorialPoset prefix(int i) const;

  /// Cover relations (u, v) of the Hasse diagram, sorted.
  std::vector<std::pair<int, int>> covers() const;

  friend bool operator==(const FactorialPoset&, const FactorialPoset&) = default;
  friend auto operator<=>(const FactorialPoset& a, const FactorialPoset& b) {
    return a.omega_ <=> b.omega_;
  }

private:
  std::vector<int> omega_;
};

/// Builds the poset generated by the given relations u <_P v on [n].
/// Throws ValidationError if the transitive closure violates compatibility
/// (u <_P v forces u < v) or the factorial rule (i < j and j <_P k force
/// i <_P k); the message names the first offending pair or triple.
FactorialPoset from_relations(int n, std::span<const std::pair<int, int>> relations);

/// u <_P v. Throws InputError for values outside [1, n].
bool less(const FactorialPoset& p, int u, int v);

/// A(P): the distinct nonzero entries of omega(P), ascending.
std::vector<int> nonzero_labels(const FactorialPoset& p);

/// d-active flags indexed by value (index 0 unused). For k < n, k is inactive
/// iff a_{k+1} <= a_k and [a_{k+1}+1, a_k] holds at least d active elements;
/// n is always inactive.
std::vector<bool> active_mask(const FactorialPoset& p, int d);

/// Act(P) ascending.
std::vector<int> active_elements(const FactorialPoset& p, int d);

/// Act(P) computed from the relational form of the rule: k < n is inactive
/// iff {u : u <_P k, not u <_P k+1} holds at least d active elements. Agrees
/// with active_elements for d >= 1; at d = 0 it marks every k < n inactive.
std::vector<int> active_elements_relational(const FactorialPoset& p, int d);

/// A(P) is a subset of Act(P).
bool is_difference_poset(const FactorialPoset& p, int d);

/// Whether P contains a chain i_1 <_P ... <_P i_{m-1} together with the
/// element i_{m-2}+1 incomparable to all of it. Requires m >= 3.
bool contains_special_poset(const FactorialPoset& p, int m);

/// x_i = |Act(P) intersected with [a_i]|. Throws DomainError unless P is a
/// difference d poset.
Sequence psi(const FactorialPoset& p, int d);

/// psi built prefix by prefix: x_n is 0 when a_n = 0, act(P[n-1]) + 1 when
/// a_n = n-1, and i when a_n is the i-th smallest active element of P[n-1].
Sequence psi_recursive(const FactorialPoset& p, int d);

/// Inverse of psi. Throws DomainError unless x is a d-ascent sequence.
FactorialPoset psi_inv(std::span<const int> x, int d);

/// All n! factorial posets on [n], omega in lexicographic order.
std::vector<FactorialPoset> enumerate_factorial_posets(int n);

/// All difference d posets on [n], omega in lexicographic order.
std::vector<FactorialPoset> enumerate_difference_posets(int n, int d);

} // namespace fishlab
