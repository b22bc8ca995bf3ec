#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace fishlab {

/// An integer sequence x_1 ... x_n. The difference parameter d is passed
/// alongside to every statistic; indices reported to callers are 1-based.
using Sequence = std::vector<int>;

/// Indices i in [1, n-1] with x_{i+1} > x_i - d. Throws InputError on empty x.
std::vector<int> d_ascent_set(std::span<const int> x, int d);

/// Number of d-ascents, |d_ascent_set(x, d)|. Throws InputError on empty x.
int d_ascent_count(std::span<const int> x, int d);

/// True iff x_1 = 0 and 0 <= x_i <= dasc(x_1..x_{i-1}) + 1 for i >= 2.
/// Negative entries make the sequence invalid; empty x throws InputError.
bool is_d_ascent_sequence(std::span<const int> x, int d);

/// Every d-ascent sequence of length n in lexicographic order.
std::vector<Sequence> enumerate_d_ascent_sequences(int n, int d);

/// |enumerate_d_ascent_sequences(n, d)| without materializing the list.
std::uint64_t count_d_ascent_sequences(int n, int d);

} // namespace fishlab
