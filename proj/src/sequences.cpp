#include "fishlab/sequences.hpp"

#include "fishlab/error.hpp"
#include "fishlab/parallel.hpp"

#include <string>

namespace fishlab {
namespace {

void require_nonempty(std::span<const int> x, int d) {
  if (x.empty()) throw InputError("sequence must be nonempty");
  if (d < 0) throw InputError("d must be nonnegative, got " + std::to_string(d));
}

void require_parameters(int n, int d) {
  if (n < 1) throw InputError("length must be positive, got " + std::to_string(n));
  if (d < 0) throw InputError("d must be nonnegative, got " + std::to_string(d));
}

// Prefix extension state: the prefix itself and its d-ascent count.
struct Frontier {
  Sequence prefix;
  int dasc = 0;
};

// Depth-first extension in lexicographic order. Calls emit(prefix) for every
// completed sequence of length n.
template <class Emit>
void extend(Sequence& prefix, int dasc, int n, int d, Emit& emit) {
  if (static_cast<int>(prefix.size()) == n) {
    emit(prefix);
    return;
  }
  const int last = prefix.back();
  for (int y = 0; y <= dasc + 1; ++y) {
    prefix.push_back(y);
    extend(prefix, dasc + (y > last - d ? 1 : 0), n, d, emit);
    prefix.pop_back();
  }
}

// Lexicographically ordered prefixes of length min(n, depth); each one roots
// an independent subtree of the enumeration.
std::vector<Frontier> split_frontier(int n, int d, int depth) {
  std::vector<Frontier> frontier;
  Sequence start{0};
  auto collect = [&](const Sequence& s) {
    frontier.push_back({s, d_ascent_count(s, d)});
  };
  extend(start, 0, std::min(n, depth), d, collect);
  return frontier;
}

constexpr int kSplitDepth = 4;

} // namespace

std::vector<int> d_ascent_set(std::span<const int> x, int d) {
  require_nonempty(x, d);
  std::vector<int> indices;
  for (std::size_t i = 0; i + 1 < x.size(); ++i)
    if (x[i + 1] > x[i] - d) indices.push_back(static_cast<int>(i) + 1);
  return indices;
}

int d_ascent_count(std::span<const int> x, int d) {
  require_nonempty(x, d);
  int count = 0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i)
    if (x[i + 1] > x[i] - d) ++count;
  return count;
}

bool is_d_ascent_sequence(std::span<const int> x, int d) {
  require_nonempty(x, d);
  if (x[0] != 0) return false;
  int dasc = 0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (x[i] < 0 || x[i] > dasc + 1) return false;
    if (x[i] > x[i - 1] - d) ++dasc;
  }
  return true;
}

std::vector<Sequence> enumerate_d_ascent_sequences(int n, int d) {
  require_parameters(n, d);
  const auto frontier = split_frontier(n, d, kSplitDepth);
  return ordered_parallel_concat(frontier.size(), [&](std::size_t i) {
    std::vector<Sequence> out;
    Sequence prefix = frontier[i].prefix;
    auto emit = [&](const Sequence& s) { out.push_back(s); };
    extend(prefix, frontier[i].dasc, n, d, emit);
    return out;
  });
}

std::uint64_t count_d_ascent_sequences(int n, int d) {
  require_parameters(n, d);
  const auto frontier = split_frontier(n, d, kSplitDepth);
  const auto counts = ordered_parallel_map(frontier.size(), [&](std::size_t i) {
    std::uint64_t count = 0;
    Sequence prefix = frontier[i].prefix;
    auto emit = [&](const Sequence&) { ++count; };
    extend(prefix, frontier[i].dasc, n, d, emit);
    return count;
  });
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

} // namespace fishlab
