#include "fishlab/permutations.hpp"

#include "fishlab/error.hpp"
#include "fishlab/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace fishlab {
namespace {

std::string join(std::span<const int> xs) {
  std::string s;
  for (int v : xs) {
    if (!s.empty()) s += ' ';
    s += std::to_string(v);
  }
  return s;
}

void require_d(int d) {
  if (d < 0) throw InputError("d must be nonnegative, got " + std::to_string(d));
}

// Whether k (>= 2) is active given the flags of all smaller values. Positions
// may come from any container that maps value -> position.
template <class PositionOf>
bool classify(int k, int d, const ActiveMask& active, const std::vector<int>& line,
              PositionOf position_of) {
  const int pk = position_of(k);
  const int prev = position_of(k - 1);
  if (pk > prev) return true;
  int between = 0;
  for (int p = pk + 1; p < prev; ++p) {
    const int v = line[p - 1];
    if (v < k - 1 && active[v]) ++between;
  }
  return between < d;
}

struct Matcher {
  const Permutation& host;
  const BivincularPattern& pattern;
  const ActiveMask& active;
  std::vector<bool> adjacent;  // by pattern position
  std::vector<bool> marked;    // by pattern position
  std::vector<bool> linked;    // by pattern value
  std::vector<int> chosen;     // host positions, by pattern position
  std::vector<int> host_value; // host values, by pattern value (0 = unset)

  Matcher(const Permutation& pi, const BivincularPattern& p, const ActiveMask& act)
      : host(pi), pattern(p), active(act) {
    const int k = p.length();
    adjacent.assign(k + 2, false);
    marked.assign(k + 2, false);
    linked.assign(k + 2, false);
    for (int q : p.adjacent_after) adjacent[q] = true;
    for (int q : p.active_marks) marked[q] = true;
    for (int v : p.value_links) linked[v] = true;
    host_value.assign(k + 2, 0);
  }

  bool consistent(int slot, int position) const {
    const int v = host.at(position);
    const int pv = pattern.values[slot];
    if (marked[slot + 1] && !active[v]) return false;
    for (int s = 0; s < slot; ++s) {
      const int u = host.at(chosen[s]);
      if ((pattern.values[s] < pv) != (u < v)) return false;
    }
    if (linked[pv - 1] && pv > 1 && host_value[pv - 1] != 0 && host_value[pv - 1] + 1 != v)
      return false;
    if (linked[pv] && host_value[pv + 1] != 0 && v + 1 != host_value[pv + 1]) return false;
    return true;
  }

  bool search(int slot, int first) {
    const int k = pattern.length();
    if (slot == k) return true;
    const int n = host.size();
    int lo = first, hi = n - (k - slot) + 1;
    if (slot > 0 && adjacent[slot]) lo = hi = std::max(lo, chosen[slot - 1] + 1);
    for (int position = lo; position <= hi && position <= n; ++position) {
      if (!consistent(slot, position)) continue;
      const int pv = pattern.values[slot];
      chosen.push_back(position);
      host_value[pv] = host.at(position);
      if (search(slot + 1, position + 1)) return true;
      host_value[pv] = 0;
      chosen.pop_back();
    }
    return false;
  }
};

} // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  if (n < 1) throw InputError("permutation must be nonempty");
  positions_.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    const int v = values_[i];
    if (v < 1 || v > n || positions_[v - 1] != 0)
      throw InputError("not a permutation of [" + std::to_string(n) + "]: " + join(values_));
    positions_[v - 1] = i + 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw InputError("permutation length must be positive");
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

ActiveMask active_mask(const Permutation& pi, int d) {
  require_d(d);
  const int n = pi.size();
  ActiveMask active(n + 1, false);
  active[1] = true;
  auto position_of = [&](int v) { return pi.position_of(v); };
  for (int k = 2; k <= n; ++k) active[k] = classify(k, d, active, pi.values(), position_of);
  return active;
}

std::vector<int> active_elements(const Permutation& pi, int d) {
  const auto mask = active_mask(pi, d);
  std::vector<int> out;
  for (int v = 1; v <= pi.size(); ++v)
    if (mask[v]) out.push_back(v);
  return out;
}

std::vector<int> ascent_bottoms(const Permutation& pi) {
  std::vector<int> out;
  for (int i = 1; i < pi.size(); ++i)
    if (pi.at(i + 1) > pi.at(i)) out.push_back(pi.at(i));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_difference_permutation(const Permutation& pi, int d) {
  const auto active = active_mask(pi, d);
  for (int i = 1; i < pi.size(); ++i)
    if (pi.at(i + 1) > pi.at(i) && !active[pi.at(i)]) return false;
  return true;
}

void BivincularPattern::validate() const {
  const int k = length();
  std::vector<bool> seen(k + 1, false);
  for (int v : values) {
    if (v < 1 || v > k || seen[v]) throw InputError("pattern values must be a permutation of [k]");
    seen[v] = true;
  }
  for (int p : adjacent_after)
    if (p < 1 || p > k - 1) throw InputError("adjacent_after entry out of [1, k-1]");
  for (int v : value_links)
    if (v < 1 || v > k - 1) throw InputError("value_links entry out of [1, k-1]");
  for (int p : active_marks)
    if (p < 1 || p > k) throw InputError("active_marks entry out of [1, k]");
}

BivincularPattern tau_pattern(int m) {
  if (m < 3) throw InputError("tau pattern needs m >= 3, got " + std::to_string(m));
  BivincularPattern p;
  p.values = {m - 1, m};
  for (int v = 1; v <= m - 2; ++v) p.values.push_back(v);
  p.adjacent_after = {1};
  p.value_links = {m - 2};
  return p;
}

std::vector<BivincularPattern> sigma_family(int d) {
  require_d(d);
  std::vector<int> mu(d);
  std::iota(mu.begin(), mu.end(), 1);
  std::vector<BivincularPattern> family;
  do {
    BivincularPattern p;
    p.values = {d + 2, d + 3};
    p.values.insert(p.values.end(), mu.begin(), mu.end());
    p.values.push_back(d + 1);
    p.adjacent_after = {1};
    p.value_links = {d + 1};
    for (int q = 3; q <= d + 2; ++q) p.active_marks.push_back(q);
    family.push_back(std::move(p));
  } while (std::next_permutation(mu.begin(), mu.end()));
  return family;
}

bool contains_pattern(const Permutation& pi, const BivincularPattern& p, int d) {
  p.validate();
  if (p.length() > pi.size()) return false;
  const auto active = active_mask(pi, d);
  Matcher matcher(pi, p, active);
  return matcher.search(0, 1);
}

Sequence phi(const Permutation& pi, int d) {
  if (!is_difference_permutation(pi, d))
    throw DomainError("not a difference " + std::to_string(d) + " permutation: " + join(pi.values()));
  const auto active = active_mask(pi, d);
  const int n = pi.size();
  Sequence x(n, 0);
  for (int i = 1; i <= n; ++i) {
    int count = 0;
    for (int p = 1; p < pi.position_of(i); ++p) {
      const int v = pi.at(p);
      if (v < i && active[v]) ++count;
    }
    x[i - 1] = count;
  }
  return x;
}

Permutation phi_inv(std::span<const int> x, int d) {
  require_d(d);
  if (x.empty()) throw InputError("sequence must be nonempty");
  if (!is_d_ascent_sequence(x, d))
    throw DomainError("not a " + std::to_string(d) + "-ascent sequence: " + join(x));
  const int n = static_cast<int>(x.size());
  std::vector<int> line{1};
  ActiveMask active(n + 1, false);
  active[1] = true;
  int active_count = 1;

  auto position_of = [&](int v) {
    return static_cast<int>(std::find(line.begin(), line.end(), v) - line.begin()) + 1;
  };
  for (int k = 2; k <= n; ++k) {
    const int target = x[k - 1];
    if (target > active_count)
      throw DomainError("x_" + std::to_string(k) + " = " + std::to_string(target) +
                        " exceeds the active count " + std::to_string(active_count));
    std::size_t insert_at = 0;
    if (target > 0) {
      int seen = 0;
      while (insert_at < line.size()) {
        if (active[line[insert_at++]] && ++seen == target) break;
      }
    }
    line.insert(line.begin() + static_cast<std::ptrdiff_t>(insert_at), k);
    active[k] = classify(k, d, active, line, position_of);
    if (active[k]) ++active_count;
  }
  return Permutation(std::move(line));
}

std::vector<Permutation> enumerate_difference_permutations(int n, int d) {
  const auto sequences = enumerate_d_ascent_sequences(n, d);
  auto perms = ordered_parallel_map(sequences.size(), [&](std::size_t i) {
    return phi_inv(sequences[i], d).values();
  });
  std::sort(perms.begin(), perms.end());
  std::vector<Permutation> out;
  out.reserve(perms.size());
  for (auto& p : perms) out.emplace_back(std::move(p));
  return out;
}

} // namespace fishlab
