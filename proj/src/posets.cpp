#include "fishlab/posets.hpp"

#include "fishlab/error.hpp"
#include "fishlab/parallel.hpp"

#include <algorithm>
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

int count_active(const std::vector<bool>& active, int lo, int hi) {
  int count = 0;
  for (int u = std::max(lo, 1); u <= hi; ++u)
    if (active[u]) ++count;
  return count;
}

// Activeness of k given a_k, a_{k+1} and the flags of everything below a_k.
bool interval_rule(int a_k, int a_next, int d, const std::vector<bool>& active) {
  return !(a_next <= a_k && count_active(active, a_next + 1, a_k) >= d);
}

struct ChainSearch {
  const FactorialPoset& poset;
  int length; // chain has length elements
  std::vector<int> chain;

  bool isolated(int e) const {
    if (e > poset.size()) return false;
    for (int c : chain)
      if (c == e || less(poset, c, e) || less(poset, e, c)) return false;
    return true;
  }

  bool search() {
    if (static_cast<int>(chain.size()) == length) return isolated(chain[length - 2] + 1);
    const int start = chain.empty() ? 1 : chain.back() + 1;
    for (int v = start; v <= poset.size(); ++v) {
      if (!chain.empty() && !less(poset, chain.back(), v)) continue;
      chain.push_back(v);
      if (search()) return true;
      chain.pop_back();
    }
    return false;
  }
};

void inversion_sequences(std::vector<int>& prefix, int n, std::vector<FactorialPoset>& out) {
  const int i = static_cast<int>(prefix.size()) + 1;
  if (i > n) {
    out.emplace_back(prefix);
    return;
  }
  for (int a = 0; a <= i - 1; ++a) {
    prefix.push_back(a);
    inversion_sequences(prefix, n, out);
    prefix.pop_back();
  }
}

} // namespace

FactorialPoset::FactorialPoset(std::vector<int> omega) : omega_(std::move(omega)) {
  if (omega_.empty()) throw InputError("poset must have at least one element");
  for (int i = 1; i <= size(); ++i) {
    const int a = omega_[i - 1];
    if (a < 0 || a > i - 1)
      throw InputError("not an inversion sequence (a_" + std::to_string(i) + " = " +
                       std::to_string(a) + "): " + join(omega_));
  }
}

FactorialPoset FactorialPoset::prefix(int i) const {
  if (i < 1 || i > size()) throw InputError("prefix length out of range");
  return FactorialPoset(std::vector<int>(omega_.begin(), omega_.begin() + i));
}

std::vector<std::pair<int, int>> FactorialPoset::covers() const {
  std::vector<std::pair<int, int>> out;
  const int n = size();
  for (int v = 1; v <= n; ++v) {
    for (int u = 1; u <= label(v); ++u) {
      bool covered = true;
      for (int w = u + 1; w < v && covered; ++w)
        if (u <= label(w) && w <= label(v)) covered = false;
      if (covered) out.emplace_back(u, v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

FactorialPoset from_relations(int n, std::span<const std::pair<int, int>> relations) {
  if (n < 1) throw InputError("poset size must be positive");
  std::vector<std::vector<bool>> below(n + 1, std::vector<bool>(n + 1, false));
  for (auto [u, v] : relations) {
    if (u < 1 || u > n || v < 1 || v > n)
      throw InputError("relation (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") outside [1, " + std::to_string(n) + "]");
    below[u][v] = true;
  }
  for (int w = 1; w <= n; ++w)
    for (int u = 1; u <= n; ++u)
      if (below[u][w])
        for (int v = 1; v <= n; ++v)
          if (below[w][v]) below[u][v] = true;

  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= u; ++v)
      if (below[u][v])
        throw ValidationError("not compatible: " + std::to_string(u) + " <_P " +
                              std::to_string(v) + " but " + std::to_string(u) +
                              " >= " + std::to_string(v));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        if (below[j][k] && !below[i][k])
          throw ValidationError("factorial rule fails at (i, j, k) = (" + std::to_string(i) +
                                ", " + std::to_string(j) + ", " + std::to_string(k) + ")");

  std::vector<int> omega(n, 0);
  for (int v = 1; v <= n; ++v)
    for (int u = 1; u < v; ++u)
      if (below[u][v]) omega[v - 1] = u;
  return FactorialPoset(std::move(omega));
}

bool less(const FactorialPoset& p, int u, int v) {
  const int n = p.size();
  if (u < 1 || u > n || v < 1 || v > n)
    throw InputError("element outside [1, " + std::to_string(n) + "]");
  return u <= p.label(v);
}

std::vector<int> nonzero_labels(const FactorialPoset& p) {
  std::vector<int> out;
  for (int a : p.omega())
    if (a > 0) out.push_back(a);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<bool> active_mask(const FactorialPoset& p, int d) {
  require_d(d);
  const int n = p.size();
  std::vector<bool> active(n + 1, false);
  for (int k = 1; k < n; ++k) active[k] = interval_rule(p.label(k), p.label(k + 1), d, active);
  return active;
}

std::vector<int> active_elements(const FactorialPoset& p, int d) {
  const auto mask = active_mask(p, d);
  std::vector<int> out;
  for (int v = 1; v <= p.size(); ++v)
    if (mask[v]) out.push_back(v);
  return out;
}

std::vector<int> active_elements_relational(const FactorialPoset& p, int d) {
  require_d(d);
  const int n = p.size();
  std::vector<bool> active(n + 1, false);
  std::vector<int> out;
  for (int k = 1; k < n; ++k) {
    int count = 0;
    for (int u = 1; u < k; ++u)
      if (less(p, u, k) && !less(p, u, k + 1) && active[u]) ++count;
    active[k] = count < d;
    if (active[k]) out.push_back(k);
  }
  return out;
}

bool is_difference_poset(const FactorialPoset& p, int d) {
  const auto active = active_mask(p, d);
  for (int a : p.omega())
    if (a > 0 && !active[a]) return false;
  return true;
}

bool contains_special_poset(const FactorialPoset& p, int m) {
  if (m < 3) throw InputError("special poset needs m >= 3, got " + std::to_string(m));
  ChainSearch search{p, m - 1, {}};
  return search.search();
}

Sequence psi(const FactorialPoset& p, int d) {
  if (!is_difference_poset(p, d))
    throw DomainError("not a difference " + std::to_string(d) + " poset: " + join(p.omega()));
  const auto active = active_mask(p, d);
  Sequence x;
  x.reserve(p.size());
  for (int a : p.omega()) x.push_back(count_active(active, 1, a));
  return x;
}

Sequence psi_recursive(const FactorialPoset& p, int d) {
  require_d(d);
  const int n = p.size();
  Sequence x{0};
  for (int k = 2; k <= n; ++k) {
    const auto active = active_mask(p.prefix(k - 1), d);
    const int a = p.label(k);
    if (a == 0) {
      x.push_back(0);
    } else if (a == k - 1) {
      x.push_back(count_active(active, 1, k - 1) + 1);
    } else if (active[a]) {
      x.push_back(count_active(active, 1, a));
    } else {
      throw DomainError("a_" + std::to_string(k) + " = " + std::to_string(a) +
                        " is neither 0, " + std::to_string(k - 1) +
                        ", nor active in the prefix poset");
    }
  }
  return x;
}

FactorialPoset psi_inv(std::span<const int> x, int d) {
  require_d(d);
  if (x.empty()) throw InputError("sequence must be nonempty");
  if (!is_d_ascent_sequence(x, d))
    throw DomainError("not a " + std::to_string(d) + "-ascent sequence: " + join(x));
  const int n = static_cast<int>(x.size());
  std::vector<int> omega{0};
  std::vector<bool> active(n + 1, false);
  int active_count = 0; // act(P[k-1]); its top element k-1 is never active
  for (int k = 2; k <= n; ++k) {
    const int target = x[k - 1];
    int a = 0;
    if (target == active_count + 1) {
      a = k - 1;
    } else if (target > 0) {
      int seen = 0;
      for (int u = 1; u < k - 1; ++u)
        if (active[u] && ++seen == target) {
          a = u;
          break;
        }
      if (a == 0)
        throw DomainError("x_" + std::to_string(k) + " exceeds act + 1 of the prefix poset");
    }
    omega.push_back(a);
    active[k - 1] = interval_rule(omega[k - 2], a, d, active);
    if (active[k - 1]) ++active_count;
  }
  return FactorialPoset(std::move(omega));
}

std::vector<FactorialPoset> enumerate_factorial_posets(int n) {
  if (n < 1) throw InputError("poset size must be positive, got " + std::to_string(n));
  std::vector<FactorialPoset> out;
  std::vector<int> prefix;
  prefix.reserve(n);
  inversion_sequences(prefix, n, out);
  return out;
}

std::vector<FactorialPoset> enumerate_difference_posets(int n, int d) {
  const auto sequences = enumerate_d_ascent_sequences(n, d);
  auto omegas = ordered_parallel_map(sequences.size(), [&](std::size_t i) {
    return psi_inv(sequences[i], d).omega();
  });
  std::sort(omegas.begin(), omegas.end());
  std::vector<FactorialPoset> out;
  out.reserve(omegas.size());
  for (auto& o : omegas) out.emplace_back(std::move(o));
  return out;
}

} // namespace fishlab
