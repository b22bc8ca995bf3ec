#include "fishlab/oracle.hpp"

#include "fishlab/error.hpp"
#include "fishlab/parallel.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace fishlab::oracle {
namespace {

using Line = std::vector<int>;

void guard(int n, int limit, const char* what) {
  if (n < 1) throw InputError(std::string(what) + ": n must be positive");
  if (n > limit)
    throw ResourceError(std::string(what) + ": n = " + std::to_string(n) +
                        " exceeds the oracle limit " + std::to_string(limit));
}

// ---- permutations -------------------------------------------------------

// Direct reading of the d-active procedure on one-line notation.
std::vector<bool> naive_active(const Line& p, int d) {
  const int n = static_cast<int>(p.size());
  std::vector<bool> active(n + 1, false);
  active[1] = true;
  for (int k = 2; k <= n; ++k) {
    auto at_k = std::find(p.begin(), p.end(), k);
    auto at_prev = std::find(p.begin(), p.end(), k - 1);
    if (at_k > at_prev) {
      active[k] = true;
      continue;
    }
    int smaller_active_between = 0;
    for (auto it = at_k + 1; it != at_prev; ++it)
      if (*it < k - 1 && active[*it]) ++smaller_active_between;
    active[k] = !(smaller_active_between >= d);
  }
  return active;
}

bool naive_difference(const Line& p, int d) {
  const auto active = naive_active(p, d);
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] < p[i + 1] && !active[p[i]]) return false;
  return true;
}

// Tries every increasing tuple of `length` positions; accept(positions)
// decides whether the tuple is an occurrence.
bool any_subsequence(int n, int length, const std::function<bool(const Line&)>& accept) {
  if (length > n) return false;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + length, true);
  Line positions;
  do {
    positions.clear();
    for (int i = 0; i < n; ++i)
      if (pick[i]) positions.push_back(i);
    if (accept(positions)) return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

bool order_isomorphic(const Line& w, const Line& pattern) {
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = 0; b < w.size(); ++b)
      if ((w[a] < w[b]) != (pattern[a] < pattern[b])) return false;
  return true;
}

// tau_m = (m-1) | m 1 2 ... (m-2) with m-2 overlined.
bool naive_contains_tau(const Line& p, int m) {
  Line pattern{m - 1, m};
  for (int v = 1; v <= m - 2; ++v) pattern.push_back(v);
  return any_subsequence(static_cast<int>(p.size()), m, [&](const Line& pos) {
    if (pos[1] != pos[0] + 1) return false;
    Line w;
    for (int q : pos) w.push_back(p[q]);
    // value m-1 sits at pattern slot 0, value m-2 at the last slot
    return order_isomorphic(w, pattern) && w[0] == w[m - 1] + 1;
  });
}

// Sigma_{d+3}: every tau'_mu, mu in S_d, taken as an independent pattern.
bool naive_contains_sigma(const Line& p, int d) {
  const auto active = naive_active(p, d);
  const int m = d + 3;
  Line mu(d);
  std::iota(mu.begin(), mu.end(), 1);
  do {
    Line pattern{d + 2, d + 3};
    pattern.insert(pattern.end(), mu.begin(), mu.end());
    pattern.push_back(d + 1);
    const bool found = any_subsequence(static_cast<int>(p.size()), m, [&](const Line& pos) {
      if (pos[1] != pos[0] + 1) return false;
      Line w;
      for (int q : pos) w.push_back(p[q]);
      if (!order_isomorphic(w, pattern) || w[0] != w[m - 1] + 1) return false;
      for (int s = 2; s < m - 1; ++s)
        if (!active[w[s]]) return false;
      return true;
    });
    if (found) return true;
  } while (std::next_permutation(mu.begin(), mu.end()));
  return false;
}

// ---- posets --------------------------------------------------------------

using Relation = std::vector<std::vector<bool>>;

// lt[u][v] iff u <_P v, read off the inversion sequence.
Relation relation_of(const Line& a) {
  const int n = static_cast<int>(a.size());
  Relation lt(n + 1, std::vector<bool>(n + 1, false));
  for (int v = 1; v <= n; ++v)
    for (int u = 1; u <= n; ++u) lt[u][v] = u <= a[v - 1];
  return lt;
}

bool naive_difference_poset(const Line& a, int d) {
  const int n = static_cast<int>(a.size());
  const Relation lt = relation_of(a);
  std::vector<bool> active(n + 1, false);
  for (int k = 1; k < n; ++k) {
    bool down_set_shrinks = true; // every u <_P k+1 also satisfies u <_P k
    int witnesses = 0;
    for (int u = 1; u <= n; ++u) {
      if (lt[u][k + 1] && !lt[u][k]) down_set_shrinks = false;
      if (lt[u][k] && !lt[u][k + 1] && active[u]) ++witnesses;
    }
    active[k] = !(down_set_shrinks && witnesses >= d);
  }
  for (int i = 1; i <= n; ++i) {
    int max_below = 0;
    for (int j = 1; j <= n; ++j)
      if (lt[j][i]) max_below = std::max(max_below, j);
    if (max_below > 0 && !active[max_below]) return false;
  }
  return true;
}

bool naive_contains_special(const Line& a, int m) {
  const int n = static_cast<int>(a.size());
  const Relation lt = relation_of(a);
  return any_subsequence(n, m - 1, [&](const Line& pos) {
    for (std::size_t s = 0; s + 1 < pos.size(); ++s)
      if (!lt[pos[s] + 1][pos[s + 1] + 1]) return false;
    const int isolated = pos[m - 3] + 2; // i_{m-2} + 1 as a value
    if (isolated > n) return false;
    for (int q : pos) {
      const int c = q + 1;
      if (c == isolated || lt[c][isolated] || lt[isolated][c]) return false;
    }
    return true;
  });
}

// ---- matrices --------------------------------------------------------------

bool naive_matrix_filter(const Line& cells, int m, MatrixFilter filter) {
  auto at = [&](int r, int c) { return cells[(r - 1) * m + (c - 1)]; };
  std::vector<int> rmin(m + 1, 0), rmax(m + 1, 0);
  for (int c = 1; c <= m; ++c)
    for (int r = 1; r <= m; ++r)
      if (at(r, c) > 0) {
        if (rmin[c] == 0) rmin[c] = r;
        rmax[c] = r;
      }
  for (int c = 1; c <= m; ++c)
    if (rmax[c] == 0) return false;
  if (filter == MatrixFilter::fishburn) {
    for (int r = 1; r <= m; ++r) {
      int sum = 0;
      for (int c = 1; c <= m; ++c) sum += at(r, c);
      if (sum == 0) return false;
    }
    return true;
  }
  for (int j = 1; j < m; ++j)
    if (!(rmax[j + 1] > rmin[j])) return false;
  return true;
}

// Every way to put `weight` units on the given cells, each cell >= 0.
void compositions(const std::vector<int>& slots, std::size_t next, int weight, Line& cells,
                  const std::function<void(const Line&)>& visit) {
  if (next == slots.size()) {
    if (weight == 0) visit(cells);
    return;
  }
  for (int v = 0; v <= weight; ++v) {
    cells[slots[next]] = v;
    compositions(slots, next + 1, weight - v, cells, visit);
  }
  cells[slots[next]] = 0;
}

} // namespace

std::vector<Sequence> filter_sequences(int n, int d) {
  guard(n, kMaxSequenceLength, "filter_sequences");
  std::vector<Sequence> out;
  Line x(n, 0);
  while (true) {
    bool valid = x[0] == 0;
    for (int i = 1; i < n && valid; ++i) {
      int dasc = 0;
      for (int j = 0; j + 1 < i; ++j)
        if (x[j + 1] > x[j] - d) ++dasc;
      valid = 0 <= x[i] && x[i] <= dasc + 1;
    }
    if (valid) out.push_back(x);
    int i = n - 1;
    while (i >= 0 && x[i] == n - 1) x[i--] = 0;
    if (i < 0) break;
    ++x[i];
  }
  return out;
}

std::vector<Permutation> filter_permutations(int n, PermutationFilter filter, int d) {
  guard(n, kMaxPermutationLength, "filter_permutations");
  if (d < 0) throw InputError("d must be nonnegative");
  std::vector<Permutation> out;
  Line p(n);
  std::iota(p.begin(), p.end(), 1);
  do {
    bool keep = false;
    switch (filter) {
    case PermutationFilter::difference_d: keep = naive_difference(p, d); break;
    case PermutationFilter::avoids_tau: keep = !naive_contains_tau(p, d + 3); break;
    case PermutationFilter::avoids_sigma: keep = !naive_contains_sigma(p, d); break;
    }
    if (keep) out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<FactorialPoset> filter_posets(int n, PosetFilter filter, int param) {
  guard(n, kMaxPosetSize, "filter_posets");
  if (filter == PosetFilter::special_free && param < 3)
    throw InputError("special poset size must be at least 3");
  if (param < 0) throw InputError("parameter must be nonnegative");
  std::vector<FactorialPoset> out;
  Line a(n, 0);
  while (true) {
    const bool keep = filter == PosetFilter::difference_d ? naive_difference_poset(a, param)
                                                           : !naive_contains_special(a, param);
    if (keep) out.emplace_back(a);
    int i = n - 1;
    while (i >= 0 && a[i] == i) a[i--] = 0;
    if (i < 0) break;
    ++a[i];
  }
  return out;
}

std::vector<TriMatrix> filter_matrices(int n, MatrixFilter filter) {
  guard(n, kMaxMatrixWeight, "filter_matrices");
  std::vector<TriMatrix> out;
  for (int m = 1; m <= n; ++m) {
    std::vector<int> slots;
    for (int r = 1; r <= m; ++r)
      for (int c = r; c <= m; ++c) slots.push_back((r - 1) * m + (c - 1));
    Line cells(m * m, 0);
    std::vector<TriMatrix> found;
    compositions(slots, 0, n, cells, [&](const Line& c) {
      if (!naive_matrix_filter(c, m, filter)) return;
      std::vector<std::vector<int>> rows(m);
      for (int r = 0; r < m; ++r) rows[r].assign(c.begin() + r * m, c.begin() + (r + 1) * m);
      found.push_back(TriMatrix::from_rows(rows));
    });
    std::sort(found.begin(), found.end());
    out.insert(out.end(), found.begin(), found.end());
  }
  return out;
}

void CountTable::add(std::string cls, int n, int d, std::uint64_t count) {
  if (find(cls, n, d))
    throw InputError("duplicate count row (" + cls + ", " + std::to_string(n) + ", " +
                     std::to_string(d) + ")");
  rows_.push_back({std::move(cls), n, d, count});
}

std::optional<std::uint64_t> CountTable::find(const std::string& cls, int n, int d) const {
  for (const auto& row : rows_)
    if (row.cls == cls && row.n == n && row.d == d) return row.count;
  return std::nullopt;
}

std::string CountTable::to_csv() const {
  std::ostringstream out;
  out << "class,n,d,count\n";
  for (const auto& row : rows_) out << row.cls << ',' << row.n << ',' << row.d << ',' << row.count << '\n';
  return out.str();
}

std::string CountTable::to_markdown() const {
  std::ostringstream out;
  out << "| class | n | d | count |\n|---|---|---|---|\n";
  for (const auto& row : rows_)
    out << "| " << row.cls << " | " << row.n << " | " << row.d << " | " << row.count << " |\n";
  return out.str();
}

CountTable build_count_table(int max_n, int max_d, int max_matrix_weight) {
  if (max_n < 1 || max_d < 0 || max_matrix_weight < 0)
    throw InputError("count table needs max_n >= 1, max_d >= 0");
  if (max_n > kMaxSequenceLength || max_n > kMaxPosetSize)
    throw ResourceError("count table: max_n = " + std::to_string(max_n) + " exceeds the limit " +
                        std::to_string(std::min(kMaxSequenceLength, kMaxPosetSize)));
  if (max_matrix_weight > kMaxMatrixWeight)
    throw ResourceError("count table: matrix weight limit is " + std::to_string(kMaxMatrixWeight));

  struct Cell {
    std::string cls;
    int n;
    int d;
  };
  std::vector<Cell> cells;
  for (int n = 1; n <= max_n; ++n)
    for (int d = 0; d <= max_d; ++d)
      for (const char* cls : {"seq", "seq-oracle", "perm", "perm-oracle", "poset", "poset-oracle"})
        cells.push_back({cls, n, d});
  for (int n = 1; n <= std::min(max_n, max_matrix_weight); ++n)
    for (const char* cls : {"fishburn", "fishburn-oracle", "colres", "colres-oracle"})
      cells.push_back({cls, n, 0});

  const auto counts = ordered_parallel_map(cells.size(), [&](std::size_t i) -> std::uint64_t {
    const auto& [cls, n, d] = cells[i];
    if (cls == "seq") return count_d_ascent_sequences(n, d);
    if (cls == "seq-oracle") return filter_sequences(n, d).size();
    if (cls == "perm") return enumerate_difference_permutations(n, d).size();
    if (cls == "perm-oracle")
      return filter_permutations(n, PermutationFilter::difference_d, d).size();
    if (cls == "poset") return enumerate_difference_posets(n, d).size();
    if (cls == "poset-oracle") return filter_posets(n, PosetFilter::difference_d, d).size();
    if (cls == "fishburn") return enumerate_fishburn(n).size();
    if (cls == "fishburn-oracle") return filter_matrices(n, MatrixFilter::fishburn).size();
    if (cls == "colres") return enumerate_column_restricted(n).size();
    return filter_matrices(n, MatrixFilter::column_restricted).size();
  });

  CountTable table;
  for (std::size_t i = 0; i < cells.size(); ++i)
    table.add(cells[i].cls, cells[i].n, cells[i].d, counts[i]);
  return table;
}

} // namespace fishlab::oracle
