// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 on any
// failure. Every expected set is produced by the brute-force oracle; the only
// literals are small hand-checked worked examples.

#include "fishlab/matrices.hpp"
#include "fishlab/oracle.hpp"
#include "fishlab/permutations.hpp"
#include "fishlab/posets.hpp"
#include "fishlab/sequences.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace fishlab;
namespace orc = fishlab::oracle;

namespace {

// Collects the first failure of a criterion.
struct Verdict {
  std::string failure;
  void require(bool ok, const std::string& what) {
    if (!ok && failure.empty()) failure = what;
  }
  bool ok() const { return failure.empty(); }
};

std::string str(std::span<const int> v) {
  std::ostringstream out;
  for (int x : v) out << x;
  return out.str();
}

std::string str(const TriMatrix& a) {
  std::ostringstream out;
  for (const auto& row : a.rows()) out << '[' << str(row) << ']';
  return out.str();
}

std::string at(int n, int d) { return " (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")"; }

TriMatrix mat(const std::vector<std::vector<int>>& rows) { return TriMatrix::from_rows(rows); }

std::vector<Permutation> symmetric_group(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool avoids_family(const Permutation& pi, const std::vector<BivincularPattern>& family, int d) {
  return std::none_of(family.begin(), family.end(),
                      [&](const auto& p) { return contains_pattern(pi, p, d); });
}

// ---------------------------------------------------------------------------

void golden_examples(Verdict& v) {
  const std::vector<Sequence> a3{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {0, 1, 2}};
  v.require(enumerate_d_ascent_sequences(3, 0) == a3, "A_3 listing");

  const std::vector<TriMatrix> m3{mat({{3}}), mat({{2, 0}, {0, 1}}), mat({{1, 1}, {0, 1}}),
                                  mat({{1, 0}, {0, 2}}), mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})};
  const auto fishburn3 = enumerate_fishburn(3);
  v.require(fishburn3.size() == 5 && std::set<TriMatrix>(fishburn3.begin(), fishburn3.end()) ==
                                         std::set<TriMatrix>(m3.begin(), m3.end()),
            "M_3 listing");

  const Permutation pi({4, 2, 6, 1, 7, 3, 8, 5});
  const Sequence x{0, 0, 2, 0, 3, 1, 2, 4};
  v.require(phi(pi, 2) == x, "phi(42617385) at d=2");
  v.require(phi_inv(std::span<const int>(x).first(1), 2).values() == std::vector<int>{1},
            "insertion trace start");
  v.require(phi_inv(std::span<const int>(x).first(2), 2).values() == std::vector<int>{2, 1},
            "insertion trace second step");
  v.require(phi_inv(x, 2) == pi, "insertion trace end");
  v.require(active_elements(pi, 2) == std::vector<int>{1, 2, 3, 5, 7, 8}, "Act(42617385) at d=2");

  const FactorialPoset p({0, 0, 2, 0, 4, 1, 2, 6});
  v.require(psi(p, 2) == x, "psi(00204126) at d=2");
  v.require(psi_recursive(p, 2) == x, "recursive psi(00204126) at d=2");
  v.require(psi_inv(x, 2) == p, "psi_inv(00203124) at d=2");

  const TriMatrix b = mat({{1, 0, 2, 3, 1}, {0, 3, 1, 1, 0}, {0, 0, 2, 3, 2}, {0, 0, 0, 2, 0},
                           {0, 0, 0, 0, 0}});
  const TriMatrix alpha_b = mat({{1, 0, 3, 2, 1}, {0, 3, 1, 1, 0}, {0, 0, 0, 0, 2},
                                 {0, 0, 0, 2, 3}, {0, 0, 0, 0, 2}});
  const TriMatrix a = mat({{1, 1, 3, 0}, {0, 2, 1, 1}, {0, 0, 1, 0}, {0, 0, 0, 2}});
  v.require(alpha(a) == a && beta(a) == a, "alpha(A) = beta(A) = A");
  v.require(alpha(b) == alpha_b, "alpha(B)");
  v.require(beta(alpha_b) == b, "beta(alpha(B)) = B");

  const TriMatrix fig = mat({{2, 1, 3, 2, 1}, {0, 1, 1, 3, 0}, {0, 0, 0, 1, 2}, {0, 0, 0, 2, 0},
                             {0, 0, 0, 0, 0}});
  const TriMatrix third = mat({{2, 1, 3, 2, 1}, {0, 0, 1, 3, 0}, {0, 0, 1, 1, 2},
                               {0, 0, 0, 2, 0}, {0, 0, 0, 0, 0}});
  const TriMatrix image = mat({{2, 1, 2, 3, 1}, {0, 0, 3, 1, 0}, {0, 0, 0, 0, 2},
                               {0, 0, 0, 1, 1}, {0, 0, 0, 0, 2}});
  const std::vector<TriMatrix> stages{fig, fig, fig, third, third, image};
  v.require(theta_stages(fig) == stages, "theta stages A^(1)..A^(5)");
  v.require(theta(fig) == image, "theta of the 5x5 example");
}

void bijection_roundtrips(Verdict& v) {
  for (int n = 1; n <= 8; ++n) {
    for (int d = 0; d <= 3; ++d) {
      const auto seqs = orc::filter_sequences(n, d);
      const auto perms = orc::filter_permutations(n, orc::PermutationFilter::difference_d, d);
      const auto posets = orc::filter_posets(n, orc::PosetFilter::difference_d, d);
      for (const auto& x : seqs) {
        const auto pi = phi_inv(x, d);
        v.require(std::binary_search(perms.begin(), perms.end(), pi) && phi(pi, d) == x,
                  "phi_inv then phi on " + str(x) + at(n, d));
        const auto q = psi_inv(x, d);
        v.require(std::binary_search(posets.begin(), posets.end(), q) && psi(q, d) == x,
                  "psi_inv then psi on " + str(x) + at(n, d));
      }
      for (const auto& pi : perms) {
        const auto x = phi(pi, d);
        v.require(phi_inv(x, d) == pi, "phi then phi_inv on " + str(pi.values()) + at(n, d));
        v.require(static_cast<int>(active_elements(pi, d).size()) == d_ascent_count(x, d) + 1,
                  "act = dasc + 1 on " + str(pi.values()) + at(n, d));
      }
      for (const auto& q : posets) {
        const auto x = psi(q, d);
        v.require(psi_inv(x, d) == q, "psi then psi_inv on " + str(q.omega()) + at(n, d));
        v.require(active_elements(q, d) == d_ascent_set(x, d),
                  "Act = dAsc on " + str(q.omega()) + at(n, d));
      }
      v.require(seqs.size() == perms.size() && perms.size() == posets.size(),
                "class sizes differ" + at(n, d));
      if (!v.ok()) return;
    }
  }
  for (int n = 1; n <= 6; ++n) {
    const auto restricted = orc::filter_matrices(n, orc::MatrixFilter::column_restricted);
    const auto fishburn = orc::filter_matrices(n, orc::MatrixFilter::fishburn);
    for (const auto& a : restricted) {
      const auto b = theta(a);
      v.require(std::binary_search(fishburn.begin(), fishburn.end(), b) && b.weight() == n &&
                    theta_inv(b) == a,
                "theta then theta' on " + str(a));
    }
    for (const auto& b : fishburn) {
      const auto a = theta_inv(b);
      v.require(std::binary_search(restricted.begin(), restricted.end(), a) && theta(a) == b,
                "theta' then theta on " + str(b));
    }
  }
}

void theorem_suites(Verdict& v) {
  for (int n = 1; n <= 8; ++n) {
    const auto group = symmetric_group(n);
    for (int d = 0; d <= 1; ++d) {
      const auto t = tau_pattern(d + 3);
      for (const auto& pi : group)
        v.require(is_difference_permutation(pi, d) == !contains_pattern(pi, t, d),
                  "tau equality fails on " + str(pi.values()) + at(n, d));
    }
  }
  for (int n = 5; n <= 6; ++n) {
    const auto t = tau_pattern(5);
    std::size_t members = 0, avoiders = 0;
    for (const auto& pi : symmetric_group(n)) {
      const bool member = is_difference_permutation(pi, 2);
      const bool avoids = !contains_pattern(pi, t, 2);
      v.require(!member || avoids, "S^2_n not inside S_n(tau_5) at " + str(pi.values()));
      members += member;
      avoiders += avoids;
    }
    v.require(members < avoiders, "inclusion at d=2 is not strict" + at(n, 2));
  }
  const Permutation witness({4, 5, 2, 1, 3});
  v.require(!contains_pattern(witness, tau_pattern(5), 2), "45213 should avoid tau_5");
  v.require(!is_difference_permutation(witness, 2), "45213 should not be a difference permutation");

  for (int n = 1; n <= 7; ++n)
    for (int d = 0; d <= 3; ++d) {
      const auto family = sigma_family(d);
      for (const auto& pi : symmetric_group(n))
        v.require(is_difference_permutation(pi, d) == avoids_family(pi, family, d),
                  "Sigma equality fails on " + str(pi.values()) + at(n, d));
    }

  for (int n = 1; n <= 7; ++n) {
    const auto diff1 = orc::filter_posets(n, orc::PosetFilter::difference_d, 1);
    const auto free4 = orc::filter_posets(n, orc::PosetFilter::special_free, 4);
    v.require(diff1 == free4, "P^1_n != P_n(P_4) at n=" + std::to_string(n));
    const auto diff0 = orc::filter_posets(n, orc::PosetFilter::difference_d, 0);
    for (const auto& p : orc::filter_posets(n, orc::PosetFilter::special_free, 3))
      v.require(std::binary_search(diff0.begin(), diff0.end(), p),
                "P_3-free poset outside P^0_n: " + str(p.omega()));
    for (const auto& p : enumerate_factorial_posets(n)) {
      v.require(is_difference_poset(p, 1) == !contains_special_poset(p, 4),
                "module P_4 predicate disagrees on " + str(p.omega()));
      if (!contains_special_poset(p, 3))
        v.require(is_difference_poset(p, 0), "module P_3 inclusion fails on " + str(p.omega()));
    }
  }
  const FactorialPoset fig({0, 1, 0, 1, 3});
  v.require(is_difference_poset(fig, 0) && contains_special_poset(fig, 3),
            "01013 should lie in P^0_5 but contain special P_3");
}

void counting_chain(Verdict& v) {
  for (int n = 1; n <= 7; ++n)
    for (int d = 0; d <= 3; ++d) {
      const auto seqs = enumerate_d_ascent_sequences(n, d);
      const auto perms = enumerate_difference_permutations(n, d);
      const auto posets = enumerate_difference_posets(n, d);
      v.require(seqs == orc::filter_sequences(n, d), "sequence lists differ" + at(n, d));
      v.require(perms == orc::filter_permutations(n, orc::PermutationFilter::difference_d, d),
                "permutation lists differ" + at(n, d));
      v.require(posets == orc::filter_posets(n, orc::PosetFilter::difference_d, d),
                "poset lists differ" + at(n, d));
      v.require(seqs.size() == perms.size() && perms.size() == posets.size(),
                "class sizes differ" + at(n, d));
    }
  for (int n = 1; n <= 6; ++n) {
    const auto fishburn = enumerate_fishburn(n);
    const auto restricted = enumerate_column_restricted(n);
    v.require(fishburn == orc::filter_matrices(n, orc::MatrixFilter::fishburn),
              "Fishburn lists differ at n=" + std::to_string(n));
    v.require(restricted == orc::filter_matrices(n, orc::MatrixFilter::column_restricted),
              "column-restricted lists differ at n=" + std::to_string(n));
    v.require(fishburn.size() == restricted.size() &&
                  fishburn.size() == orc::filter_sequences(n, 0).size(),
              "|M_n|, |M'_n|, |A_n| differ at n=" + std::to_string(n));
  }
  v.require(enumerate_fishburn(3).size() == 5, "|M_3| != 5");
}

void lemma_properties(Verdict& v) {
  // Insertion of a new maximum into any permutation.
  for (int n = 2; n <= 8; ++n)
    for (int d = 0; d <= 3; ++d)
      for (const auto& sigma : symmetric_group(n - 1)) {
        const auto before = active_mask(sigma, d);
        const bool base = is_difference_permutation(sigma, d);
        for (int slot = 0; slot < n; ++slot) {
          auto line = sigma.values();
          line.insert(line.begin() + slot, n);
          const Permutation pi(line);
          const auto after = active_mask(pi, d);
          for (int u = 1; u < n; ++u)
            v.require(before[u] == after[u], "activeness changed by inserting into " +
                                                 str(sigma.values()) + at(n, d));
          const bool legal = slot == 0 || before[line[slot - 1]];
          v.require(is_difference_permutation(pi, d) == (base && legal),
                    "insertion legality on " + str(pi.values()) + at(n, d));
        }
        if (!v.ok()) return;
      }

  for (int n = 1; n <= 8; ++n) {
    const auto all = enumerate_factorial_posets(n);
    for (int d = 0; d <= 3; ++d)
      for (const auto& p : all) {
        const bool member = is_difference_poset(p, d);
        if (n >= 2) {
          const auto head = p.prefix(n - 1);
          const int a = p.label(n);
          const bool allowed = a == 0 || a == n - 1 || active_mask(head, d)[a];
          v.require(member == (is_difference_poset(head, d) && allowed),
                    "extension law on " + str(p.omega()) + at(n, d));
        }
        if (member)
          v.require(psi(p, d) == psi_recursive(p, d),
                    "direct and recursive psi differ on " + str(p.omega()) + at(n, d));
      }
  }

  for (int n = 1; n <= 6; ++n)
    for (const auto& a : orc::filter_matrices(n, orc::MatrixFilter::column_restricted)) {
      const auto stages = theta_stages(a);
      const int m = a.dim();
      for (int k = 1; k <= m; ++k) {
        const auto block = stages[k - 1].leading(k);
        const auto image = alpha(block);
        const auto ext = column_extremes(block, k);
        v.require(classify(image).fishburn && image.weight() == block.weight() &&
                      image.dim() == k && column_extremes(image, k).rmin == ext.rmin &&
                      index_row(image) == ext.rmax,
                  "alpha conservation on block " + str(block));
        const auto& s = stages[k];
        const int next = k == m ? m + 1 : column_extremes(s, k + 1).rmax;
        v.require(s.weight() == n && classify(s.leading(k)).fishburn &&
                      column_extremes(s, k).rmin < next,
                  "stage invariant " + std::to_string(k) + " on " + str(a));
      }
    }
}

void theta_bar_suite(Verdict& v) {
  for (int n = 1; n <= 5; ++n) {
    const auto restricted = orc::filter_matrices(n, orc::MatrixFilter::column_restricted);
    const auto fishburn = orc::filter_matrices(n, orc::MatrixFilter::fishburn);
    std::set<TriMatrix> image;
    for (const auto& a : restricted) {
      const auto b = theta_bar(a);
      v.require(b.weight() == n && classify(b).fishburn, "theta-bar leaves M_n on " + str(a));
      image.insert(b);
    }
    v.require(image.size() == restricted.size(), "theta-bar not injective at n=" + std::to_string(n));
    v.require(image == std::set<TriMatrix>(fishburn.begin(), fishburn.end()),
              "theta-bar image is not M_n at n=" + std::to_string(n));
  }
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Verdict&)>>> criteria{
      {"golden examples", golden_examples},
      {"bijection roundtrips (n <= 8, d <= 3; matrices n <= 6)", bijection_roundtrips},
      {"pattern and special-poset theorems", theorem_suites},
      {"counting chain with identical object lists", counting_chain},
      {"lemma-level properties", lemma_properties},
      {"theta-bar bijection (n <= 5)", theta_bar_suite},
  };
  bool all = true;
  int number = 0;
  for (const auto& [name, run] : criteria) {
    Verdict v;
    try {
      run(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    all = all && v.ok();
    std::cout << (v.ok() ? "PASS" : "FAIL") << " criterion " << ++number << ": " << name;
    if (!v.ok()) std::cout << " -- " << v.failure;
    std::cout << std::endl;
  }
  return all ? 0 : 1;
}
