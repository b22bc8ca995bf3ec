#include "fishlab/verify.hpp"

#include "fishlab/error.hpp"
#include "fishlab/io.hpp"
#include "fishlab/matrices.hpp"
#include "fishlab/oracle.hpp"
#include "fishlab/permutations.hpp"
#include "fishlab/posets.hpp"
#include "fishlab/sequences.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace fishlab::verify {
namespace {

std::string nd(int n, int d) {
  return "n=" + std::to_string(n) + " d=" + std::to_string(d) + " ";
}

std::string show(std::span<const int> v) { return "[" + io::format_line(v) + "]"; }

std::string show(const TriMatrix& a) {
  std::string s = "{";
  for (const auto& row : a.rows()) s += " [" + io::format_line(row) + "]";
  return s + " }";
}

// Accumulates one named property; keeps the first counterexample only.
class Check {
public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  bool failed() const { return !result_.passed; }

  void fail(std::string detail) {
    if (result_.passed) {
      result_.passed = false;
      result_.counterexample = std::move(detail);
    }
  }

  // Runs body, turning an escaped exception into a failure.
  void guard(const std::string& context, const std::function<void()>& body) {
    if (failed()) return;
    try {
      body();
    } catch (const std::exception& e) {
      fail(context + "threw: " + e.what());
    }
  }

  CheckResult result() const { return result_; }

private:
  CheckResult result_;
};

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Permutation witness_permutation(int n, int d) {
  std::vector<int> v;
  for (int k = d + 2; k <= n; ++k) v.push_back(k);
  for (int k = d; k >= 1; --k) v.push_back(k);
  v.push_back(d + 1);
  return Permutation(std::move(v));
}

// ---- permutations ---------------------------------------------------------

void permutation_suite(int max_n, int max_d, Report& report) {
  Check roundtrip("phi and phi_inv are mutually inverse; act(pi) = dasc(phi(pi)) + 1");
  Check incremental("inserted maximum k is inactive iff x_k <= x_{k-1} - d");
  Check tau("S^0_n = S_n(tau_3), S^1_n = S_n(tau_4), S^d_n within S_n(tau_{d+3})");
  Check witness("(d+2)...n d...1 (d+1) avoids tau_{d+3} but is not a difference permutation");
  Check sigma("S^d_n = S_n(Sigma_{d+3})");
  Check insertion("inserting n keeps old activeness; legal slots are exactly the difference ones");

  for (int n = 1; n <= max_n; ++n) {
    const auto everything = all_permutations(n);
    for (int d = 0; d <= max_d; ++d) {
      const std::string at = nd(n, d);
      const auto sequences = enumerate_d_ascent_sequences(n, d);

      roundtrip.guard(at, [&] {
        for (const auto& x : sequences) {
          const Permutation pi = phi_inv(x, d);
          if (!is_difference_permutation(pi, d) || phi(pi, d) != x ||
              static_cast<int>(active_elements(pi, d).size()) != d_ascent_count(x, d) + 1) {
            roundtrip.fail(at + "x=" + show(x));
            return;
          }
        }
        std::size_t members = 0;
        for (const auto& pi : everything) {
          if (!is_difference_permutation(pi, d)) continue;
          ++members;
          if (phi_inv(phi(pi, d), d) != pi) {
            roundtrip.fail(at + "pi=" + show(pi.values()));
            return;
          }
        }
        if (members != sequences.size())
          roundtrip.fail(at + "|S^d_n| = " + std::to_string(members) +
                         " but |A^d_n| = " + std::to_string(sequences.size()));
      });

      incremental.guard(at, [&] {
        for (const auto& x : sequences) {
          for (int k = 2; k <= n; ++k) {
            const auto prefix = std::span<const int>(x).first(k);
            const auto act = active_mask(phi_inv(prefix, d), d);
            const bool predicted_inactive = x[k - 1] <= x[k - 2] - d;
            if (act[k] == predicted_inactive) {
              incremental.fail(at + "x=" + show(x) + " k=" + std::to_string(k));
              return;
            }
          }
        }
      });

      tau.guard(at, [&] {
        const auto pattern = tau_pattern(d + 3);
        for (const auto& pi : everything) {
          const bool member = is_difference_permutation(pi, d);
          const bool avoids = !contains_pattern(pi, pattern, d);
          if ((member && !avoids) || (d <= 1 && avoids && !member)) {
            tau.fail(at + "pi=" + show(pi.values()));
            return;
          }
        }
      });

      if (d >= 2 && n >= d + 3) {
        witness.guard(at, [&] {
          const auto pi = witness_permutation(n, d);
          if (is_difference_permutation(pi, d) || contains_pattern(pi, tau_pattern(d + 3), d))
            witness.fail(at + "pi=" + show(pi.values()));
        });
      }

      sigma.guard(at, [&] {
        const auto family = sigma_family(d);
        for (const auto& pi : everything) {
          const bool avoids = std::none_of(family.begin(), family.end(), [&](const auto& p) {
            return contains_pattern(pi, p, d);
          });
          if (avoids != is_difference_permutation(pi, d)) {
            sigma.fail(at + "pi=" + show(pi.values()));
            return;
          }
        }
      });

      if (n >= 2) {
        insertion.guard(at, [&] {
          for (const auto& sigma_perm : all_permutations(n - 1)) {
            const auto before = active_mask(sigma_perm, d);
            const bool base = is_difference_permutation(sigma_perm, d);
            for (int slot = 0; slot < n; ++slot) {
              std::vector<int> line = sigma_perm.values();
              line.insert(line.begin() + slot, n);
              const Permutation pi(line);
              const auto after = active_mask(pi, d);
              const bool legal = slot == 0 || before[line[slot - 1]];
              bool stable = true;
              for (int v = 1; v < n; ++v) stable = stable && before[v] == after[v];
              if (!stable || is_difference_permutation(pi, d) != (base && legal)) {
                insertion.fail(at + "sigma=" + show(sigma_perm.values()) +
                               " slot=" + std::to_string(slot));
                return;
              }
            }
          }
        });
      }
    }
  }
  for (const auto* c : {&roundtrip, &incremental, &tau, &witness, &sigma, &insertion})
    report.checks.push_back(c->result());
}

// ---- posets ----------------------------------------------------------------

bool zero_difference_characterization(const FactorialPoset& p) {
  const int n = p.size();
  for (int i = 1; i < n; ++i) {
    bool premise = false;
    for (int k = 1; k <= n; ++k) premise = premise || (less(p, i, k) && !less(p, i + 1, k));
    if (!premise) continue;
    bool rescue = false;
    for (int j = 1; j <= n; ++j) rescue = rescue || (less(p, j, i + 1) && !less(p, j, i));
    if (!rescue) return false;
  }
  return true;
}

void poset_suite(int max_n, int max_d, Report& report) {
  Check roundtrip("psi and psi_inv are mutually inverse; Act(P) = dAsc(psi(P))");
  Check recursive("psi direct count formula equals the prefix recursion");
  Check special("P^1_n = P_n(P_4), P^d_n within P_n(P_{d+3}) for d >= 1");
  Check p3("P_n(P_3) within P^0_n");
  Check witness_poset("omega = 01013 lies in P^0_5 but contains special P_3");
  Check extension("P in P^d_n iff P[n-1] in P^d_{n-1} and a_n in {0, n-1} or Act(P[n-1])");
  Check relational("relational and interval activeness agree for d >= 1");
  Check zero_rule("P^0_n equals the posets obeying the d = 0 rescue rule");

  for (int n = 1; n <= max_n; ++n) {
    const auto everything = enumerate_factorial_posets(n);
    for (int d = 0; d <= max_d; ++d) {
      const std::string at = nd(n, d);
      const auto sequences = enumerate_d_ascent_sequences(n, d);

      roundtrip.guard(at, [&] {
        for (const auto& x : sequences) {
          const auto p = psi_inv(x, d);
          if (!is_difference_poset(p, d) || psi(p, d) != x) {
            roundtrip.fail(at + "x=" + show(x));
            return;
          }
        }
        std::size_t members = 0;
        for (const auto& p : everything) {
          if (!is_difference_poset(p, d)) continue;
          ++members;
          const auto x = psi(p, d);
          if (psi_inv(x, d) != p || active_elements(p, d) != d_ascent_set(x, d)) {
            roundtrip.fail(at + "omega=" + show(p.omega()));
            return;
          }
        }
        if (members != sequences.size()) roundtrip.fail(at + "|P^d_n| != |A^d_n|");
      });

      recursive.guard(at, [&] {
        for (const auto& p : everything)
          if (is_difference_poset(p, d) && psi(p, d) != psi_recursive(p, d)) {
            recursive.fail(at + "omega=" + show(p.omega()));
            return;
          }
      });

      if (d >= 1) {
        special.guard(at, [&] {
          for (const auto& p : everything) {
            const bool member = is_difference_poset(p, d);
            const bool free = !contains_special_poset(p, d + 3);
            if ((member && !free) || (d == 1 && free && !member)) {
              special.fail(at + "omega=" + show(p.omega()));
              return;
            }
          }
        });
        relational.guard(at, [&] {
          for (const auto& p : everything)
            if (active_elements(p, d) != active_elements_relational(p, d)) {
              relational.fail(at + "omega=" + show(p.omega()));
              return;
            }
        });
      } else {
        p3.guard(at, [&] {
          for (const auto& p : everything)
            if (!contains_special_poset(p, 3) && !is_difference_poset(p, 0)) {
              p3.fail(at + "omega=" + show(p.omega()));
              return;
            }
        });
        zero_rule.guard(at, [&] {
          for (const auto& p : everything)
            if (is_difference_poset(p, 0) != zero_difference_characterization(p)) {
              zero_rule.fail(at + "omega=" + show(p.omega()));
              return;
            }
        });
      }

      if (n >= 2) {
        extension.guard(at, [&] {
          for (const auto& p : everything) {
            const auto head = p.prefix(n - 1);
            const auto head_active = active_mask(head, d);
            const int a = p.label(n);
            const bool allowed = a == 0 || a == n - 1 || head_active[a];
            if (is_difference_poset(p, d) != (is_difference_poset(head, d) && allowed)) {
              extension.fail(at + "omega=" + show(p.omega()));
              return;
            }
          }
        });
      }
    }
  }
  if (max_n >= 5) {
    witness_poset.guard("", [&] {
      const FactorialPoset p({0, 1, 0, 1, 3});
      if (!is_difference_poset(p, 0) || !contains_special_poset(p, 3))
        witness_poset.fail("omega=[0 1 0 1 3]");
    });
  }
  for (const auto* c : {&roundtrip, &recursive, &special, &p3, &extension, &relational, &zero_rule})
    report.checks.push_back(c->result());
  if (max_n >= 5) report.checks.push_back(witness_poset.result());
}

// ---- matrices --------------------------------------------------------------

void matrix_suite(int max_n, Report& report) {
  Check inverse("theta and theta' are mutually inverse and preserve weight");
  Check stages("every stage A^(i) has weight n, Fishburn A^(i)[i], rmin_i < rmax_{i+1}");
  Check conservation("alpha keeps weight, dim, rmin_m and sets index = rmax_m on theta blocks");
  Check bar("theta-bar is a weight-preserving bijection from M'_n onto M_n");
  std::vector<CheckResult> counts;

  for (int n = 1; n <= max_n; ++n) {
    const std::string at = "n=" + std::to_string(n) + " ";
    const auto restricted = enumerate_column_restricted(n);
    const auto fishburn = enumerate_fishburn(n);
    const std::set<TriMatrix> fishburn_set(fishburn.begin(), fishburn.end());

    inverse.guard(at, [&] {
      std::set<TriMatrix> image;
      for (const auto& a : restricted) {
        const auto b = theta(a);
        if (!classify(b).fishburn || b.weight() != n || theta_inv(b) != a) {
          inverse.fail(at + "A=" + show(a));
          return;
        }
        image.insert(b);
      }
      for (const auto& b : fishburn)
        if (theta(theta_inv(b)) != b) {
          inverse.fail(at + "B=" + show(b));
          return;
        }
      if (image != fishburn_set) inverse.fail(at + "theta(M'_n) != M_n");
    });

    stages.guard(at, [&] {
      for (const auto& a : restricted) {
        const auto chain = theta_stages(a);
        const int m = a.dim();
        for (int i = 1; i <= m; ++i) {
          const auto& s = chain[i];
          const int next_rmax = i == m ? m + 1 : column_extremes(s, i + 1).rmax;
          if (s.weight() != n || !classify(s.leading(i)).fishburn ||
              !(column_extremes(s, i).rmin < next_rmax)) {
            stages.fail(at + "A=" + show(a) + " i=" + std::to_string(i));
            return;
          }
        }
      }
    });

    conservation.guard(at, [&] {
      for (const auto& a : restricted) {
        const auto chain = theta_stages(a);
        for (int k = 1; k <= a.dim(); ++k) {
          const auto block = chain[k - 1].leading(k);
          const auto out = alpha(block);
          const auto before = column_extremes(block, k);
          if (!classify(out).fishburn || out.weight() != block.weight() || out.dim() != k ||
              column_extremes(out, k).rmin != before.rmin || index_row(out) != before.rmax ||
              beta(out) != block) {
            conservation.fail(at + "block=" + show(block));
            return;
          }
        }
      }
    });

    bar.guard(at, [&] {
      std::set<TriMatrix> image;
      for (const auto& a : restricted) {
        const auto b = theta_bar(a);
        if (!classify(b).fishburn || b.weight() != n) {
          bar.fail(at + "A=" + show(a));
          return;
        }
        image.insert(b);
      }
      if (image.size() != restricted.size()) bar.fail(at + "theta-bar is not injective");
      else if (image != fishburn_set) bar.fail(at + "theta-bar(M'_n) != M_n");
    });

    const auto ascent = count_d_ascent_sequences(n, 0);
    CheckResult count;
    count.name = "|M_" + std::to_string(n) + "| = |M′_" + std::to_string(n) +
                 "| = " + std::to_string(fishburn.size());
    if (restricted.size() != fishburn.size() || fishburn.size() != ascent) {
      count.passed = false;
      count.counterexample = "|M'_n| = " + std::to_string(restricted.size()) +
                             ", |A_n| = " + std::to_string(ascent);
    }
    counts.push_back(count);
  }
  for (const auto* c : {&inverse, &stages, &conservation, &bar}) report.checks.push_back(c->result());
  report.checks.insert(report.checks.end(), counts.begin(), counts.end());
}

// ---- oracle cross-checks -----------------------------------------------------

template <class T>
bool same_objects(const std::vector<T>& fast, const std::vector<T>& slow) {
  return fast == slow;
}

void counts_suite(int max_n, int max_d, Report& report) {
  using namespace oracle;
  Check seq("d-ascent sequence enumerator equals brute-force filter");
  Check perm("difference permutation enumerator equals brute-force filter");
  Check poset("difference poset enumerator equals brute-force filter");
  Check patterns("brute-force pattern avoiders match S^d_n (Sigma always, tau for d <= 1)");
  Check cross("|A^d_n| = |S^d_n| = |P^d_n|");
  Check mats("Fishburn and column-restricted enumerators equal brute-force filters");
  Check chain("|M_n| = |M'_n| = |A^0_n|");

  for (int n = 1; n <= max_n; ++n) {
    for (int d = 0; d <= max_d; ++d) {
      const std::string at = nd(n, d);
      const auto seqs = enumerate_d_ascent_sequences(n, d);
      const auto perms = enumerate_difference_permutations(n, d);
      const auto posets = enumerate_difference_posets(n, d);
      seq.guard(at, [&] {
        if (!same_objects(seqs, filter_sequences(n, d))) seq.fail(at);
      });
      perm.guard(at, [&] {
        if (!same_objects(perms, filter_permutations(n, PermutationFilter::difference_d, d)))
          perm.fail(at);
      });
      poset.guard(at, [&] {
        if (!same_objects(posets, filter_posets(n, PosetFilter::difference_d, d))) poset.fail(at);
      });
      patterns.guard(at, [&] {
        if (!same_objects(perms, filter_permutations(n, PermutationFilter::avoids_sigma, d)))
          patterns.fail(at + "Sigma");
        else if (d <= 1 &&
                 !same_objects(perms, filter_permutations(n, PermutationFilter::avoids_tau, d)))
          patterns.fail(at + "tau");
      });
      if (seqs.size() != perms.size() || perms.size() != posets.size())
        cross.fail(at + std::to_string(seqs.size()) + " / " + std::to_string(perms.size()) +
                   " / " + std::to_string(posets.size()));
    }
    const std::string at = "n=" + std::to_string(n) + " ";
    const auto fishburn = enumerate_fishburn(n);
    const auto restricted = enumerate_column_restricted(n);
    mats.guard(at, [&] {
      if (!same_objects(fishburn, filter_matrices(n, MatrixFilter::fishburn)))
        mats.fail(at + "Fishburn");
      else if (!same_objects(restricted, filter_matrices(n, MatrixFilter::column_restricted)))
        mats.fail(at + "column-restricted");
    });
    if (fishburn.size() != restricted.size() || fishburn.size() != count_d_ascent_sequences(n, 0))
      chain.fail(at);
  }
  for (const auto* c : {&seq, &perm, &poset, &patterns, &cross, &mats, &chain})
    report.checks.push_back(c->result());
}

} // namespace

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

Report run_suite(Suite suite, int max_n, int max_d) {
  if (max_n < 1) throw InputError("max-n must be positive");
  if (max_d < 0) throw InputError("max-d must be nonnegative");
  const bool counts = suite == Suite::counts || suite == Suite::all;
  const int limit = counts ? kMaxCountsN : kMaxN;
  if (max_n > limit)
    throw ResourceError("max-n = " + std::to_string(max_n) + " exceeds the suite limit " +
                        std::to_string(limit));
  if (max_d > kMaxD)
    throw ResourceError("max-d = " + std::to_string(max_d) + " exceeds the limit " +
                        std::to_string(kMaxD));

  Report report;
  if (suite == Suite::perm || suite == Suite::all) permutation_suite(max_n, max_d, report);
  if (suite == Suite::poset || suite == Suite::all) poset_suite(max_n, max_d, report);
  if (suite == Suite::matrix || suite == Suite::all) matrix_suite(max_n, report);
  if (counts) counts_suite(max_n, max_d, report);
  return report;
}

std::string format_report(const Report& report) {
  std::ostringstream out;
  for (const auto& c : report.checks) {
    out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.passed) out << ": " << c.counterexample;
    out << '\n';
  }
  out << (report.passed() ? "all checks passed" : "some checks FAILED") << '\n';
  return out.str();
}

} // namespace fishlab::verify
