#include "fishlab/error.hpp"
#include "fishlab/oracle.hpp"
#include "fishlab/posets.hpp"
#include "fishlab/sequences.hpp"

#include <gtest/gtest.h>

#include <utility>

using namespace fishlab;

namespace {

using Relations = std::vector<std::pair<int, int>>;

const Relations kLeftCovers{{1, 3}, {1, 6}, {1, 7}, {2, 3}, {2, 7},
                            {4, 5}, {3, 5}, {6, 8}, {5, 8}};
const Relations kRightCovers{{1, 3}, {1, 4}, {2, 4}, {3, 6}, {4, 6}};

} // namespace

TEST(FactorialPoset, Validation) {
  EXPECT_THROW(FactorialPoset({}), InputError);
  EXPECT_THROW(FactorialPoset({1}), InputError);
  EXPECT_THROW(FactorialPoset({0, 2}), InputError);
  const FactorialPoset p({0, 0, 2});
  EXPECT_EQ(p.label(3), 2);
  EXPECT_EQ(p.prefix(2).omega(), (std::vector<int>{0, 0}));
}

TEST(FactorialPoset, FromCoverDiagrams) {
  const auto p = from_relations(8, kLeftCovers);
  EXPECT_EQ(p.omega(), (std::vector<int>{0, 0, 2, 0, 4, 1, 2, 6}));
  const auto q = from_relations(6, kRightCovers);
  EXPECT_EQ(q.omega(), (std::vector<int>{0, 0, 1, 2, 0, 4}));
  EXPECT_EQ(from_relations(5, Relations{{1, 2}, {2, 5}, {3, 5}, {1, 4}}).omega(),
            (std::vector<int>{0, 1, 0, 1, 3}));
}

TEST(FactorialPoset, CoversRoundTrip) {
  const FactorialPoset p({0, 0, 2, 0, 4, 1, 2, 6});
  Relations expected = kLeftCovers;
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(p.covers(), expected);
  for (const auto& q : enumerate_factorial_posets(5)) EXPECT_EQ(from_relations(5, q.covers()), q);
}

TEST(FactorialPoset, RelationErrors) {
  EXPECT_THROW(from_relations(3, Relations{{2, 1}, {1, 2}}), ValidationError);
  EXPECT_THROW(from_relations(3, Relations{{2, 3}}), ValidationError);
  EXPECT_THROW(from_relations(3, Relations{{1, 4}}), InputError);
  EXPECT_THROW(from_relations(3, Relations{{2, 2}}), ValidationError);
}

TEST(FactorialPoset, Order) {
  const FactorialPoset p({0, 0, 2, 0, 4, 1, 2, 6});
  EXPECT_TRUE(less(p, 1, 8));
  EXPECT_TRUE(less(p, 4, 8));
  EXPECT_FALSE(less(p, 3, 4));
  EXPECT_FALSE(less(p, 8, 1));
  EXPECT_FALSE(less(p, 5, 5));
}

TEST(ActivePoset, Examples) {
  const FactorialPoset p({0, 0, 2, 0, 4, 1, 2, 6});
  const FactorialPoset q({0, 0, 1, 2, 0, 4});
  EXPECT_EQ(nonzero_labels(p), (std::vector<int>{1, 2, 4, 6}));
  EXPECT_EQ(nonzero_labels(q), (std::vector<int>{1, 2, 4}));
  EXPECT_EQ(active_elements(p, 0), (std::vector<int>{2, 4, 6, 7}));
  EXPECT_EQ(active_elements(p, 2), (std::vector<int>{1, 2, 4, 6, 7}));
  EXPECT_EQ(active_elements(q, 2), (std::vector<int>{1, 2, 3, 5}));
  EXPECT_TRUE(is_difference_poset(p, 2));
  EXPECT_FALSE(is_difference_poset(q, 2));
}

TEST(ActivePoset, RelationalFormAgreesForPositiveD) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : enumerate_factorial_posets(n))
      for (int d = 1; d <= 3; ++d)
        ASSERT_EQ(active_elements(p, d), active_elements_relational(p, d));
}

TEST(ActivePoset, RelationalFormDiffersAtZero) {
  // The relational reading makes every k < n inactive when d = 0.
  const FactorialPoset p({0, 0, 2, 0, 4, 1, 2, 6});
  EXPECT_TRUE(active_elements_relational(p, 0).empty());
  EXPECT_FALSE(active_elements(p, 0).empty());
}

TEST(SpecialPoset, Examples) {
  EXPECT_FALSE(contains_special_poset(FactorialPoset({0, 0, 2, 0, 4, 1, 2, 6}), 4));
  EXPECT_TRUE(contains_special_poset(FactorialPoset({0, 0, 1, 2, 0, 4}), 4));
  const FactorialPoset fig({0, 1, 0, 1, 3});
  EXPECT_TRUE(contains_special_poset(fig, 3));
  EXPECT_TRUE(is_difference_poset(fig, 0));
  EXPECT_THROW(contains_special_poset(fig, 2), InputError);
}

TEST(SpecialPoset, MatchesOracle) {
  for (int n = 1; n <= 6; ++n)
    for (int m = 3; m <= 5; ++m) {
      std::vector<FactorialPoset> fast;
      for (const auto& p : enumerate_factorial_posets(n))
        if (!contains_special_poset(p, m)) fast.push_back(p);
      EXPECT_EQ(fast, oracle::filter_posets(n, oracle::PosetFilter::special_free, m));
    }
}

TEST(Psi, Example) {
  const FactorialPoset p({0, 0, 2, 0, 4, 1, 2, 6});
  const Sequence x{0, 0, 2, 0, 3, 1, 2, 4};
  EXPECT_EQ(psi(p, 2), x);
  EXPECT_EQ(psi_recursive(p, 2), x);
  EXPECT_EQ(psi_inv(x, 2), p);
  EXPECT_EQ(d_ascent_set(x, 2), active_elements(p, 2));
}

TEST(Psi, PrefixStages) {
  const FactorialPoset p({0, 0, 2, 0, 4, 1, 2, 6});
  const Sequence x{0, 0, 2, 0, 3, 1, 2, 4};
  for (int k = 1; k <= 8; ++k) {
    const Sequence head(x.begin(), x.begin() + k);
    EXPECT_EQ(psi_inv(head, 2), p.prefix(k)) << "k=" << k;
  }
}

TEST(Psi, DomainErrors) {
  EXPECT_THROW(psi(FactorialPoset({0, 0, 1, 2, 0, 4}), 2), DomainError);
  EXPECT_THROW(psi_recursive(FactorialPoset({0, 0, 1, 2, 0, 4}), 2), DomainError);
  EXPECT_THROW(psi_inv(Sequence{0, 2}, 0), DomainError);
  EXPECT_THROW(psi_inv(Sequence{}, 0), InputError);
}

TEST(Psi, RoundTripSmall) {
  for (int n = 1; n <= 6; ++n)
    for (int d = 0; d <= 3; ++d)
      for (const auto& x : enumerate_d_ascent_sequences(n, d)) {
        const auto p = psi_inv(x, d);
        ASSERT_TRUE(is_difference_poset(p, d));
        ASSERT_EQ(psi(p, d), x);
        ASSERT_EQ(psi_recursive(p, d), x);
      }
}

TEST(Enumeration, FactorialPosetsAreInversionSequences) {
  const auto all = enumerate_factorial_posets(5);
  EXPECT_EQ(all.size(), 120u);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
}

TEST(Enumeration, DifferencePosetsMatchOracle) {
  for (int n = 1; n <= 6; ++n)
    for (int d = 0; d <= 3; ++d)
      EXPECT_EQ(enumerate_difference_posets(n, d),
                oracle::filter_posets(n, oracle::PosetFilter::difference_d, d));
}
