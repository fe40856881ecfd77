#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "uiozeta/partlist.hpp"
#include "uiozeta/text.hpp"

using namespace uiozeta;

namespace {

UnitIntervalOrder U(std::vector<int> pred) { return UnitIntervalOrder(std::move(pred)); }
PartListing L(std::vector<int> w) { return PartListing(std::move(w)); }

std::set<std::pair<int, int>> rel_set(const Poset& p) {
  const auto r = p.relations();
  return {r.begin(), r.end()};
}

Poset chain_poset(int n) { return Poset::from_order(UnitIntervalOrder::chain(n)); }
Poset antichain_poset(int n) { return Poset::from_order(UnitIntervalOrder::antichain(n)); }

}  // namespace

TEST(PartListing, RejectsNegativeEntries) { EXPECT_THROW(L({0, -1}), ValidationError); }

TEST(Poset, RejectsNonOrders) {
  EXPECT_THROW(Poset(2, {1, 0, 0, 0}), ValidationError);  // reflexive
  EXPECT_THROW(Poset(2, {0, 1, 1, 0}), ValidationError);  // symmetric
  EXPECT_THROW(Poset(3, {0, 1, 0, 0, 0, 1, 0, 0, 0}), ValidationError);  // 1<2<3, not 1<3
}

TEST(PosetOf, Examples) {
  EXPECT_TRUE(poset_of(L({0, 0, 0})).relations().empty());
  const std::set<std::pair<int, int>> want{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {5, 3}};
  EXPECT_EQ(oracle::listing_relations({0, 1, 2, 1, 0}), want);
  EXPECT_EQ(rel_set(poset_of(L({0, 1, 2, 1, 0}))), want);
  EXPECT_EQ(rel_set(poset_of(L({0, 2}))), (std::set<std::pair<int, int>>{{1, 2}}));
}

TEST(PosetOf, MatchesRuleOnAllSmallListings) {
  // All listings with entries 0..3 and length <= 5; construction re-asserts transitivity.
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> w(n, 0);
    while (true) {
      ASSERT_EQ(rel_set(poset_of(L(w))), oracle::listing_relations(w));
      int k = n - 1;
      while (k >= 0 && w[k] == 3) w[k--] = 0;
      if (k < 0) break;
      ++w[k];
    }
  }
}

TEST(QStep, InsertionRows) {
  EXPECT_EQ(q_step(L({0, 1, 0}), 1, 1), L({0, 1, 1, 0}));
  EXPECT_EQ(q_step(L({0, 1, 1, 0}), 2, 1), L({0, 1, 2, 1, 0}));
  EXPECT_EQ(q_step(L({0}), 0, 0), L({0, 0}));
}

TEST(QStep, Preconditions) {
  EXPECT_THROW(q_step(L({0, 0}), 2, 1), PreconditionError);  // no letter 1
  EXPECT_THROW(q_step(L({0}), 1, 2), PreconditionError);     // only one 0
  EXPECT_THROW(q_step(L({0}), 0, 1), PreconditionError);
}

TEST(QMap, FiveElementTrace) {
  const auto res = q_map(U({0, 0, 1, 1, 3}));
  EXPECT_EQ(res.listing, L({0, 1, 2, 1, 0}));
  EXPECT_EQ(res.trace.levels, (LevelProfile{0, 0, 1, 1, 2}));
  EXPECT_EQ(res.trace.c, (std::vector<int>{0, 0, 1, 1, 1}));
  const std::vector<PartListing> words{L({0}), L({0, 0}), L({0, 1, 0}), L({0, 1, 1, 0}),
                                       L({0, 1, 2, 1, 0})};
  EXPECT_EQ(res.trace.words, words);
}

TEST(QMap, FourElementAndChain) {
  EXPECT_EQ(q_map(U({0, 1, 1, 2})).listing, L({0, 1, 2, 1}));
  for (int n = 1; n <= 8; ++n) {
    std::vector<int> want(n);
    std::iota(want.begin(), want.end(), 0);
    EXPECT_EQ(q_map(UnitIntervalOrder::chain(n)).listing.vec(), want);
  }
}

TEST(QMap, TraceIsConsistent) {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& u : all_unit_interval_orders(n)) {
      const auto res = q_map(u);
      for (int i = 1; i <= n; ++i) {
        const auto& w = res.trace.words[i - 1].vec();
        ASSERT_EQ(static_cast<int>(w.size()), i);
        ASSERT_EQ(w[res.trace.positions[i - 1]], res.trace.levels[i - 1]);
        if (i > 1) {
          auto removed = w;
          removed.erase(removed.begin() + static_cast<std::ptrdiff_t>(res.trace.positions[i - 1]));
          ASSERT_EQ(removed, res.trace.words[i - 2].vec());
        }
      }
    }
  }
}

TEST(QMap, OutputsAreAreaSequencesAndInjective) {
  for (int n = 1; n <= 10; ++n) {
    std::set<std::vector<int>> images;
    for (const auto& u : all_unit_interval_orders(n)) {
      const auto q = q_map(u).listing;
      ASSERT_FALSE(AreaSequence::violation(q.vec()).has_value()) << format_int_list(u.vec());
      images.insert(q.vec());
    }
    EXPECT_EQ(images.size(), oracle::catalan(n));
  }
}

TEST(QMap, PosetIsIsomorphicToOrder) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& u : all_unit_interval_orders(n)) {
      const auto q = q_map(u).listing;
      ASSERT_TRUE(oracle::isomorphic_by_permutations(oracle::listing_relations(q.vec()),
                                                     rel_set(Poset::from_order(u)), n));
    }
  }
}

TEST(PMap, Examples) {
  EXPECT_EQ(p_map(U({0, 1, 1, 2})).str(), "aaabbabb");
  const auto bigger = extend(U({0, 1, 1, 2}), 2);
  EXPECT_EQ(q_map(bigger).listing, L({0, 1, 2, 2, 1}));
  EXPECT_EQ(p_map(bigger).str(), "aaababbabb");
  // All levels are 0, so the listing is all zeros: the zero-area path.
  EXPECT_EQ(p_map(UnitIntervalOrder::antichain(3)).str(), "ababab");
}

TEST(FPermutation, Examples) {
  EXPECT_EQ(f_permutation(L({0, 1, 2, 1, 0})), (std::vector<int>{1, 3, 5, 4, 2}));
  EXPECT_EQ(f_permutation(L({0, 0, 0})), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(f_permutation(L({0, 1, 2})), (std::vector<int>{1, 2, 3}));
}

TEST(RelabeledPoset, Examples) {
  const auto five = U({0, 0, 1, 1, 3});
  EXPECT_EQ(relabeled_poset(q_map(five).listing), Poset::from_order(five));
  EXPECT_EQ(as_unit_interval_order(relabeled_poset(L({0, 1, 2, 1, 0}))), five);
  EXPECT_EQ(relabeled_poset(L({0, 0, 0, 0})), antichain_poset(4));
  EXPECT_EQ(relabeled_poset(L({0, 1, 2, 3})), chain_poset(4));
}

TEST(RelabeledPoset, RecoversOrderExactly) {
  for (int n = 1; n <= 9; ++n)
    for (const auto& u : all_unit_interval_orders(n))
      ASSERT_EQ(as_unit_interval_order(relabeled_poset(q_map(u).listing)), u);
}

TEST(IsIsomorphic, Examples) {
  EXPECT_TRUE(is_isomorphic(chain_poset(3), chain_poset(3)));
  EXPECT_FALSE(is_isomorphic(chain_poset(3), antichain_poset(3)));
  EXPECT_TRUE(is_isomorphic(poset_of(L({0, 1, 2, 1, 0})), Poset::from_order(U({0, 0, 1, 1, 3}))));
  EXPECT_FALSE(is_isomorphic(chain_poset(2), chain_poset(3)));
}

TEST(IsIsomorphic, AgreesWithPermutationOracle) {
  // All pairs of listings of length 4 with entries 0..2.
  std::vector<std::vector<int>> listings;
  std::vector<int> w(4, 0);
  while (true) {
    listings.push_back(w);
    int k = 3;
    while (k >= 0 && w[k] == 2) w[k--] = 0;
    if (k < 0) break;
    ++w[k];
  }
  for (const auto& x : listings)
    for (const auto& y : listings)
      ASSERT_EQ(is_isomorphic(poset_of(L(x)), poset_of(L(y))),
                oracle::isomorphic_by_permutations(oracle::listing_relations(x),
                                                   oracle::listing_relations(y), 4));
}

TEST(Grevlex, Examples) {
  EXPECT_EQ(grevlex_compare(L({1, 0}), L({0, 1})), std::strong_ordering::less);
  EXPECT_EQ(grevlex_compare(L({0, 1}), L({1, 0})), std::strong_ordering::greater);
  EXPECT_EQ(grevlex_compare(L({0, 0}), L({0, 1})), std::strong_ordering::less);
  EXPECT_EQ(grevlex_compare(L({0, 2, 1}), L({0, 2, 1})), std::strong_ordering::equal);
  EXPECT_THROW(grevlex_compare(L({0}), L({0, 0})), PreconditionError);
}

TEST(Grevlex, MinSearchExamples) {
  EXPECT_EQ(grevlex_min_search(UnitIntervalOrder::antichain(3)), L({0, 0, 0}));
  EXPECT_EQ(grevlex_min_search(U({0, 1, 1, 2})), L({0, 1, 2, 1}));
  EXPECT_EQ(grevlex_min_search(UnitIntervalOrder::chain(3)), L({0, 1, 2}));
  EXPECT_THROW(grevlex_min_search(UnitIntervalOrder::chain(7)), CapabilityError);
  EXPECT_THROW(grevlex_min_search(UnitIntervalOrder::chain(4), 3), CapabilityError);
}

TEST(Grevlex, MinimumIsAlwaysAnAreaSequence) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& u : all_unit_interval_orders(n))
      ASSERT_FALSE(AreaSequence::violation(grevlex_min_search(u).vec()).has_value());
}

TEST(Grevlex, SpotCheckAtSix) {
  const auto orders = all_unit_interval_orders(6);
  for (std::size_t r = 0; r < orders.size(); r += 11)
    ASSERT_EQ(grevlex_min_search(orders[r]), q_map(orders[r]).listing) << r;
}

TEST(ExtensionInsertsOneLetter, UpToNine) {
  for (int n = 1; n <= 9; ++n) {
    for (const auto& u : all_unit_interval_orders(n)) {
      const auto q = q_map(u).listing.vec();
      for (int k = u.pred_of(n); k <= n; ++k) {
        const auto big = q_map(extend(u, k));
        const auto at = big.trace.positions.back();
        auto removed = big.listing.vec();
        removed.erase(removed.begin() + static_cast<std::ptrdiff_t>(at));
        ASSERT_EQ(removed, q);
        const auto pk = final_maximal_peak(word_from_area_sequence(AreaSequence(big.listing.vec())));
        ASSERT_EQ(pk->apex.y, static_cast<int>(at) + 1);
      }
    }
  }
}
