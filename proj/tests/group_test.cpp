#include "fusionlab/catalog.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace fusionlab;

namespace {

std::size_t involutions(const FiniteGroup& g) { return order_census(g).count(2) ? order_census(g).at(2) : 0; }

}  // namespace

TEST(PermutationClosure, SymmetricGroupOnThreePoints) {
  auto g = from_permutation_generators(3, {{1, 2, 0}, {1, 0, 2}});
  EXPECT_EQ(g.order(), 6u);
  EXPECT_FALSE(g.is_abelian());
}

TEST(PermutationClosure, EmptyGeneratorListGivesTrivialGroup) {
  auto g = from_permutation_generators(1, {});
  EXPECT_EQ(g.order(), 1u);
  EXPECT_EQ(g.mul(0, 0), 0u);
}

TEST(PermutationClosure, QuaternionRegularRepresentation) {
  auto g = from_permutation_generators(8, {{2, 3, 1, 0, 6, 7, 5, 4}, {4, 5, 7, 6, 1, 0, 2, 3}});
  EXPECT_EQ(g.order(), 8u);
  EXPECT_EQ(involutions(g), 1u);
}

TEST(PermutationClosure, IdentityIsIndexZero) {
  auto g = catalog("S4");
  EXPECT_EQ(g.permutation(0), identity_permutation(g.degree()));
}

TEST(PermutationClosure, RejectsNonBijection) {
  EXPECT_THROW(from_permutation_generators(3, {{0, 0, 1}}), InvalidPermutation);
}

TEST(PermutationClosure, RespectsElementCap) {
  EXPECT_THROW(from_permutation_generators(6, {{1, 2, 3, 4, 5, 0}, {1, 0, 2, 3, 4, 5}}, {}, 100), GroupTooLarge);
}

TEST(DirectProduct, KleinGroup) {
  auto g = direct_product(groups::cyclic(2), groups::cyclic(2));
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(involutions(g), 3u);
}

TEST(DirectProduct, SymmetricTimesC2) {
  auto g = direct_product(catalog("S3"), groups::cyclic(2));
  EXPECT_EQ(g.order(), 12u);
  EXPECT_EQ(involutions(g), 7u);
}

TEST(DirectProduct, QuaternionTimesC2) {
  auto g = direct_product(catalog("Q8"), groups::cyclic(2));
  EXPECT_EQ(g.order(), 16u);
  EXPECT_EQ(g.exponent(), 4u);
}

TEST(DirectProduct, TrivialFactorKeepsIndices) {
  for (const auto& key : {"S3", "D8", "A4", "Q8"}) {
    auto g = catalog(key);
    auto h = direct_product(g, groups::trivial());
    ASSERT_EQ(h.order(), g.order());
    for (Element a = 0; a < g.order(); ++a)
      for (Element b = 0; b < g.order(); ++b) EXPECT_EQ(h.mul(a, b), g.mul(a, b));
  }
}

TEST(Catalog, DihedralEight) {
  auto g = catalog("D8");
  EXPECT_EQ(g.order(), 8u);
  EXPECT_EQ(g.exponent(), 4u);
  EXPECT_EQ(involutions(g), 5u);
  EXPECT_EQ(involutions(catalog("Q8")), 1u);
}

TEST(Catalog, DicyclicPresentation) {
  auto g = catalog("C3:C4");
  EXPECT_EQ(g.order(), 12u);
  auto x = g.word("x"), y = g.word("y");
  EXPECT_EQ(g.power(x, 3), 0u);
  EXPECT_EQ(g.power(y, 4), 0u);
  EXPECT_EQ(g.mul(g.mul(g.inverse(y), x), y), g.inverse(x));
}

TEST(Catalog, HeisenbergPresentation) {
  auto g = catalog("Heis27");
  EXPECT_EQ(g.order(), 27u);
  EXPECT_EQ(g.exponent(), 3u);
  EXPECT_FALSE(g.is_abelian());
  auto x = g.word("x"), y = g.word("y"), z = g.word("z");
  EXPECT_EQ(g.mul(z, x), g.mul(x, z));
  EXPECT_EQ(g.mul(y, x), g.mul(x, y));
  EXPECT_EQ(g.mul(g.mul(g.inverse(z), y), z), g.mul(x, y));
}

TEST(Catalog, SemidirectOrderEighteenPresentation) {
  auto g = catalog("C3^2:C2");
  auto x = g.word("x"), y = g.word("y"), z = g.word("z");
  EXPECT_EQ(g.mul(x, y), g.mul(y, x));
  EXPECT_EQ(g.mul(g.mul(z, x), z), g.inverse(x));
  EXPECT_EQ(g.mul(g.mul(z, y), z), g.inverse(y));
}

TEST(Catalog, EveryEntryValidatesWithDeclaredOrderAndExponent) {
  for (const auto& e : catalog_entries()) {
    auto g = e.build();
    EXPECT_EQ(g.order(), e.order) << e.key;
    EXPECT_EQ(g.exponent(), e.exponent) << e.key;
    EXPECT_TRUE(g.validate().empty()) << e.key;
  }
}

TEST(Catalog, KeysIncludeWitnessGroups) {
  auto keys = catalog_keys();
  for (const auto& k : {"S3", "D8", "A4", "Q8", "C3:C4", "Heis27", "C3^2:C2", "S3xC3", "C2^2xS3", "C3:C4xC2", "SL(2,3)", "S4", "D12"})
    EXPECT_NE(std::find(keys.begin(), keys.end(), k), keys.end()) << k;
  EXPECT_THROW(catalog("nope"), CatalogMiss);
}

TEST(ElementOrders, SmallCases) {
  EXPECT_EQ(element_orders(groups::trivial()), std::vector<std::size_t>{1});
  auto c6 = element_orders(catalog("C6"));
  std::sort(c6.begin(), c6.end());
  EXPECT_EQ(c6, (std::vector<std::size_t>{1, 2, 3, 3, 6, 6}));
  std::map<std::size_t, std::size_t> a4{{1, 1}, {2, 3}, {3, 8}};
  EXPECT_EQ(order_census(catalog("A4")), a4);
}

TEST(Words, ParsesPowersAndInverses) {
  auto g = catalog("D8");
  auto x = g.word("x"), y = g.word("y");
  EXPECT_EQ(g.word("x^3"), g.inverse(x));
  EXPECT_EQ(g.word("yx^-1"), g.mul(y, g.inverse(x)));
  EXPECT_EQ(g.word("1"), 0u);
  EXPECT_THROW(g.word("q"), WordError);
}

TEST(Cycles, ParsesOneBasedNotation) {
  auto p = parse_cycles("(12)(34)", 4);
  EXPECT_EQ(p, (Permutation{1, 0, 3, 2}));
  EXPECT_EQ(parse_cycles("()", 3), identity_permutation(3));
}
