#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oscm/subset.hpp"
#include "support/reference.hpp"

namespace oscm {
namespace {

TEST(VertexSubset, SetAlgebra) {
  const auto a = VertexSubset::of(std::vector<Vertex>{0, 2, 5});
  const auto b = VertexSubset::of(std::vector<Vertex>{2, 3});
  EXPECT_EQ(a.size(), 3u);
  EXPECT_TRUE(a.contains(5));
  EXPECT_FALSE(a.contains(1));
  EXPECT_EQ((a | b).size(), 4u);
  EXPECT_EQ((a & b), VertexSubset::singleton(2));
  EXPECT_EQ((a - b).members(), (std::vector<Vertex>{0, 5}));
  EXPECT_TRUE(a.intersects(b));
  EXPECT_TRUE((a & b).is_subset_of(a));
  EXPECT_EQ(a.first(), 0u);
  EXPECT_EQ(a.without(0).first(), 2u);
  EXPECT_EQ(a.to_string(), "{0,2,5}");
}

TEST(VertexSubset, FullCoversExactlyN) {
  EXPECT_TRUE(VertexSubset::full(0).empty());
  EXPECT_EQ(VertexSubset::full(7).bits(), 0x7Fu);
  EXPECT_EQ(VertexSubset::full(64).size(), 64u);
}

TEST(Combinatorics, BinomialMatchesPascal) {
  for (std::size_t n = 0; n <= 62; n += 3) {
    for (std::size_t k = 0; k <= n; ++k) EXPECT_EQ(binomial(n, k), testing::ref_binomial(n, k));
  }
  EXPECT_EQ(binomial(5, 7), 0u);
}

TEST(Combinatorics, CeilSqrt) {
  for (std::uint64_t x : {0ull, 1ull, 2ull, 3ull, 4ull, 8ull, 15ull, 16ull, 17ull, 184756ull,
                          (1ull << 62) + 1}) {
    EXPECT_EQ(ceil_sqrt(x), testing::ref_ceil_sqrt(x)) << x;
  }
}

TEST(Combinatorics, CheckedArithmeticThrowsOnOverflow) {
  EXPECT_THROW(checked_mul(1ull << 40, 1ull << 40), Error);
  EXPECT_THROW(checked_add(~0ull, 1), Error);
  EXPECT_EQ(checked_mul(3, 7), 21u);
}

TEST(Combinatorics, UnrankFollowsGosperOrder) {
  for (std::size_t s : {1u, 5u, 9u}) {
    for (std::size_t k = 1; k <= s; ++k) {
      std::uint64_t mask = low_bits(k);
      std::set<std::uint64_t> seen;
      for (std::uint64_t i = 0; i < binomial(s, k); ++i) {
        EXPECT_EQ(unrank_combination(i, s, k), mask);
        seen.insert(mask);
        mask = next_combination(mask, s);
      }
      EXPECT_EQ(mask, 0u);
      EXPECT_EQ(seen.size(), binomial(s, k));
    }
  }
}

TEST(Combinatorics, DepositMapsLocalBitsToMembers) {
  const auto universe = VertexSubset::of(std::vector<Vertex>{1, 4, 6, 9});
  const MemberList members(universe);
  EXPECT_EQ(deposit(0b1010, members), VertexSubset::of(std::vector<Vertex>{4, 9}));
  EXPECT_EQ(deposit(0, members), VertexSubset{});
}

}  // namespace
}  // namespace oscm
