#include <gtest/gtest.h>

#include <random>

#include "oscm/dp.hpp"
#include "oscm/oracle.hpp"
#include "support/generators.hpp"
#include "support/reference.hpp"

namespace oscm {
namespace {

TEST(Dp, SmallExamples) {
  EXPECT_EQ(solve_dp(BipartiteInstance(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}})).solution.crossings, 1u);
  const auto c = solve_dp(BipartiteInstance(2, 2, {{0, 1}, {1, 0}}));
  EXPECT_EQ(c.solution.crossings, 0u);
  EXPECT_EQ(c.solution.ordering, (Ordering{1, 0}));
  const auto one = solve_dp(BipartiteInstance(3, 1, {{0, 0}, {2, 0}}));
  EXPECT_EQ(one.solution.crossings, 0u);
  EXPECT_EQ(one.solution.ordering, (Ordering{0}));
  EXPECT_TRUE(solve_dp(BipartiteInstance(2, 0, {})).solution.ordering.empty());
}

TEST(Dp, OptOfSubset) {
  const auto r = solve_dp(BipartiteInstance(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  EXPECT_EQ(opt_of_subset(r.table, VertexSubset{}), 0u);
  EXPECT_EQ(opt_of_subset(r.table, VertexSubset::full(2)), 1u);
  EXPECT_EQ(opt_of_subset(r.table, VertexSubset::singleton(1)), 0u);
  EXPECT_THROW(opt_of_subset(r.table, VertexSubset::singleton(5)), Error);
}

TEST(Dp, MissingSubsetInSparseTableIsInternalError) {
  const auto inst = BipartiteInstance(2, 5, {{0, 0}, {1, 4}});
  CostLedger ledger;
  const auto table = build_dp_table(build_crossing_matrix(inst), {2, false}, ledger);
  EXPECT_FALSE(table.dense());
  EXPECT_EQ(table.entries(), 1u + 5u + 10u);
  try {
    opt_of_subset(table, VertexSubset::full(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::internal);
  }
}

TEST(Dp, OracleEquivalence) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t nv = testing::draw_between(rng, 1, 8);
    const auto inst = testing::random_instance(rng, testing::draw_between(rng, 1, 6), nv,
                                               trial % 3 == 0 ? 0.2 : trial % 3 == 1 ? 0.5 : 0.8);
    const auto r = solve_dp(inst);
    EXPECT_EQ(r.solution.crossings, solve_bruteforce(inst).crossings);
    EXPECT_EQ(testing::ref_crossings(inst, r.solution.ordering), r.solution.crossings);
  }
}

TEST(Dp, SplitSizeIndependence) {
  // OPT(S) = min over |W| = k of OPT(W) + OPT(S \ W) + gamma(W, S \ W) for every k
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t nv = testing::draw_between(rng, 3, 9);
    const auto inst = testing::random_instance(rng, 5, nv, 0.5);
    const auto cm = build_crossing_matrix(inst);
    const auto r = solve_dp(inst);
    for (int pick = 0; pick < 5; ++pick) {
      VertexSubset s = testing::random_subset(rng, nv, 0.7);
      if (s.size() < 3) s = VertexSubset::full(nv);
      const MemberList members(s);
      for (std::size_t k = 1; k < s.size(); ++k) {
        Crossings best = ~Crossings{0};
        for (std::uint64_t m = low_bits(k); m != 0; m = next_combination(m, s.size())) {
          const VertexSubset w = deposit(m, members);
          best = std::min(best, opt_of_subset(r.table, w) + opt_of_subset(r.table, s - w) +
                                    gamma(cm, w, s - w));
        }
        EXPECT_EQ(best, opt_of_subset(r.table, s)) << "k=" << k;
      }
      EXPECT_EQ(cm.cost_of(r.table.order(s)), opt_of_subset(r.table, s));
    }
  }
}

TEST(Dp, LedgerClosedForm) {
  std::mt19937_64 rng(33);
  for (std::size_t n = 0; n <= 14; ++n) {
    const auto r = solve_dp(testing::random_instance(rng, 4, n, 0.5));
    std::uint64_t expected = 0;
    for (std::size_t s = 2; s <= n; ++s) expected += testing::ref_binomial(n, s) * s;
    EXPECT_EQ(r.ledger.recurrence_evals, expected) << n;
    EXPECT_EQ(r.ledger.gamma_evals, expected);
    EXPECT_EQ(r.ledger.nodes, std::uint64_t{1} << n);
    EXPECT_EQ(dp_recurrence_count(n), expected);
    if (n >= 1) EXPECT_EQ(expected, n * (std::uint64_t{1} << (n - 1)) - n);
  }
}

TEST(Dp, LedgerJsonSchema) {
  const auto r = solve_dp(BipartiteInstance(2, 3, {{0, 0}, {1, 2}}));
  const auto j = r.ledger.to_json();
  EXPECT_EQ(j.dump(), R"({"algo":"dp","n_v":3,"recurrence_evals":9,"gamma_evals":9})");
}

TEST(Dp, SizeLimits) {
  EXPECT_THROW(solve_dp(BipartiteInstance(1, 65, {})), Error);
  try {
    solve_dp(BipartiteInstance(1, kMaxDenseDpVertices + 1, {}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::size_limit);
  }
}

}  // namespace
}  // namespace oscm
