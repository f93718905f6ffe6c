#include <gtest/gtest.h>

#include <random>

#include "oscm/extensions.hpp"
#include "support/generators.hpp"
#include "support/reference.hpp"

namespace oscm {
namespace {

TEST(Osscm, TwoColoredK22CopiesOnDisjointVertices) {
  // color 0 on v0, v1 and color 1 on v2, v3, each a K_{2,2}
  const BipartiteInstance inst(4, 4,
                               {{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 0},
                                {2, 2, 1}, {2, 3, 1}, {3, 2, 1}, {3, 3, 1}},
                               2);
  for (Algo a : {Algo::bruteforce, Algo::dp, Algo::dc, Algo::qdp, Algo::qdc}) {
    EXPECT_EQ(solve_osscm(inst, a).solution.crossings, 2u) << to_string(a);
  }
  EXPECT_EQ(testing::ref_min_crossings(inst, true), 2u);
}

TEST(Osscm, CrossColorCrossingsAreFree) {
  const BipartiteInstance inst(2, 2, {{0, 1, 0}, {1, 0, 1}}, 2);
  const auto r = solve_osscm(inst, Algo::dp);
  EXPECT_EQ(r.solution.crossings, 0u);
  // both orders are optimal; the last-vertex tie-break places v0 last
  EXPECT_EQ(r.solution.ordering, (Ordering{1, 0}));
}

TEST(Osscm, SingleColorEqualsOscmAndDecomposes) {
  std::mt19937_64 rng(91);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t nv = testing::draw_between(rng, 1, 7);
    const auto plain = testing::random_instance(rng, testing::draw_between(rng, 1, 5), nv, 0.5);
    for (Algo a : {Algo::dp, Algo::dc, Algo::qdp, Algo::qdc}) {
      EXPECT_EQ(solve_osscm(plain, a).solution.crossings, solve_with(plain, a).solution.crossings);
    }
    const auto colored = testing::random_instance(rng, 4, nv, 0.4, 3);
    const auto r = solve_osscm(colored, Algo::dp);
    EXPECT_EQ(r.solution.crossings, testing::ref_min_crossings(colored, true));
    std::uint64_t per_color = 0;
    for (std::uint32_t c = 0; c < 3; ++c) {
      std::vector<Edge> only;
      for (const Edge& e : colored.edges()) {
        if (e.color == c) only.push_back({e.u, e.v, 0});
      }
      per_color += count_crossings(BipartiteInstance(4, nv, only), r.solution.ordering);
    }
    EXPECT_EQ(per_color, r.solution.crossings);
  }
}

TEST(Tlcm, SmallExamples) {
  const BipartiteInstance k22(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  EXPECT_EQ(solve_tlcm(k22).solution.crossings, 1u);
  const auto c = solve_tlcm(BipartiteInstance(2, 2, {{0, 1}, {1, 0}}));
  EXPECT_EQ(c.solution.crossings, 0u);
  EXPECT_EQ(c.pi_u, (Ordering{0, 1}));
  EXPECT_EQ(c.solution.ordering, (Ordering{1, 0}));
  const auto single = solve_tlcm(BipartiteInstance(1, 4, {{0, 0}, {0, 3}}));
  EXPECT_EQ(single.ledger.nodes, 1u);
  EXPECT_EQ(single.pi_u, (Ordering{0}));
}

TEST(Tlcm, MatchesTwoSidedBruteforce) {
  std::mt19937_64 rng(92);
  for (int trial = 0; trial < 40; ++trial) {
    const auto inst = testing::random_instance(rng, testing::draw_between(rng, 1, 4),
                                               testing::draw_between(rng, 1, 6), 0.5);
    TlcmConfig cfg;
    cfg.inner_algo = trial % 2 == 0 ? Algo::dp : Algo::qdp;
    const auto r = solve_tlcm(inst, cfg);
    const auto truth = solve_tlcm_bruteforce(inst);
    EXPECT_EQ(r.solution.crossings, truth.solution.crossings);
    EXPECT_EQ(count_crossings(inst, r.pi_u, r.solution.ordering), r.solution.crossings);
  }
}

TEST(Tlcm, EnumeratesSmallerSide) {
  const BipartiteInstance wide(5, 2, {{0, 1}, {4, 0}, {2, 1}});
  const auto r = solve_tlcm(wide);
  EXPECT_TRUE(r.enumerated_v);
  EXPECT_EQ(r.ledger.nodes, 2u);
  EXPECT_EQ(r.solution.crossings, solve_tlcm_bruteforce(wide).solution.crossings);
}

TEST(Tlcm, LedgerChargesSqrtOfPermutations) {
  const BipartiteInstance inst(3, 4, {{0, 0}, {1, 1}, {2, 2}, {0, 3}, {2, 1}});
  const auto r = solve_tlcm(inst);
  EXPECT_EQ(r.ledger.nodes, 6u);
  EXPECT_EQ(r.ledger.oracle_calls, 3u * dp_recurrence_count(4));  // ceil(sqrt(3!)) = 3
  EXPECT_EQ(r.ledger.recurrence_evals, 6u * dp_recurrence_count(4));
  EXPECT_EQ(r.ledger.to_json()["algo"], "tlcm");
}

TEST(Tlcm, Limits) {
  EXPECT_THROW(solve_tlcm(BipartiteInstance(7, 8, {})), Error);
  TlcmConfig cfg;
  cfg.inner_algo = Algo::dc;
  EXPECT_THROW(solve_tlcm(BipartiteInstance(2, 2, {}), cfg), Error);
}

TEST(Tlcm, RunningTimeModel) {
  EXPECT_NEAR(tlcm_singly_exponential_base(), 2.986, 1e-3);
  EXPECT_TRUE(tlcm_is_singly_exponential(4, 10));
  EXPECT_FALSE(tlcm_is_singly_exponential(64, 10));
  EXPECT_NEAR(tlcm_log2_time(1, 10), 10 * std::log2(1.728), 1e-12);
}

}  // namespace
}  // namespace oscm
