#include <gtest/gtest.h>

#include <random>

#include "oscm/dp.hpp"
#include "oscm/oracle.hpp"
#include "oscm/qdp.hpp"
#include "support/generators.hpp"
#include "support/reference.hpp"

namespace oscm {
namespace {

// Test-local model of the nested search: (oracle calls, table reads).
std::pair<std::uint64_t, std::uint64_t> ref_qdp_calls(std::size_t n, double alpha, std::size_t t,
                                                      std::size_t s, std::size_t level) {
  if (s <= t) return {0, 1};
  std::size_t k = 0;
  if (level == 0) k = (n + 1) / 2;
  if (level == 1) k = (n + 3) / 4;
  if (level == 2) k = static_cast<std::size_t>(std::ceil(alpha * static_cast<double>(n) / 4.0 - 1e-9));
  if (level >= 3) k = (s + 1) / 2;
  k = std::max<std::size_t>(1, std::min(k, s - 1));
  const std::uint64_t calls = testing::ref_ceil_sqrt(testing::ref_binomial(s, k));
  const auto a = ref_qdp_calls(n, alpha, t, k, level + 1);
  const auto b = ref_qdp_calls(n, alpha, t, s - k, level + 1);
  return {calls * (1 + a.first + b.first), calls * (a.second + b.second)};
}

TEST(QdpThreshold, Values) {
  EXPECT_EQ(precompute_threshold(16, kBalancedAlpha), 4u);
  EXPECT_EQ(precompute_threshold(40, kBalancedAlpha), 10u);
  EXPECT_EQ(precompute_threshold(1, kBalancedAlpha), 1u);
  for (std::size_t n = 1; n <= 64; ++n) {
    EXPECT_EQ(precompute_threshold(n, 0.5), (n + 7) / 8) << n;
    const std::size_t t = precompute_threshold(n, kBalancedAlpha);
    EXPECT_GE(t, 1u);
    EXPECT_LE(t, n);
  }
}

TEST(Qdp, SmallExamples) {
  EXPECT_EQ(solve_qdp(BipartiteInstance(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}})).solution.crossings, 1u);
  const auto small = solve_qdp(BipartiteInstance(3, 5, {{0, 4}, {2, 0}, {1, 1}}));
  EXPECT_TRUE(small.classical_fallback);
  EXPECT_EQ(small.ledger.oracle_calls, 0u);
  EXPECT_EQ(small.ledger.to_json().dump(),
            R"({"algo":"qdp","alpha":0.055362,"classical_evals":80,"oracle_calls":0,"table_reads":1})");
}

TEST(Qdp, OracleEquivalence) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t nv = testing::draw_between(rng, 1, 9);
    const auto inst = testing::random_instance(rng, testing::draw_between(rng, 1, 6), nv, 0.5);
    QdpConfig cfg;
    cfg.alpha = trial % 2 == 0 ? kBalancedAlpha : 0.3;
    cfg.min_quantum_n = trial % 3 == 0 ? 8 : 2;
    const auto r = solve_qdp(inst, cfg);
    EXPECT_EQ(r.solution.crossings, solve_bruteforce(inst).crossings);
    EXPECT_EQ(count_crossings(inst, r.solution.ordering), r.solution.crossings);
  }
}

TEST(Qdp, MatchesDpUpToSixteen) {
  std::mt19937_64 rng(62);
  for (std::size_t nv : {10u, 12u, 14u, 16u}) {
    const auto inst = testing::random_instance(rng, 8, nv, 0.4);
    const auto r = solve_qdp(inst);
    EXPECT_FALSE(r.classical_fallback);
    EXPECT_EQ(r.solution.crossings, solve_dp(inst).solution.crossings);
    EXPECT_EQ(r.reported_value, r.solution.crossings);
  }
}

TEST(Qdp, LedgerMatchesCostModel) {
  std::mt19937_64 rng(63);
  for (double alpha : {kBalancedAlpha, 0.2, 0.5}) {
    for (std::size_t n = 1; n <= 14; ++n) {
      QdpConfig cfg;
      cfg.alpha = alpha;
      const auto r = solve_qdp(testing::random_instance(rng, 5, n, 0.5), cfg);
      const QdpCost model = qdp_cost_model(n, cfg);
      EXPECT_EQ(r.ledger.recurrence_evals, model.classical_cost) << n << " " << alpha;
      EXPECT_EQ(r.ledger.oracle_calls, model.quantum_calls) << n << " " << alpha;
      EXPECT_EQ(r.ledger.table_reads, model.table_reads) << n << " " << alpha;
      EXPECT_EQ(r.quantum_levels, model.quantum_levels);
    }
  }
  QdpConfig cfg;
  const auto r16 = solve_qdp(testing::random_instance(rng, 6, 16, 0.5), cfg);
  EXPECT_EQ(r16.ledger.oracle_calls, qdp_cost_model(16, cfg).quantum_calls);
}

TEST(QdpCostModel, IndependentRecurrence) {
  for (double alpha : {kBalancedAlpha, 0.125, 0.5}) {
    for (std::size_t n = 8; n <= 48; ++n) {
      QdpConfig cfg;
      cfg.alpha = alpha;
      const std::size_t t = precompute_threshold(n, alpha);
      if (t >= n) continue;
      const auto model = qdp_cost_model(n, cfg);
      const auto ref = ref_qdp_calls(n, alpha, t, n, 0);
      EXPECT_EQ(model.quantum_calls, ref.first) << n;
      EXPECT_EQ(model.table_reads, ref.second) << n;
      std::uint64_t classical = 0;
      for (std::size_t i = 1; i <= t; ++i) classical += testing::ref_binomial(n, i) * i;
      EXPECT_EQ(model.classical_cost, classical);
    }
  }
  const auto one = qdp_cost_model(1);
  EXPECT_EQ(one.quantum_calls, 0u);
  EXPECT_EQ(one.quantum_levels, 0u);
}

TEST(QdpCostModel, CallConstantScalesCalls) {
  QdpConfig cfg;
  cfg.qmf.call_constant = 2.0;
  EXPECT_GT(qdp_cost_model(24, cfg).quantum_calls, 2 * qdp_cost_model(24).quantum_calls);
}

TEST(Qdp, AlphaEndpointsChangeNestingDepth) {
  QdpConfig tiny;
  tiny.alpha = 1e-6;
  QdpConfig half;
  half.alpha = 0.5;
  for (std::size_t n : {16u, 24u, 32u, 40u}) {
    // the level-1 halves already fit in the table
    EXPECT_EQ(qdp_cost_model(n, tiny).quantum_levels, 2u) << n;
    EXPECT_EQ(qdp_cost_model(n, half).quantum_levels, 3u) << n;
  }
  EXPECT_EQ(qdp_split_size(40, kBalancedAlpha, 2, 10), 1u);
  EXPECT_EQ(qdp_split_size(40, 0.5, 2, 10), 5u);
}

TEST(Qdp, LeafOrdersConcatenate) {
  std::mt19937_64 rng(64);
  const auto inst = testing::random_instance(rng, 6, 12, 0.5);
  QdpConfig cfg;
  cfg.alpha = 0.5;
  const auto r = solve_qdp(inst, cfg);
  EXPECT_EQ(r.quantum_levels, 3u);
  VertexSubset seen;
  std::size_t offset = 0;
  for (VertexSubset leaf : r.leaf_sets) {
    EXPECT_FALSE(leaf.intersects(seen));
    EXPECT_LE(leaf.size(), r.threshold);
    seen = seen | leaf;
    const Ordering block(r.solution.ordering.begin() + static_cast<std::ptrdiff_t>(offset),
                         r.solution.ordering.begin() + static_cast<std::ptrdiff_t>(offset + leaf.size()));
    EXPECT_EQ(VertexSubset::of(block), leaf);
    offset += leaf.size();
  }
  EXPECT_EQ(seen, VertexSubset::full(12));
  EXPECT_EQ(r.leaf_sets.size(), 8u);
  EXPECT_EQ(r.solution.crossings, solve_dp(inst).solution.crossings);
}

TEST(Qdp, StateVectorMode) {
  std::mt19937_64 rng(65);
  int exact = 0;
  for (int trial = 0; trial < 6; ++trial) {
    const auto inst = testing::random_instance(rng, 5, 9, 0.5);
    QdpConfig cfg;
    cfg.qmf.mode = QmfMode::state_vector;
    cfg.qmf.seed = 100 + trial;
    const auto r = solve_qdp(inst, cfg);
    const auto opt = solve_dp(inst).solution.crossings;
    EXPECT_GE(r.solution.crossings, opt);
    EXPECT_EQ(count_crossings(inst, r.solution.ordering), r.solution.crossings);
    exact += r.solution.crossings == opt ? 1 : 0;
  }
  EXPECT_GE(exact, 3);
  QdpConfig cfg;
  cfg.qmf.mode = QmfMode::state_vector;
  EXPECT_THROW(solve_qdp(BipartiteInstance(1, 13, {}), cfg), Error);
}

TEST(Qdp, InvalidAlpha) {
  QdpConfig cfg;
  cfg.alpha = 0.0;
  EXPECT_THROW(solve_qdp(BipartiteInstance(1, 3, {}), cfg), Error);
  cfg.alpha = 0.6;
  EXPECT_THROW(qdp_cost_model(10, cfg), Error);
}

}  // namespace
}  // namespace oscm
