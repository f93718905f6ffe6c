#include <gtest/gtest.h>

#include <random>

#include "oscm/qmf.hpp"

namespace oscm {
namespace {

QmfConfig state_vector(std::uint64_t seed) {
  QmfConfig cfg;
  cfg.mode = QmfMode::state_vector;
  cfg.seed = seed;
  return cfg;
}

TEST(QmfCostModel, ExampleArray) {
  const std::vector<int> values{5, 2, 7, 1, 9, 0, 3, 8};
  const auto r = qmf(values.size(), [&](std::uint64_t i) { return values[i]; }, QmfConfig{});
  EXPECT_EQ(r.argmin_index, 5u);
  EXPECT_EQ(r.min_value, 0);
  EXPECT_EQ(r.oracle_calls, 3u);
  EXPECT_TRUE(r.success_flag);
}

TEST(QmfCostModel, TiesGoToSmallestIndex) {
  const auto r = qmf(9, [](std::uint64_t) { return 4; }, QmfConfig{});
  EXPECT_EQ(r.argmin_index, 0u);
  const std::vector<int> v{3, 1, 2, 1};
  EXPECT_EQ(qmf(4, [&](std::uint64_t i) { return v[i]; }, QmfConfig{}).argmin_index, 1u);
}

TEST(QmfCostModel, ChargeIsValueIndependent) {
  std::mt19937_64 rng(51);
  for (std::uint64_t n : {1u, 2u, 3u, 16u, 17u, 100u, 184756u}) {
    QmfConfig cfg;
    std::vector<std::uint64_t> v(n);
    for (auto& x : v) x = rng() % 50;
    const auto r = qmf(n, [&](std::uint64_t i) { return v[i]; }, cfg);
    std::uint64_t r2 = 0;
    while (r2 * r2 < n) ++r2;
    EXPECT_EQ(r.oracle_calls, r2);
    EXPECT_EQ(r.min_value, *std::min_element(v.begin(), v.end()));
    cfg.call_constant = 2.5;
    EXPECT_EQ(qmf(n, [&](std::uint64_t i) { return v[i]; }, cfg).oracle_calls,
              static_cast<std::uint64_t>(std::ceil(2.5 * std::sqrt(double(n)) - 1e-12)));
  }
}

TEST(QmfCostModel, InvalidConfig) {
  QmfConfig cfg;
  cfg.call_constant = 0;
  EXPECT_THROW(qmf(2, [](std::uint64_t i) { return i; }, cfg), Error);
  cfg = {};
  cfg.max_statevector_domain = 1000;
  EXPECT_THROW(qmf(2, [](std::uint64_t i) { return i; }, cfg), Error);
  EXPECT_THROW(qmf(0, [](std::uint64_t i) { return i; }, QmfConfig{}), Error);
}

TEST(QmfStateVector, SingletonDomain) {
  const auto r = qmf(1, [](std::uint64_t) { return 7; }, state_vector(3));
  EXPECT_EQ(r.argmin_index, 0u);
  EXPECT_GE(r.oracle_calls, 1u);
  EXPECT_TRUE(r.success_flag);
  EXPECT_EQ(qmf_success_rate(10, 1, state_vector(1)), 1.0);
}

TEST(QmfStateVector, DomainCap) {
  QmfConfig cfg = state_vector(0);
  cfg.max_statevector_domain = 64;
  try {
    qmf(65, [](std::uint64_t i) { return i; }, cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::size_limit);
  }
}

TEST(QmfStateVector, ThresholdsDecreaseAndNormIsPreserved) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<int> v(1 + rng() % 40);
    for (int& x : v) x = static_cast<int>(rng() % 100);
    const auto r = qmf(v.size(), [&](std::uint64_t i) { return v[i]; }, state_vector(trial));
    for (std::size_t i = 1; i < r.thresholds.size(); ++i) {
      EXPECT_LT(v[r.thresholds[i]], v[r.thresholds[i - 1]]);
    }
    EXPECT_EQ(r.thresholds.back(), r.argmin_index);
    EXPECT_LT(r.max_norm_drift, 1e-9);
    // every accepted threshold was one lookup
    EXPECT_GE(r.oracle_calls, r.grover_iterations + r.thresholds.size());
    EXPECT_LE(r.grover_iterations, durr_hoyer_budget(v.size()));
  }
}

TEST(QmfStateVector, BoundedErrorRates) {
  EXPECT_GE(qmf_success_rate(100, 16, state_vector(7)), 0.5);
  EXPECT_GE(qmf_success_rate(100, 2, state_vector(8)), 0.5);
  QmfConfig guessing = state_vector(9);
  guessing.schedule = GroverSchedule::exponential_guessing;
  EXPECT_GE(qmf_success_rate(100, 16, guessing), 0.5);
}

TEST(GroverRegister, SingleMarkedItemAmplified) {
  GroverRegister reg(16);
  reg.prepare_uniform();
  std::vector<bool> marked(16, false);
  marked[11] = true;
  for (int i = 0; i < 3; ++i) reg.iterate(marked);  // floor(pi/4 * 4) = 3
  EXPECT_GT(reg.amplitude(11) * reg.amplitude(11), 0.95);
  EXPECT_NEAR(reg.norm_squared(), 1.0, 1e-12);
}

}  // namespace
}  // namespace oscm
