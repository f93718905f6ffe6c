#pragma once

/**
 * Quantum minimum finding over an indexed domain [0, N).
 *
 * cost_model    Evaluates every index classically and returns the exact
 *               argmin (smallest index on ties), charging
 *               ceil(call_constant * sqrt(N)) oracle applications.
 *
 * state_vector  Runs Durr-Hoyer: repeated Grover searches for an index whose
 *               value is strictly below the current threshold, on an explicit
 *               real amplitude vector of size 2^ceil(log2 N). The result is
 *               sampled and correct with probability at least 1/2. Charged
 *               calls are the Grover iterations actually applied plus one
 *               value lookup per threshold comparison.
 */

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "oscm/error.hpp"
#include "oscm/subset.hpp"

namespace oscm {

enum class QmfMode { cost_model, state_vector };

enum class GroverSchedule {
  known_count,           // ceil(pi/4 * sqrt(M / t)) iterations for t marked items
  exponential_guessing,  // randomized schedule for an unknown number of marked items
};

struct QmfConfig {
  QmfMode mode = QmfMode::cost_model;
  double call_constant = 1.0;
  std::uint64_t seed = 0;
  std::size_t max_statevector_domain = 1024;
  GroverSchedule schedule = GroverSchedule::known_count;

  void validate() const {
    if (!(call_constant > 0.0)) fail(ErrorCode::invalid_argument, "call_constant must be positive");
    if (max_statevector_domain == 0 ||
        (max_statevector_domain & (max_statevector_domain - 1)) != 0) {
      fail(ErrorCode::invalid_argument, "max_statevector_domain must be a power of two");
    }
  }
};

template <typename Value>
struct QmfResult {
  std::uint64_t argmin_index = 0;
  Value min_value{};
  std::uint64_t oracle_calls = 0;
  bool success_flag = true;

  // state_vector diagnostics
  std::vector<std::uint64_t> thresholds;  // successive threshold indices
  double max_norm_drift = 0.0;            // max | ||psi||^2 - 1 | after any iteration
  std::uint64_t grover_iterations = 0;
};

// ceil(c * sqrt(N)), exact for c == 1.
inline std::uint64_t qmf_call_charge(std::uint64_t domain_size, double call_constant = 1.0) {
  if (call_constant == 1.0) return ceil_sqrt(domain_size);
  const long double x = static_cast<long double>(call_constant) *
                        std::sqrt(static_cast<long double>(domain_size));
  return static_cast<std::uint64_t>(std::ceil(x - 1e-12L));
}

// Budget of Grover iterations after which Durr-Hoyer stops: the
// 22.5 sqrt(N) + 1.4 log2(N)^2 bound for success probability >= 1/2.
inline std::uint64_t durr_hoyer_budget(std::uint64_t domain_size) {
  const double n = static_cast<double>(domain_size);
  const double lg = std::log2(std::max(n, 1.0));
  return static_cast<std::uint64_t>(std::ceil(22.5 * std::sqrt(n) + 1.4 * lg * lg));
}

// Amplitude vector of a register holding a search domain, padded to a power
// of two. Amplitudes stay real under oracle phase flips and diffusion.
class GroverRegister {
 public:
  explicit GroverRegister(std::size_t size) : amp_(size, 0.0) {}

  std::size_t size() const noexcept { return amp_.size(); }
  double amplitude(std::size_t i) const noexcept { return amp_[i]; }

  void prepare_uniform() {
    const double a = 1.0 / std::sqrt(static_cast<double>(amp_.size()));
    for (double& x : amp_) x = a;
  }

  // One Grover iterate: phase flip on marked states, then inversion about the mean.
  void iterate(const std::vector<bool>& marked) {
    for (std::size_t i = 0; i < amp_.size(); ++i) {
      if (marked[i]) amp_[i] = -amp_[i];
    }
    double mean = 0.0;
    for (double x : amp_) mean += x;
    mean /= static_cast<double>(amp_.size());
    for (double& x : amp_) x = 2.0 * mean - x;
  }

  double norm_squared() const noexcept {
    double s = 0.0;
    for (double x : amp_) s += x * x;
    return s;
  }

  std::size_t measure(std::mt19937_64& rng) const {
    std::uniform_real_distribution<double> dist(0.0, norm_squared());
    double r = dist(rng);
    for (std::size_t i = 0; i < amp_.size(); ++i) {
      r -= amp_[i] * amp_[i];
      if (r <= 0.0) return i;
    }
    return amp_.size() - 1;
  }

 private:
  std::vector<double> amp_;
};

namespace detail {

inline std::size_t next_power_of_two(std::uint64_t n) {
  std::size_t m = 1;
  while (m < n) m <<= 1;
  return m;
}

template <typename Value>
QmfResult<Value> durr_hoyer(const std::vector<Value>& values, const QmfConfig& cfg) {
  const std::uint64_t n = values.size();
  const std::size_t m = next_power_of_two(n);
  std::mt19937_64 rng(cfg.seed);
  QmfResult<Value> res;

  std::uint64_t y = std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng);
  res.thresholds.push_back(y);
  std::uint64_t lookups = 1;

  const std::uint64_t budget = durr_hoyer_budget(n);
  std::uint64_t spent = 0;
  double guess = 1.0;  // exponential_guessing state
  constexpr double kGrowth = 6.0 / 5.0;
  const double sqrt_m = std::sqrt(static_cast<double>(m));

  GroverRegister reg(m);
  std::vector<bool> marked(m, false);
  while (spent < budget) {
    std::size_t t = 0;
    for (std::size_t i = 0; i < m; ++i) {
      marked[i] = i < n && values[i] < values[y];
      t += marked[i] ? 1 : 0;
    }
    std::uint64_t rounds = 0;
    if (cfg.schedule == GroverSchedule::known_count) {
      rounds = static_cast<std::uint64_t>(std::ceil(
          std::numbers::pi / 4.0 * std::sqrt(static_cast<double>(m) / static_cast<double>(std::max<std::size_t>(1, t)))));
    } else {
      rounds = std::uniform_int_distribution<std::uint64_t>(
          0, static_cast<std::uint64_t>(std::ceil(guess)) - 1)(rng);
    }
    rounds = std::min(rounds, budget - spent);

    reg.prepare_uniform();
    for (std::uint64_t r = 0; r < rounds; ++r) {
      reg.iterate(marked);
      res.max_norm_drift = std::max(res.max_norm_drift, std::abs(reg.norm_squared() - 1.0));
    }
    res.grover_iterations += rounds;
    // a zero-iteration round still consumes one step so the loop terminates
    spent += std::max<std::uint64_t>(rounds, 1);

    const std::size_t x = reg.measure(rng);
    ++lookups;
    if (x < n && values[x] < values[y]) {
      y = x;
      res.thresholds.push_back(y);
      guess = 1.0;
    } else {
      guess = std::min(guess * kGrowth, sqrt_m);
    }
  }

  res.argmin_index = y;
  res.min_value = values[y];
  res.oracle_calls = res.grover_iterations + lookups;
  return res;
}

}  // namespace detail

template <typename ValueFn>
auto qmf(std::uint64_t domain_size, ValueFn&& value_fn, const QmfConfig& cfg)
    -> QmfResult<std::decay_t<std::invoke_result_t<ValueFn&, std::uint64_t>>> {
  using Value = std::decay_t<std::invoke_result_t<ValueFn&, std::uint64_t>>;
  cfg.validate();
  if (domain_size == 0) fail(ErrorCode::invalid_argument, "qmf needs a non-empty domain");

  if (cfg.mode == QmfMode::cost_model) {
    QmfResult<Value> res;
    res.min_value = value_fn(std::uint64_t{0});
    for (std::uint64_t i = 1; i < domain_size; ++i) {
      Value v = value_fn(i);
      if (v < res.min_value) {
        res.min_value = std::move(v);
        res.argmin_index = i;
      }
    }
    res.oracle_calls = qmf_call_charge(domain_size, cfg.call_constant);
    return res;
  }

  if (domain_size > cfg.max_statevector_domain) {
    fail(ErrorCode::size_limit, "state-vector qmf limited to domains of " +
                                    std::to_string(cfg.max_statevector_domain) + ", got " +
                                    std::to_string(domain_size));
  }
  std::vector<Value> values;
  values.reserve(domain_size);
  for (std::uint64_t i = 0; i < domain_size; ++i) values.push_back(value_fn(i));
  QmfResult<Value> res = detail::durr_hoyer(values, cfg);
  Value true_min = values[0];
  for (const Value& v : values) {
    if (v < true_min) true_min = v;
  }
  res.success_flag = !(true_min < res.min_value);
  return res;
}

// Fraction of trials in which state-vector qmf finds the minimum of a fresh
// random array of the given size.
inline double qmf_success_rate(std::size_t trials, std::uint64_t domain_size, QmfConfig cfg) {
  if (trials == 0) fail(ErrorCode::invalid_argument, "trials must be at least 1");
  cfg.mode = QmfMode::state_vector;
  std::mt19937_64 data_rng(cfg.seed ^ 0x9E3779B97F4A7C15ULL);
  const std::uint64_t base_seed = cfg.seed;
  std::size_t hits = 0;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::vector<std::uint64_t> values(domain_size);
    std::uniform_int_distribution<std::uint64_t> dist(0, 4 * domain_size);
    for (auto& v : values) v = dist(data_rng);
    cfg.seed = base_seed + trial;
    const auto res = qmf(domain_size, [&](std::uint64_t i) { return values[i]; }, cfg);
    hits += res.success_flag ? 1 : 0;
  }
  return static_cast<double>(hits) / static_cast<double>(trials);
}

}  // namespace oscm
