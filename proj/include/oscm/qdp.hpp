#pragma once

/**
 * Hybrid quantum dynamic programming, simulated.
 *
 * Phase 1 stores OPT(W) and an optimal order L[W] for every W with
 * |W| <= t = ceil((1 - alpha) n / 4), built classically in increasing size.
 * Phase 2 evaluates OPT(V) through nested minimum finding over splits
 * (W, S \ W) of fixed first-side size: ceil(n/2) at the root, ceil(n/4) one
 * level down, ceil(alpha n / 4) at the third level. Any subset of size <= t is
 * a unit-cost table read. The returned order concatenates the stored orders
 * of the leaf subsets on the winning split path.
 *
 * Oracle accounting: a minimum finding over N candidates charges
 * ceil(c sqrt(N)) applications, and each application costs one call plus the
 * modeled cost of its two child subproblems.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "oscm/bigraph.hpp"
#include "oscm/dp.hpp"
#include "oscm/error.hpp"
#include "oscm/ledger.hpp"
#include "oscm/qmf.hpp"
#include "oscm/subset.hpp"

namespace oscm {

inline constexpr double kBalancedAlpha = 0.055362;
inline constexpr std::size_t kMaxQdpStateVectorVertices = 12;

struct QdpConfig {
  double alpha = kBalancedAlpha;
  QmfConfig qmf;
  std::size_t min_quantum_n = 8;  // below this n_V the plain DP is used

  void validate() const {
    if (!(alpha > 0.0 && alpha <= 0.5)) fail(ErrorCode::invalid_argument, "alpha must lie in (0, 0.5]");
    qmf.validate();
  }
};

namespace detail {
inline std::size_t ceil_real(double x) {
  return static_cast<std::size_t>(std::ceil(x - 1e-9));
}
}  // namespace detail

// Largest subset size kept in the classical table: ceil((1 - alpha) n / 4),
// clamped to [1, n].
inline std::size_t precompute_threshold(std::size_t n, double alpha) {
  if (n == 0) return 0;
  const std::size_t t = detail::ceil_real((1.0 - alpha) * static_cast<double>(n) / 4.0);
  return std::clamp<std::size_t>(t, 1, n);
}

// First-side size used when splitting a subset of size s at the given
// minimum-finding level (0 = root). Levels past the third split in half.
inline std::size_t qdp_split_size(std::size_t n, double alpha, std::size_t level, std::size_t s) {
  std::size_t k = 0;
  switch (level) {
    case 0: k = (n + 1) / 2; break;
    case 1: k = (n + 3) / 4; break;
    case 2: k = detail::ceil_real(alpha * static_cast<double>(n) / 4.0); break;
    default: k = ceil_half(s); break;
  }
  return std::clamp<std::size_t>(k, 1, s - 1);
}

// Whether the whole solve degenerates to the classical table.
inline bool qdp_is_classical(std::size_t n, const QdpConfig& cfg) {
  return n < cfg.min_quantum_n || precompute_threshold(n, cfg.alpha) >= n;
}

struct ModeledCost {
  std::uint64_t oracle_calls = 0;
  std::uint64_t table_reads = 0;

  bool operator==(const ModeledCost&) const = default;
};

struct QdpCost {
  std::uint64_t classical_cost = 0;  // phase-1 recurrence evaluations
  std::uint64_t quantum_calls = 0;
  std::uint64_t table_reads = 0;
  std::size_t quantum_levels = 0;    // deepest nesting of minimum finding
};

namespace detail {

inline ModeledCost qdp_cost_rec(std::size_t n, std::size_t t, const QdpConfig& cfg, std::size_t s,
                                std::size_t level, std::size_t& levels) {
  if (s <= t) return {0, 1};
  levels = std::max(levels, level + 1);
  const std::size_t k = qdp_split_size(n, cfg.alpha, level, s);
  const std::uint64_t calls = qmf_call_charge(binomial(s, k), cfg.qmf.call_constant);
  const ModeledCost a = qdp_cost_rec(n, t, cfg, k, level + 1, levels);
  const ModeledCost b = qdp_cost_rec(n, t, cfg, s - k, level + 1, levels);
  return {checked_mul(calls, checked_add(1, checked_add(a.oracle_calls, b.oracle_calls))),
          checked_mul(calls, checked_add(a.table_reads, b.table_reads))};
}

}  // namespace detail

// Analytic ledger of solve_qdp in cost_model mode; instance-independent.
inline QdpCost qdp_cost_model(std::size_t n, const QdpConfig& cfg = {}) {
  cfg.validate();
  if (n == 0) return {0, 0, 1, 0};
  const std::size_t t = qdp_is_classical(n, cfg) ? n : precompute_threshold(n, cfg.alpha);
  QdpCost out;
  for (std::size_t i = 1; i <= t; ++i) {
    out.classical_cost = checked_add(out.classical_cost, checked_mul(binomial(n, i), i));
  }
  const ModeledCost q = detail::qdp_cost_rec(n, t, cfg, n, 0, out.quantum_levels);
  out.quantum_calls = q.oracle_calls;
  out.table_reads = q.table_reads;
  return out;
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

struct QdpNode {
  Crossings value = 0;
  VertexSubset first_side;
  ModeledCost cost;
};

class QdpEngine {
 public:
  QdpEngine(const CrossingMatrix& cm, const DpTable& table, std::size_t n, std::size_t t,
            const QdpConfig& cfg)
      : cm_(cm), table_(table), n_(n), t_(t), cfg_(cfg) {}

  QdpNode solve(VertexSubset s, std::size_t level) {
    const std::size_t size = s.size();
    if (size <= t_) return {table_.at(s).opt, {}, {0, 1}};
    max_level_ = std::max(max_level_, level + 1);
    const std::size_t k = qdp_split_size(n_, cfg_.alpha, level, size);
    const MemberList members(s);
    ModeledCost per_eval;
    auto evaluate = [&](std::uint64_t index) -> Crossings {
      const VertexSubset w = deposit(unrank_combination(index, size, k), members);
      const VertexSubset rest = s - w;
      const QdpNode a = solve(w, level + 1);
      const QdpNode b = solve(rest, level + 1);
      per_eval.oracle_calls = std::max(per_eval.oracle_calls,
                                       1 + a.cost.oracle_calls + b.cost.oracle_calls);
      per_eval.table_reads = std::max(per_eval.table_reads,
                                      a.cost.table_reads + b.cost.table_reads);
      return a.value + b.value + cm_.between(w, rest);
    };
    QmfConfig qc = cfg_.qmf;
    qc.seed = splitmix64(cfg_.qmf.seed + invocations_++);
    const auto res = qmf(binomial(size, k), evaluate, qc);
    return {res.min_value, deposit(unrank_combination(res.argmin_index, size, k), members),
            {checked_mul(res.oracle_calls, per_eval.oracle_calls),
             checked_mul(res.oracle_calls, per_eval.table_reads)}};
  }

  void reconstruct(VertexSubset s, std::size_t level, VertexSubset known_split, Ordering& out,
                   std::vector<VertexSubset>& leaves) {
    if (s.size() <= t_) {
      const Ordering part = table_.order(s);
      out.insert(out.end(), part.begin(), part.end());
      leaves.push_back(s);
      return;
    }
    const VertexSubset w = known_split.empty() ? solve(s, level).first_side : known_split;
    reconstruct(w, level + 1, {}, out, leaves);
    reconstruct(s - w, level + 1, {}, out, leaves);
  }

  std::size_t max_level() const noexcept { return max_level_; }

 private:
  const CrossingMatrix& cm_;
  const DpTable& table_;
  std::size_t n_;
  std::size_t t_;
  QdpConfig cfg_;
  std::uint64_t invocations_ = 0;
  std::size_t max_level_ = 0;
};

}  // namespace detail

struct QdpResult {
  Solution solution;
  CostLedger ledger;
  std::vector<VertexSubset> leaf_sets;  // W_1, W_2, ... in output order
  std::size_t threshold = 0;
  std::size_t quantum_levels = 0;
  std::size_t table_entries = 0;
  bool classical_fallback = false;
  Crossings reported_value = 0;  // value returned by the outermost minimum finding
};

inline QdpResult solve_qdp(const BipartiteInstance& inst, const QdpConfig& cfg = {}) {
  cfg.validate();
  require_subset_solver_size(inst, "qdp");
  if (cfg.qmf.mode == QmfMode::state_vector && inst.n_v() > kMaxQdpStateVectorVertices) {
    fail(ErrorCode::size_limit, "state-vector qdp limited to n_V <= " +
                                    std::to_string(kMaxQdpStateVectorVertices));
  }
  const std::size_t n = inst.n_v();
  const CrossingMatrix cm = build_crossing_matrix(inst);

  QdpResult result;
  result.classical_fallback = qdp_is_classical(n, cfg);
  result.threshold = result.classical_fallback ? n : precompute_threshold(n, cfg.alpha);

  CostLedger& ledger = result.ledger;
  ledger.algo = Algo::qdp;
  ledger.n_v = n;
  ledger.alpha = cfg.alpha;
  const DpTable table = build_dp_table(cm, DpBuildOptions{result.threshold, true}, ledger);
  result.table_entries = table.entries();

  detail::QdpEngine engine(cm, table, n, result.threshold, cfg);
  const VertexSubset all = VertexSubset::full(n);
  const detail::QdpNode root = engine.solve(all, 0);
  ledger.oracle_calls = root.cost.oracle_calls;
  ledger.table_reads = root.cost.table_reads;
  result.quantum_levels = engine.max_level();
  result.reported_value = root.value;

  result.solution.ordering.reserve(n);
  engine.reconstruct(all, 0, root.first_side, result.solution.ordering, result.leaf_sets);
  result.solution.crossings = cm.cost_of(result.solution.ordering);
  if (cfg.qmf.mode == QmfMode::cost_model && result.solution.crossings != root.value) {
    fail(ErrorCode::internal, "qdp reconstruction does not realize the reported optimum");
  }
  return result;
}

}  // namespace oscm
