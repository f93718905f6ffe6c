#pragma once

/**
 * Quantum divide and conquer, simulated without any subset table.
 *
 * Same recursion as solve_dc, but the minimum over the C(s, ceil(s/2))
 * balanced splits of each node is delegated to qmf. The winning split of
 * every node on the optimal recursion tree is recorded as the content of its
 * split register A_{i,j}: one entry per member of S_{i,j} in increasing
 * vertex order, 0 for the side placed first and 1 for the side placed second.
 * Node (i, j) has children (i+1, 2j) and (i+1, 2j+1).
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "oscm/bigraph.hpp"
#include "oscm/dc.hpp"
#include "oscm/error.hpp"
#include "oscm/ledger.hpp"
#include "oscm/qmf.hpp"
#include "oscm/subset.hpp"

namespace oscm {

struct QdcConfig {
  DcConfig dc;
  QmfConfig qmf;

  void validate() const {
    dc.validate();
    qmf.validate();
  }
};

struct SplitTrace {
  struct Node {
    VertexSubset set;                   // S_{i,j}
    std::vector<std::uint8_t> split;    // A_{i,j}; empty at leaves
    Ordering leaf_order;                // order of S_{i,j} at leaves
  };
  using Key = std::pair<std::size_t, std::uint64_t>;  // (level i, call index j)

  std::map<Key, Node> nodes;

  // Widest sum of register sizes on any root-to-leaf path.
  std::size_t max_path_register_bits() const {
    std::size_t best = 0;
    for (const auto& [key, node] : nodes) {
      if (!node.split.empty()) continue;
      std::size_t bits = 0;
      Key k = key;
      while (k.first > 0) {
        k = {k.first - 1, k.second / 2};
        const auto it = nodes.find(k);
        if (it != nodes.end()) bits += it->second.split.size();
      }
      best = std::max(best, bits);
    }
    return best;
  }

  nlohmann::ordered_json to_json() const {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [key, node] : nodes) {
      nlohmann::ordered_json j;
      j["level"] = key.first;
      j["index"] = key.second;
      j["set"] = node.set.members();
      std::string reg;
      for (std::uint8_t b : node.split) reg += static_cast<char>('0' + b);
      j["split"] = reg;
      if (node.split.empty()) j["leaf_order"] = node.leaf_order;
      arr.push_back(std::move(j));
    }
    nlohmann::ordered_json out;
    out["nodes"] = std::move(arr);
    return out;
  }
};

namespace detail {

inline void extract_preorder(const SplitTrace& trace, SplitTrace::Key key, VertexSubset expected,
                             Ordering& out) {
  const auto it = trace.nodes.find(key);
  if (it == trace.nodes.end()) {
    fail(ErrorCode::internal, "split trace is missing node (" + std::to_string(key.first) + "," +
                                  std::to_string(key.second) + ")");
  }
  const SplitTrace::Node& node = it->second;
  if (node.set != expected) {
    fail(ErrorCode::internal, "split trace node set " + node.set.to_string() +
                                  " does not match its parent's split " + expected.to_string());
  }
  if (node.split.empty()) {
    if (node.set.size() == 1 && node.leaf_order.empty()) {
      out.push_back(node.set.first());
      return;
    }
    if (VertexSubset::of(node.leaf_order) != node.set || node.leaf_order.size() != node.set.size()) {
      fail(ErrorCode::internal, "leaf order does not cover its set");
    }
    out.insert(out.end(), node.leaf_order.begin(), node.leaf_order.end());
    return;
  }
  const MemberList members(node.set);
  if (node.split.size() != members.count) {
    fail(ErrorCode::internal, "split register width differs from its set size");
  }
  VertexSubset zero_side, one_side;
  for (std::size_t k = 0; k < members.count; ++k) {
    if (node.split[k] == 0) {
      zero_side = zero_side.with(members[k]);
    } else if (node.split[k] == 1) {
      one_side = one_side.with(members[k]);
    } else {
      fail(ErrorCode::internal, "split register entries must be 0 or 1");
    }
  }
  if (zero_side.size() != ceil_half(members.count) || one_side.size() != members.count / 2) {
    fail(ErrorCode::internal, "unbalanced split at (" + std::to_string(key.first) + "," +
                                  std::to_string(key.second) + ")");
  }
  extract_preorder(trace, {key.first + 1, 2 * key.second}, zero_side, out);
  extract_preorder(trace, {key.first + 1, 2 * key.second + 1}, one_side, out);
}

}  // namespace detail

// Pre-order walk of the recorded tree: at every node the status-0 side
// precedes the status-1 side.
inline Ordering extract_ordering(const SplitTrace& trace, std::size_t n_v) {
  Ordering out;
  out.reserve(n_v);
  if (n_v == 0) return out;
  detail::extract_preorder(trace, {0, 0}, VertexSubset::full(n_v), out);
  return out;
}

// Analytic oracle-call count: Q(k) = 0 for k <= base, else
// ceil(c sqrt(C(k, ceil(k/2)))) * (Q(floor(k/2)) + Q(ceil(k/2)) + 1).
inline std::uint64_t qdc_cost_model(std::size_t k, std::size_t base_size, double call_constant = 1.0) {
  if (k <= std::max<std::size_t>(base_size, 1)) return 0;
  const std::uint64_t calls = qmf_call_charge(binomial(k, ceil_half(k)), call_constant);
  const std::uint64_t inner = checked_add(
      1, checked_add(qdc_cost_model(k / 2, base_size, call_constant),
                     qdc_cost_model(ceil_half(k), base_size, call_constant)));
  return checked_mul(calls, inner);
}

namespace detail {

struct QdcNode {
  Crossings value = 0;
  VertexSubset first_side;
  std::uint64_t oracle_calls = 0;  // modeled cost of computing this node
};

class QdcEngine {
 public:
  QdcEngine(const CrossingMatrix& cm, const QdcConfig& cfg) : cm_(cm), cfg_(cfg) {}

  QdcNode solve(VertexSubset s, CostLedger* ledger, std::size_t depth = 1) {
    if (ledger != nullptr) {
      ledger->nodes += 1;
      max_depth_ = std::max(max_depth_, depth);
      if (cfg_.dc.max_nodes != 0 && ledger->nodes > cfg_.dc.max_nodes) {
        fail(ErrorCode::work_limit,
             "quantum divide and conquer exceeded " + std::to_string(cfg_.dc.max_nodes) + " nodes");
      }
    }
    const std::size_t size = s.size();
    if (size <= cfg_.dc.base_size) {
      return {solve_small_set(cm_, s, ledger ? &ledger->gamma_evals : nullptr).value, {}, 0};
    }
    const std::size_t k = ceil_half(size);
    const MemberList members(s);
    std::uint64_t per_eval = 0;
    auto evaluate = [&](std::uint64_t index) -> Crossings {
      const VertexSubset w = deposit(unrank_combination(index, size, k), members);
      const VertexSubset rest = s - w;
      const QdcNode a = solve(w, ledger, depth + 1);
      const QdcNode b = solve(rest, ledger, depth + 1);
      if (ledger != nullptr) ledger->gamma_evals += 1;
      per_eval = std::max(per_eval, 1 + a.oracle_calls + b.oracle_calls);
      return a.value + b.value + cm_.between(w, rest);
    };
    QmfConfig qc = cfg_.qmf;
    qc.seed = cfg_.qmf.seed + 0x9E3779B97F4A7C15ULL * (++invocations_);
    const auto res = qmf(binomial(size, k), evaluate, qc);
    return {res.min_value, deposit(unrank_combination(res.argmin_index, size, k), members),
            checked_mul(res.oracle_calls, per_eval)};
  }

  // Records the winning split of every node of the optimal tree.
  void record(VertexSubset s, SplitTrace::Key key, VertexSubset known_split, SplitTrace& trace) {
    SplitTrace::Node node;
    node.set = s;
    if (s.size() <= cfg_.dc.base_size) {
      const auto small = solve_small_set(cm_, s, nullptr);
      node.leaf_order.assign(small.order.begin(),
                             small.order.begin() + static_cast<std::ptrdiff_t>(small.count));
      trace.nodes.emplace(key, std::move(node));
      return;
    }
    const VertexSubset w = known_split.empty() ? solve(s, nullptr).first_side : known_split;
    for (Vertex v : s) node.split.push_back(w.contains(v) ? 0 : 1);
    trace.nodes.emplace(key, std::move(node));
    record(w, {key.first + 1, 2 * key.second}, {}, trace);
    record(s - w, {key.first + 1, 2 * key.second + 1}, {}, trace);
  }

  std::size_t max_depth() const noexcept { return max_depth_; }

 private:
  const CrossingMatrix& cm_;
  QdcConfig cfg_;
  std::uint64_t invocations_ = 0;
  std::size_t max_depth_ = 0;
};

}  // namespace detail

struct QdcResult {
  Solution solution;  // ordering left empty in count_only mode
  CostLedger ledger;
  SplitTrace trace;
  std::size_t max_depth = 0;
  Crossings reported_value = 0;
};

inline QdcResult solve_qdc(const BipartiteInstance& inst, const QdcConfig& cfg = {}) {
  cfg.validate();
  require_subset_solver_size(inst, "qdc");
  const CrossingMatrix cm = build_crossing_matrix(inst);
  QdcResult result;
  result.ledger.algo = Algo::qdc;
  result.ledger.n_v = inst.n_v();

  detail::QdcEngine engine(cm, cfg);
  const VertexSubset all = VertexSubset::full(inst.n_v());
  const detail::QdcNode root = engine.solve(all, &result.ledger);
  result.ledger.oracle_calls = root.oracle_calls;
  result.max_depth = engine.max_depth();
  result.reported_value = root.value;
  result.solution.crossings = root.value;

  if (!cfg.dc.count_only && inst.n_v() > 0) {
    engine.record(all, {0, 0}, root.first_side, result.trace);
    result.solution.ordering = extract_ordering(result.trace, inst.n_v());
    result.solution.crossings = cm.cost_of(result.solution.ordering);
    if (cfg.qmf.mode == QmfMode::cost_model && result.solution.crossings != root.value) {
      fail(ErrorCode::internal, "qdc trace does not realize the reported optimum");
    }
  }
  return result;
}

}  // namespace oscm
