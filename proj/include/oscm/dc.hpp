#pragma once

// Classical divide and conquer over balanced splits:
//
//   OPT(S) = min_{W subset S, |W| = ceil(|S|/2)} OPT(W) + OPT(S \ W) + gamma(W, S \ W)
//
// with sets of at most base_size vertices solved by enumeration. Nothing is
// memoized; working state is one frame of a few words per recursion level.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>

#include "oscm/bigraph.hpp"
#include "oscm/error.hpp"
#include "oscm/ledger.hpp"
#include "oscm/subset.hpp"

namespace oscm {

struct DcConfig {
  std::size_t base_size = 2;
  bool count_only = false;       // skip ordering reconstruction
  std::uint64_t max_nodes = 0;   // abort after this many recursion nodes; 0 = unlimited

  void validate() const {
    if (base_size < 1) fail(ErrorCode::invalid_argument, "base_size must be at least 1");
    if (base_size > 10) fail(ErrorCode::invalid_argument, "base_size above 10 is not supported");
  }
};

// Nodes of the recursion tree on k elements:
// nodes(k) = 1 if k <= base, else 1 + C(k, ceil(k/2)) * (nodes(floor(k/2)) + nodes(ceil(k/2))).
inline std::uint64_t dc_node_count(std::size_t k, std::size_t base_size) {
  if (k <= std::max<std::size_t>(base_size, 1)) return 1;
  const std::uint64_t children =
      checked_add(dc_node_count(k / 2, base_size), dc_node_count(ceil_half(k), base_size));
  return checked_add(1, checked_mul(binomial(k, ceil_half(k)), children));
}

namespace detail {

// Best order of a small set by lexicographic enumeration; first optimum wins.
struct SmallSetOptimum {
  Crossings value = 0;
  std::array<Vertex, 16> order{};
  std::size_t count = 0;
};

inline SmallSetOptimum solve_small_set(const CrossingMatrix& cm, VertexSubset s,
                                       std::uint64_t* gamma_evals) {
  SmallSetOptimum best;
  std::array<Vertex, 16> perm{};
  for (Vertex v : s) perm[best.count++] = v;
  const std::size_t n = best.count;
  best.order = perm;
  if (n <= 1) return best;
  bool first = true;
  do {
    Crossings c = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) c += cm(perm[i], perm[j]);
    }
    if (gamma_evals != nullptr) *gamma_evals += n * (n - 1) / 2;
    if (first || c < best.value) {
      best.value = c;
      best.order = perm;
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(n)));
  return best;
}

struct SplitChoice {
  Crossings value = 0;
  VertexSubset first_side;  // W, placed before S \ W; empty at base nodes
};

class DcEngine {
 public:
  DcEngine(const CrossingMatrix& cm, const DcConfig& cfg) : cm_(cm), cfg_(cfg) {}

  // Counted pass when ledger != nullptr.
  SplitChoice solve(VertexSubset s, CostLedger* ledger, std::size_t depth = 1) {
    if (ledger != nullptr) {
      ledger->nodes += 1;
      max_depth_ = std::max(max_depth_, depth);
      if (cfg_.max_nodes != 0 && ledger->nodes > cfg_.max_nodes) {
        fail(ErrorCode::work_limit,
             "divide and conquer exceeded " + std::to_string(cfg_.max_nodes) + " nodes");
      }
    }
    const std::size_t size = s.size();
    if (size <= cfg_.base_size) {
      return {solve_small_set(cm_, s, ledger ? &ledger->gamma_evals : nullptr).value, {}};
    }
    const MemberList members(s);
    const std::size_t k = ceil_half(size);
    SplitChoice best{std::numeric_limits<Crossings>::max(), {}};
    for (std::uint64_t local = low_bits(k); local != 0; local = next_combination(local, size)) {
      const VertexSubset w = deposit(local, members);
      const VertexSubset rest = s - w;
      const Crossings value = solve(w, ledger, depth + 1).value +
                              solve(rest, ledger, depth + 1).value + cm_.between(w, rest);
      if (ledger != nullptr) ledger->gamma_evals += 1;
      if (value < best.value) best = {value, w};
    }
    return best;
  }

  // Appends an optimal order of s; the split at s may be supplied by a caller
  // that already knows it. Child splits are re-derived with uncounted passes.
  void reconstruct(VertexSubset s, Ordering& out, VertexSubset known_split = {}) {
    if (s.size() <= cfg_.base_size) {
      const auto small = solve_small_set(cm_, s, nullptr);
      out.insert(out.end(), small.order.begin(),
                 small.order.begin() + static_cast<std::ptrdiff_t>(small.count));
      return;
    }
    const VertexSubset w = known_split.empty() ? solve(s, nullptr).first_side : known_split;
    reconstruct(w, out);
    reconstruct(s - w, out);
  }

  std::size_t max_depth() const noexcept { return max_depth_; }

 private:
  const CrossingMatrix& cm_;
  DcConfig cfg_;
  std::size_t max_depth_ = 0;
};

}  // namespace detail

struct DcResult {
  Solution solution;  // ordering left empty in count_only mode
  CostLedger ledger;
  std::size_t max_depth = 0;
};

inline DcResult solve_dc(const BipartiteInstance& inst, const DcConfig& cfg = {}) {
  cfg.validate();
  require_subset_solver_size(inst, "dc");
  const CrossingMatrix cm = build_crossing_matrix(inst);
  CostLedger ledger;
  ledger.algo = Algo::dc;
  ledger.n_v = inst.n_v();
  detail::DcEngine engine(cm, cfg);
  const VertexSubset all = VertexSubset::full(inst.n_v());
  const detail::SplitChoice root = engine.solve(all, &ledger);

  DcResult result;
  result.solution.crossings = root.value;
  result.ledger = ledger;
  result.max_depth = engine.max_depth();
  if (!cfg.count_only) {
    result.solution.ordering.reserve(inst.n_v());
    engine.reconstruct(all, result.solution.ordering, root.first_side);
    if (cm.cost_of(result.solution.ordering) != root.value) {
      fail(ErrorCode::internal, "dc reconstruction does not realize OPT(V)");
    }
  }
  return result;
}

}  // namespace oscm
