#pragma once

// Subset dynamic programming over V. With the split size fixed to |S|-1 the
// recurrence picks the vertex placed last:
//
//   OPT(S) = min_{w in S} OPT(S \ {w}) + gamma(S \ {w}, {w}).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

#include "oscm/bigraph.hpp"
#include "oscm/error.hpp"
#include "oscm/ledger.hpp"
#include "oscm/subset.hpp"

namespace oscm {

// Largest n_V for which a dense 2^n_V table is allocated (about 9 GiB).
inline constexpr std::size_t kMaxDenseDpVertices = 30;

/**
 * Optimal values for subsets of V together with the vertex placed last in an
 * optimal order of each subset, from which the stored order L[S] is rebuilt.
 *
 * A table covering every subset is a dense array indexed by mask; a table
 * restricted to small subsets is hashed.
 */
class DpTable {
 public:
  struct Entry {
    Crossings opt = 0;
    std::uint8_t last = kNoVertex;
  };
  static constexpr std::uint8_t kNoVertex = 0xFF;

  DpTable() = default;

  DpTable(std::size_t n_v, std::size_t max_size) : n_v_(n_v), max_size_(std::min(max_size, n_v)) {
    if (max_size_ == n_v_) {
      if (n_v_ > kMaxDenseDpVertices) {
        fail(ErrorCode::size_limit, "dense subset table limited to n_V <= " +
                                        std::to_string(kMaxDenseDpVertices));
      }
      dense_opt_.assign(std::size_t{1} << n_v_, 0);
      dense_last_.assign(std::size_t{1} << n_v_, kNoVertex);
    }
    store(VertexSubset{}, 0, kNoVertex);
  }

  std::size_t n_v() const noexcept { return n_v_; }
  std::size_t max_size() const noexcept { return max_size_; }
  bool dense() const noexcept { return !dense_opt_.empty(); }
  std::size_t entries() const noexcept { return dense() ? dense_opt_.size() : sparse_.size(); }

  void store(VertexSubset s, Crossings opt, std::uint8_t last) {
    if (dense()) {
      dense_opt_[s.bits()] = opt;
      dense_last_[s.bits()] = last;
    } else {
      sparse_[s.bits()] = Entry{opt, last};
    }
  }

  bool contains(VertexSubset s) const {
    if (!s.is_subset_of(VertexSubset::full(n_v_)) || s.size() > max_size_) return false;
    return dense() || sparse_.count(s.bits()) != 0;
  }

  Entry at(VertexSubset s) const {
    if (!contains(s)) {
      fail(ErrorCode::internal, "subset " + s.to_string() + " missing from the DP table");
    }
    if (dense()) return Entry{dense_opt_[s.bits()], dense_last_[s.bits()]};
    return sparse_.find(s.bits())->second;
  }

  // Unchecked lookup for the inner loop; s must be present.
  Crossings opt_unchecked(VertexSubset s) const {
    if (dense()) return dense_opt_[s.bits()];
    return sparse_.find(s.bits())->second.opt;
  }

  // The stored optimal order L[S].
  Ordering order(VertexSubset s) const {
    Ordering out(s.size());
    std::size_t i = out.size();
    while (!s.empty()) {
      const Entry e = at(s);
      if (e.last == kNoVertex || !s.contains(e.last)) {
        fail(ErrorCode::internal, "corrupt last-vertex link at " + s.to_string());
      }
      out[--i] = e.last;
      s = s.without(e.last);
    }
    return out;
  }

 private:
  std::size_t n_v_ = 0;
  std::size_t max_size_ = 0;
  std::vector<Crossings> dense_opt_;
  std::vector<std::uint8_t> dense_last_;
  std::unordered_map<std::uint64_t, Entry> sparse_;
};

struct DpBuildOptions {
  std::size_t max_size = kMaxSubsetVertices;  // largest subset stored
  bool charge_singletons = false;             // count the trivial |S| = 1 evaluations
};

// Fills the table for all subsets of size <= max_size, in increasing size.
// Ties go to the smallest last vertex.
inline DpTable build_dp_table(const CrossingMatrix& cm, const DpBuildOptions& opts,
                              CostLedger& ledger) {
  const std::size_t n = cm.n_v();
  DpTable table(n, opts.max_size);
  ledger.nodes += 1;  // the empty set
  for (std::size_t size = 1; size <= table.max_size(); ++size) {
    for (std::uint64_t bits = low_bits(size); bits != 0; bits = next_combination(bits, n)) {
      const VertexSubset s(bits);
      Crossings best = std::numeric_limits<Crossings>::max();
      std::uint8_t best_last = DpTable::kNoVertex;
      if (size == 1) {
        best = 0;
        best_last = static_cast<std::uint8_t>(s.first());
        if (opts.charge_singletons) {
          ledger.recurrence_evals += 1;
          ledger.gamma_evals += 1;
        }
      } else {
        for (Vertex w : s) {
          const VertexSubset rest = s.without(w);
          const Crossings value = table.opt_unchecked(rest) + cm.into(rest, w);
          if (value < best) {
            best = value;
            best_last = static_cast<std::uint8_t>(w);
          }
        }
        ledger.recurrence_evals += size;
        ledger.gamma_evals += size;
      }
      table.store(s, best, best_last);
      ledger.nodes += 1;
    }
  }
  return table;
}

struct DpResult {
  Solution solution;
  CostLedger ledger;
  DpTable table;
};

inline DpResult solve_dp(const BipartiteInstance& inst) {
  require_subset_solver_size(inst, "dp");
  const CrossingMatrix cm = build_crossing_matrix(inst);
  CostLedger ledger;
  ledger.algo = Algo::dp;
  ledger.n_v = inst.n_v();
  DpTable table = build_dp_table(cm, DpBuildOptions{inst.n_v(), false}, ledger);
  const VertexSubset all = VertexSubset::full(inst.n_v());
  Solution sol{table.order(all), table.at(all).opt};
  if (cm.cost_of(sol.ordering) != sol.crossings) {
    fail(ErrorCode::internal, "dp reconstruction does not realize OPT(V)");
  }
  return {std::move(sol), ledger, std::move(table)};
}

inline Crossings opt_of_subset(const DpTable& table, VertexSubset s) { return table.at(s).opt; }

// Closed form of the dp ledger's recurrence_evals: sum over |S| >= 2 of |S|.
inline std::uint64_t dp_recurrence_count(std::size_t n) {
  if (n < 2) return 0;
  return checked_mul(n, std::uint64_t{1} << (n - 1)) - n;
}

}  // namespace oscm
