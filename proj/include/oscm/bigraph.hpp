#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "oscm/error.hpp"
#include "oscm/subset.hpp"

namespace oscm {

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  std::uint32_t color = 0;

  auto operator<=>(const Edge&) const = default;
};

// A linear order of some set of vertex indices (V, or U for two-sided runs).
using Ordering = std::vector<Vertex>;

/**
 * Bipartite graph G = (U, V, E) with the U side fixed in index order.
 *
 * U-vertices are numbered in their fixed left-to-right order, so the fixed
 * permutation of U is the identity and is not stored. Edges may carry a color
 * in [0, n_colors); uncolored instances use a single color 0.
 */
class BipartiteInstance {
 public:
  BipartiteInstance() = default;

  BipartiteInstance(std::size_t n_u, std::size_t n_v, std::vector<Edge> edges,
                    std::size_t n_colors = 1)
      : n_u_(n_u), n_v_(n_v), n_colors_(n_colors), edges_(std::move(edges)) {
    if (n_colors_ == 0) fail(ErrorCode::invalid_argument, "number of colors must be at least 1");
    std::set<std::tuple<Vertex, Vertex, std::uint32_t>> seen;
    for (const Edge& e : edges_) {
      if (e.u >= n_u_ || e.v >= n_v_) {
        fail(ErrorCode::invalid_argument,
             "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") out of range");
      }
      if (e.color >= n_colors_) {
        fail(ErrorCode::invalid_argument, "edge color " + std::to_string(e.color) + " out of range");
      }
      if (!seen.emplace(e.u, e.v, e.color).second) {
        fail(ErrorCode::invalid_argument, "duplicate edge (" + std::to_string(e.u) + "," +
                                              std::to_string(e.v) + ") in color " +
                                              std::to_string(e.color));
      }
    }
  }

  std::size_t n_u() const noexcept { return n_u_; }
  std::size_t n_v() const noexcept { return n_v_; }
  std::size_t n_colors() const noexcept { return n_colors_; }
  bool colored() const noexcept { return n_colors_ > 1; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t n_edges() const noexcept { return edges_.size(); }

  std::size_t degree_v(Vertex v) const {
    return static_cast<std::size_t>(
        std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.v == v; }));
  }

  // The union of all color classes as one uncolored edge set.
  BipartiteInstance without_colors() const {
    std::vector<Edge> merged;
    std::set<std::pair<Vertex, Vertex>> seen;
    for (const Edge& e : edges_) {
      if (seen.emplace(e.u, e.v).second) merged.push_back({e.u, e.v, 0});
    }
    return BipartiteInstance(n_u_, n_v_, std::move(merged), 1);
  }

  // Swap the roles of U and V.
  BipartiteInstance transposed() const {
    std::vector<Edge> flipped;
    flipped.reserve(edges_.size());
    for (const Edge& e : edges_) flipped.push_back({e.v, e.u, e.color});
    return BipartiteInstance(n_v_, n_u_, std::move(flipped), n_colors_);
  }

  // Renumber U so that pi_u[i] becomes U-vertex i; the result has pi_u as its
  // fixed order.
  BipartiteInstance with_u_order(const Ordering& pi_u) const;

  bool operator==(const BipartiteInstance&) const = default;

 private:
  std::size_t n_u_ = 0;
  std::size_t n_v_ = 0;
  std::size_t n_colors_ = 1;
  std::vector<Edge> edges_;
};

inline bool is_full_permutation(const Ordering& order, std::size_t n) {
  if (order.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (Vertex x : order) {
    if (x >= n || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

inline std::vector<std::size_t> positions_of(const Ordering& order, std::size_t n) {
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  return pos;
}

inline BipartiteInstance BipartiteInstance::with_u_order(const Ordering& pi_u) const {
  if (!is_full_permutation(pi_u, n_u_)) fail(ErrorCode::invalid_argument, "pi_U is not a permutation of U");
  const auto pos = positions_of(pi_u, n_u_);
  std::vector<Edge> relabeled;
  relabeled.reserve(edges_.size());
  for (const Edge& e : edges_) relabeled.push_back({static_cast<Vertex>(pos[e.u]), e.v, e.color});
  return BipartiteInstance(n_u_, n_v_, std::move(relabeled), n_colors_);
}

namespace detail {

template <bool SameColorOnly>
Crossings count_pairs(const BipartiteInstance& inst, const std::vector<std::size_t>& pos_u,
                      const std::vector<std::size_t>& pos_v) {
  const auto& edges = inst.edges();
  Crossings total = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge& a = edges[i];
      const Edge& b = edges[j];
      if constexpr (SameColorOnly) {
        if (a.color != b.color) continue;
      }
      if (a.u == b.u || a.v == b.v) continue;
      const bool u_before = pos_u[a.u] < pos_u[b.u];
      const bool v_before = pos_v[a.v] < pos_v[b.v];
      if (u_before != v_before) ++total;
    }
  }
  return total;
}

inline void require_permutation(const Ordering& order, std::size_t n, const char* what) {
  if (!is_full_permutation(order, n)) {
    fail(ErrorCode::invalid_argument, std::string(what) + " is not a permutation of [0, " +
                                          std::to_string(n) + ")");
  }
}

}  // namespace detail

// Number of unordered crossing edge pairs in the drawing (pi_U, pi_V),
// counted directly over edge pairs. Colors are ignored.
inline Crossings count_crossings(const BipartiteInstance& inst, const Ordering& pi_u,
                                 const Ordering& pi_v) {
  detail::require_permutation(pi_u, inst.n_u(), "pi_U");
  detail::require_permutation(pi_v, inst.n_v(), "pi_V");
  return detail::count_pairs<false>(inst, positions_of(pi_u, inst.n_u()),
                                    positions_of(pi_v, inst.n_v()));
}

inline Ordering identity_order(std::size_t n) {
  Ordering id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<Vertex>(i);
  return id;
}

inline Crossings count_crossings(const BipartiteInstance& inst, const Ordering& pi_v) {
  detail::require_permutation(pi_v, inst.n_v(), "pi_V");
  return detail::count_pairs<false>(inst, positions_of(identity_order(inst.n_u()), inst.n_u()),
                                    positions_of(pi_v, inst.n_v()));
}

// Crossings between edges of the same color only, summed over colors.
inline Crossings count_same_color_crossings(const BipartiteInstance& inst, const Ordering& pi_v) {
  detail::require_permutation(pi_v, inst.n_v(), "pi_V");
  return detail::count_pairs<true>(inst, positions_of(identity_order(inst.n_u()), inst.n_u()),
                                   positions_of(pi_v, inst.n_v()));
}

/**
 * Pairwise crossing counts: entry (v, w) is the number of crossings between
 * edges at v and edges at w when v is placed before w. For colored instances
 * only same-colored edge pairs contribute.
 *
 * The crossings of any ordering are the sum of entries (v, w) over pairs with
 * v before w, and gamma(V1, V2) is the sum of entries over V1 x V2.
 */
class CrossingMatrix {
 public:
  CrossingMatrix() = default;
  explicit CrossingMatrix(std::size_t n_v)
      : n_v_(n_v), rows_(n_v * n_v, 0), cols_(n_v * n_v, 0) {}

  std::size_t n_v() const noexcept { return n_v_; }

  Crossings operator()(Vertex v, Vertex w) const noexcept { return rows_[v * n_v_ + w]; }

  // Sum over v in before, w in after of entry (v, w). No disjointness check.
  Crossings between(VertexSubset before, VertexSubset after) const noexcept {
    Crossings total = 0;
    if (before.size() <= after.size()) {
      for (Vertex v : before) {
        const Crossings* row = &rows_[v * n_v_];
        for (Vertex w : after) total += row[w];
      }
    } else {
      for (Vertex w : after) {
        const Crossings* col = &cols_[w * n_v_];
        for (Vertex v : before) total += col[v];
      }
    }
    return total;
  }

  // Sum over v in before of entry (v, w).
  Crossings into(VertexSubset before, Vertex w) const noexcept {
    const Crossings* col = &cols_[w * n_v_];
    Crossings total = 0;
    for (Vertex v : before) total += col[v];
    return total;
  }

  // Crossings of a (possibly partial) ordering: sum over i < j of entry
  // (order[i], order[j]).
  Crossings cost_of(const Ordering& order) const noexcept {
    Crossings total = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t j = i + 1; j < order.size(); ++j) total += (*this)(order[i], order[j]);
    }
    return total;
  }

  void set(Vertex v, Vertex w, Crossings value) noexcept {
    rows_[v * n_v_ + w] = value;
    cols_[w * n_v_ + v] = value;
  }

  bool operator==(const CrossingMatrix&) const = default;

 private:
  std::size_t n_v_ = 0;
  std::vector<Crossings> rows_;
  std::vector<Crossings> cols_;  // transposed copy for column sums
};

enum class ColorPolicy {
  same_color_only,  // pairs of differently colored edges never count
  ignore_colors,
};

inline CrossingMatrix build_crossing_matrix(const BipartiteInstance& inst,
                                            ColorPolicy policy = ColorPolicy::same_color_only) {
  const std::size_t n_u = inst.n_u();
  const std::size_t n_v = inst.n_v();
  const std::size_t n_classes = policy == ColorPolicy::ignore_colors ? 1 : inst.n_colors();
  CrossingMatrix cm(n_v);
  if (n_v == 0) return cm;

  std::vector<Crossings> acc(n_v * n_v, 0);
  for (std::size_t color = 0; color < n_classes; ++color) {
    // neighbors[v]: U-endpoints of v's edges in this class
    std::vector<std::vector<Vertex>> neighbors(n_v);
    for (const Edge& e : inst.edges()) {
      if (policy == ColorPolicy::ignore_colors || e.color == color) neighbors[e.v].push_back(e.u);
    }
    // below[w][x]: number of w's neighbors strictly before U-position x
    std::vector<std::vector<Crossings>> below(n_v, std::vector<Crossings>(n_u + 1, 0));
    for (std::size_t w = 0; w < n_v; ++w) {
      auto& b = below[w];
      for (Vertex u : neighbors[w]) ++b[u + 1];
      for (std::size_t x = 1; x <= n_u; ++x) b[x] += b[x - 1];
    }
    for (std::size_t v = 0; v < n_v; ++v) {
      for (std::size_t w = 0; w < n_v; ++w) {
        if (v == w) continue;
        Crossings c = 0;
        for (Vertex a : neighbors[v]) c += below[w][a];
        acc[v * n_v + w] += c;
      }
    }
  }
  for (std::size_t v = 0; v < n_v; ++v) {
    for (std::size_t w = 0; w < n_v; ++w) {
      cm.set(static_cast<Vertex>(v), static_cast<Vertex>(w), acc[v * n_v + w]);
    }
  }
  return cm;
}

// Crossings between E(V1) and E(V2) for any ordering placing all of V1 before
// all of V2; independent of the orders inside V1 and V2.
inline Crossings gamma(const CrossingMatrix& cm, VertexSubset v1, VertexSubset v2) {
  if (v1.intersects(v2)) fail(ErrorCode::invalid_argument, "gamma requires disjoint vertex sets");
  const VertexSubset universe = VertexSubset::full(cm.n_v());
  if (!v1.is_subset_of(universe) || !v2.is_subset_of(universe)) {
    fail(ErrorCode::invalid_argument, "gamma arguments contain vertices outside V");
  }
  return cm.between(v1, v2);
}

struct Solution {
  Ordering ordering;
  Crossings crossings = 0;

  bool operator==(const Solution&) const = default;
};

inline constexpr std::size_t kMaxSubsetSolverVertices = 64;

inline void require_subset_solver_size(const BipartiteInstance& inst, const char* solver,
                                       std::size_t limit = kMaxSubsetSolverVertices) {
  if (inst.n_v() > limit) {
    fail(ErrorCode::size_limit, std::string(solver) + " supports at most " + std::to_string(limit) +
                                    " V-vertices, got " + std::to_string(inst.n_v()));
  }
}

}  // namespace oscm
