#pragma once

// Brute-force ground truth by exhaustive permutation enumeration. Candidates
// are scored from a pair table filled by the edge-pair crossing definition,
// independent of build_crossing_matrix.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "oscm/bigraph.hpp"
#include "oscm/error.hpp"

namespace oscm {

struct OracleLimit {
  std::size_t max_nv = 10;
  std::size_t max_nu_tlcm = 6;

  void validate() const {
    if (max_nv < 1 || max_nu_tlcm < 1) fail(ErrorCode::invalid_argument, "oracle limits must be >= 1");
  }
};

enum class Objective {
  oscm,   // all crossings, colors ignored
  osscm,  // only crossings between edges of equal color
};

namespace detail {

// Heap's algorithm; calls visit(perm) for each of the n! permutations.
template <typename Visit>
void for_each_permutation_heap(std::vector<Vertex> perm, Visit&& visit) {
  const std::size_t n = perm.size();
  std::vector<std::size_t> c(n, 0);
  visit(static_cast<const std::vector<Vertex>&>(perm));
  std::size_t i = 1;
  while (i < n) {
    if (c[i] < i) {
      if (i % 2 == 0) {
        std::swap(perm[0], perm[i]);
      } else {
        std::swap(perm[c[i]], perm[i]);
      }
      visit(static_cast<const std::vector<Vertex>&>(perm));
      ++c[i];
      i = 1;
    } else {
      c[i] = 0;
      ++i;
    }
  }
}

// pair[v * n_v + w] = crossings between edges at v and edges at w when v is
// placed before w, counted edge pair by edge pair.
inline std::vector<Crossings> pair_table(const BipartiteInstance& inst,
                                         const std::vector<std::size_t>& pos_u, Objective objective) {
  const std::size_t n_v = inst.n_v();
  std::vector<Crossings> pair(n_v * n_v, 0);
  for (const Edge& e : inst.edges()) {
    for (const Edge& f : inst.edges()) {
      if (e.v == f.v) continue;
      if (objective == Objective::osscm && e.color != f.color) continue;
      if (pos_u[e.u] > pos_u[f.u]) pair[e.v * n_v + f.v] += 1;
    }
  }
  return pair;
}

inline Crossings score(const std::vector<Crossings>& pair, const Ordering& perm) {
  const std::size_t n = perm.size();
  Crossings total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) total += pair[perm[i] * n + perm[j]];
  }
  return total;
}

inline std::size_t factorial_count(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace detail

// Minimum over all n_V! orderings; ties go to the lexicographically least one.
inline Solution solve_bruteforce(const BipartiteInstance& inst, const OracleLimit& limit = {},
                                 Objective objective = Objective::oscm) {
  limit.validate();
  if (inst.n_v() > limit.max_nv) {
    fail(ErrorCode::size_limit, "bruteforce oracle limited to n_V <= " +
                                    std::to_string(limit.max_nv) + ", got " +
                                    std::to_string(inst.n_v()));
  }
  const auto pair = detail::pair_table(inst, positions_of(identity_order(inst.n_u()), inst.n_u()),
                                       objective);
  Solution best{identity_order(inst.n_v()), 0};
  bool have_best = false;
  detail::for_each_permutation_heap(identity_order(inst.n_v()), [&](const Ordering& perm) {
    const Crossings c = detail::score(pair, perm);
    if (!have_best || c < best.crossings || (c == best.crossings && perm < best.ordering)) {
      best = {perm, c};
      have_best = true;
    }
  });
  return best;
}

struct TwoSidedSolution {
  Ordering pi_u;
  Solution solution;
};

// Minimum over all n_U! * n_V! ordering pairs; ties broken lexicographically
// on (pi_U, pi_V).
inline TwoSidedSolution solve_tlcm_bruteforce(const BipartiteInstance& inst,
                                              const OracleLimit& limit = {}) {
  limit.validate();
  if (inst.n_u() > limit.max_nu_tlcm || inst.n_v() > limit.max_nv) {
    fail(ErrorCode::size_limit, "two-sided oracle limited to n_U <= " +
                                    std::to_string(limit.max_nu_tlcm) + " and n_V <= " +
                                    std::to_string(limit.max_nv));
  }
  TwoSidedSolution best{identity_order(inst.n_u()), {identity_order(inst.n_v()), 0}};
  bool have_best = false;
  detail::for_each_permutation_heap(identity_order(inst.n_u()), [&](const Ordering& pu) {
    const auto pair = detail::pair_table(inst, positions_of(pu, inst.n_u()), Objective::oscm);
    detail::for_each_permutation_heap(identity_order(inst.n_v()), [&](const Ordering& pv) {
      const Crossings c = detail::score(pair, pv);
      const bool better =
          !have_best || c < best.solution.crossings ||
          (c == best.solution.crossings &&
           (pu < best.pi_u || (pu == best.pi_u && pv < best.solution.ordering)));
      if (better) {
        best = {pu, {pv, c}};
        have_best = true;
      }
    });
  });
  return best;
}

}  // namespace oscm
