#pragma once

// Colored one-sided minimization (same-color crossings only) and the
// two-sided driver that enumerates orders of the smaller side.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <tuple>

#include "oscm/analysis.hpp"
#include "oscm/bigraph.hpp"
#include "oscm/ledger.hpp"
#include "oscm/oracle.hpp"
#include "oscm/qmf.hpp"
#include "oscm/solve.hpp"

namespace oscm {

// Minimizes the sum over colors of same-color crossings. The colored crossing
// matrix carries the whole objective, so any one-sided solver applies as is.
inline SolveOutcome solve_osscm(const BipartiteInstance& inst, Algo algo,
                                const SolverOptions& opts = {}) {
  SolveOutcome out = solve_with(inst, algo, opts);
  if (!out.solution.ordering.empty() &&
      count_same_color_crossings(inst, out.solution.ordering) != out.solution.crossings) {
    fail(ErrorCode::internal, "colored optimum does not match its same-color recount");
  }
  return out;
}

struct TlcmConfig {
  Algo inner_algo = Algo::dp;  // dp or qdp
  QdpConfig qdp;
  QmfConfig qmf;  // call constant for the modeled outer search
};

struct TlcmResult {
  Ordering pi_u;
  Solution solution;
  CostLedger ledger;
  bool enumerated_v = false;  // true when V was the smaller side
};

/**
 * Two-level crossing minimization: every order of the smaller side is fixed
 * in turn and the other side is solved exactly by the inner one-sided solver.
 *
 * The outer search runs as a classical loop; its quantum cost is modeled as
 * ceil(c sqrt(p!)) calls of the inner solver (p = size of the smaller side).
 * Actual inner work summed over all p! runs is reported as classical_evals.
 */
inline TlcmResult solve_tlcm(const BipartiteInstance& inst, const TlcmConfig& cfg = {},
                             const OracleLimit& limit = {}) {
  limit.validate();
  if (cfg.inner_algo != Algo::dp && cfg.inner_algo != Algo::qdp) {
    fail(ErrorCode::invalid_argument, "two-sided driver supports inner solvers dp and qdp");
  }
  const BipartiteInstance plain = inst.without_colors();
  const bool swap = plain.n_v() < plain.n_u();
  const BipartiteInstance work = swap ? plain.transposed() : plain;
  const std::size_t p = work.n_u();
  if (p > limit.max_nu_tlcm) {
    fail(ErrorCode::size_limit, "two-sided driver enumerates at most " +
                                    std::to_string(limit.max_nu_tlcm) + "! orders, smaller side has " +
                                    std::to_string(p) + " vertices");
  }

  SolverOptions opts;
  opts.qdp = cfg.qdp;

  TlcmResult best;
  bool have_best = false;
  std::uint64_t inner_unit = 0;
  CostLedger ledger;
  ledger.algo = Algo::tlcm;
  ledger.inner = cfg.inner_algo;
  ledger.n_v = inst.n_v();

  Ordering perm = identity_order(p);
  do {
    const SolveOutcome inner = solve_with(work.with_u_order(perm), cfg.inner_algo, opts);
    const std::uint64_t unit = cfg.inner_algo == Algo::qdp
                                   ? inner.ledger.recurrence_evals + inner.ledger.oracle_calls
                                   : inner.ledger.recurrence_evals;
    inner_unit = std::max(inner_unit, unit);
    ledger.recurrence_evals += inner.ledger.recurrence_evals;
    ledger.nodes += 1;

    Ordering pi_u = swap ? inner.solution.ordering : perm;
    Ordering pi_v = swap ? perm : inner.solution.ordering;
    const Crossings c = inner.solution.crossings;
    if (!have_best || std::tie(c, pi_u, pi_v) <
                          std::tie(best.solution.crossings, best.pi_u, best.solution.ordering)) {
      best.pi_u = std::move(pi_u);
      best.solution = {std::move(pi_v), c};
      have_best = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  ledger.oracle_calls = checked_mul(qmf_call_charge(ledger.nodes, cfg.qmf.call_constant), inner_unit);
  best.ledger = ledger;
  best.enumerated_v = swap;
  if (count_crossings(plain, best.pi_u, best.solution.ordering) != best.solution.crossings) {
    fail(ErrorCode::internal, "two-sided optimum does not match its recount");
  }
  return best;
}

// log2 of the modeled two-sided running time, (n_U log2 n_U)/2 + n_V log2 1.728,
// up to polynomial factors.
inline double tlcm_log2_time(std::size_t n_u, std::size_t n_v) {
  const double nu = static_cast<double>(n_u);
  const double lg = n_u > 1 ? nu * std::log2(nu) : 0.0;
  return lg / 2.0 + static_cast<double>(n_v) * std::log2(kQuantumDpBase);
}

// Whether the permutation search is dominated by the one-sided part, in
// which case the two-sided time is within (1.728^2)^{n_V}.
inline bool tlcm_is_singly_exponential(std::size_t n_u, std::size_t n_v) {
  const double nu = static_cast<double>(n_u);
  const double lg = n_u > 1 ? nu * std::log2(nu) : 0.0;
  return static_cast<double>(n_v) * std::log2(kQuantumDpBase) >= lg / 2.0;
}

inline double tlcm_singly_exponential_base() { return kQuantumDpBase * kQuantumDpBase; }

}  // namespace oscm
