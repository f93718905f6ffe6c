#pragma once

// One entry point over every exact solver. All of them minimize the
// crossing-matrix objective, so colored instances are solved for same-color
// crossings.

#include <string>

#include "oscm/bigraph.hpp"
#include "oscm/dc.hpp"
#include "oscm/dp.hpp"
#include "oscm/ledger.hpp"
#include "oscm/oracle.hpp"
#include "oscm/qdc.hpp"
#include "oscm/qdp.hpp"

namespace oscm {

struct SolverOptions {
  OracleLimit limit;
  DcConfig dc;
  QdpConfig qdp;
  QmfConfig qmf;  // used by qdc
};

struct SolveOutcome {
  Solution solution;
  CostLedger ledger;
};

inline SolveOutcome solve_with(const BipartiteInstance& inst, Algo algo, const SolverOptions& opts = {}) {
  switch (algo) {
    case Algo::bruteforce: {
      SolveOutcome out{solve_bruteforce(inst, opts.limit, Objective::osscm), {}};
      out.ledger.algo = Algo::bruteforce;
      out.ledger.n_v = inst.n_v();
      out.ledger.nodes = detail::factorial_count(inst.n_v());
      return out;
    }
    case Algo::dp: {
      DpResult r = solve_dp(inst);
      return {std::move(r.solution), r.ledger};
    }
    case Algo::dc: {
      DcResult r = solve_dc(inst, opts.dc);
      return {std::move(r.solution), r.ledger};
    }
    case Algo::qdp: {
      QdpResult r = solve_qdp(inst, opts.qdp);
      return {std::move(r.solution), r.ledger};
    }
    case Algo::qdc: {
      QdcResult r = solve_qdc(inst, QdcConfig{opts.dc, opts.qmf});
      return {std::move(r.solution), r.ledger};
    }
    case Algo::tlcm: break;
  }
  fail(ErrorCode::invalid_argument, "'" + std::string(to_string(algo)) + "' is not a one-sided solver");
}

}  // namespace oscm
