#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "oscm/error.hpp"

namespace oscm {

enum class Algo { bruteforce, dp, dc, qdp, qdc, tlcm };

constexpr std::string_view to_string(Algo a) noexcept {
  switch (a) {
    case Algo::bruteforce: return "bruteforce";
    case Algo::dp: return "dp";
    case Algo::dc: return "dc";
    case Algo::qdp: return "qdp";
    case Algo::qdc: return "qdc";
    case Algo::tlcm: return "tlcm";
  }
  return "unknown";
}

inline Algo parse_algo(std::string_view name) {
  for (Algo a : {Algo::bruteforce, Algo::dp, Algo::dc, Algo::qdp, Algo::qdc, Algo::tlcm}) {
    if (to_string(a) == name) return a;
  }
  fail(ErrorCode::invalid_argument, "unknown algorithm '" + std::string(name) + "'");
}

/**
 * Deterministic operation accounting for one solver run.
 *
 * recurrence_evals  classical recurrence evaluations (the q-dp precompute
 *                   phase reports these as classical_evals)
 * gamma_evals       separability-constant evaluations
 * oracle_calls      modeled quantum oracle applications
 * table_reads       unit-cost reads of precomputed (QRAM) values
 * nodes             subproblems solved: table entries for dp,
 *                   recursion-tree nodes for dc/qdc, outer permutations
 *                   for tlcm, orderings for bruteforce
 */
struct CostLedger {
  Algo algo = Algo::dp;
  std::size_t n_v = 0;
  std::uint64_t recurrence_evals = 0;
  std::uint64_t gamma_evals = 0;
  std::uint64_t oracle_calls = 0;
  std::uint64_t table_reads = 0;
  std::uint64_t nodes = 0;
  std::optional<double> alpha;
  std::optional<Algo> inner;

  // Emits the per-algorithm schema.
  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["algo"] = std::string(to_string(algo));
    switch (algo) {
      case Algo::dp:
        j["n_v"] = n_v;
        j["recurrence_evals"] = recurrence_evals;
        j["gamma_evals"] = gamma_evals;
        break;
      case Algo::dc:
        j["nodes"] = nodes;
        j["gamma_evals"] = gamma_evals;
        break;
      case Algo::qdp:
        j["alpha"] = alpha.value_or(0.0);
        j["classical_evals"] = recurrence_evals;
        j["oracle_calls"] = oracle_calls;
        j["table_reads"] = table_reads;
        break;
      case Algo::qdc:
        j["oracle_calls"] = oracle_calls;
        j["nodes"] = nodes;
        break;
      case Algo::bruteforce:
        j["n_v"] = n_v;
        j["orderings"] = nodes;
        break;
      case Algo::tlcm:
        j["inner"] = std::string(to_string(inner.value_or(Algo::dp)));
        j["outer_permutations"] = nodes;
        j["oracle_calls"] = oracle_calls;
        j["classical_evals"] = recurrence_evals;
        break;
    }
    return j;
  }
};

}  // namespace oscm
