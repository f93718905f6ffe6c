#pragma once

// Command-line front end: solve, gen, bench, analyze.
//
// Exit codes: 0 ok, 1 usage or other error, 2 parse error, 3 size or work
// limit, 4 verification mismatch.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "oscm/oscm.hpp"

namespace oscm::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kSizeLimit = 3,
  kVerifyMismatch = 4,
};

inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse: return kParse;
    case ErrorCode::size_limit:
    case ErrorCode::work_limit: return kSizeLimit;
    case ErrorCode::verify_mismatch: return kVerifyMismatch;
    default: return kUsage;
  }
}

struct SolveArgs {
  std::string input;
  std::string algo = "dp";
  std::string objective = "oscm";
  bool verify = false;
  double alpha = kBalancedAlpha;
  std::size_t base_size = 2;
  std::string mode = "cost_model";
  std::optional<std::uint64_t> seed;
  double call_constant = 1.0;
  std::size_t min_quantum_n = 8;
  std::size_t max_nv = 10;
  std::size_t max_nu_tlcm = 6;
  bool trace = false;
};

struct GenArgs {
  std::size_t n_u = 4;
  std::size_t n_v = 4;
  double edge_prob = 0.5;
  std::size_t colors = 1;
  std::optional<std::uint64_t> seed;
  std::string output;
};

struct BenchArgs {
  std::vector<std::string> algos{"dp"};
  std::size_t n_min = 4;
  std::size_t n_max = 12;
  std::optional<std::size_t> n_u;
  double edge_prob = 0.5;
  std::optional<std::uint64_t> seed;
  double alpha = kBalancedAlpha;
  std::size_t base_size = 2;
  bool analytic = false;
  std::string output;
};

struct AnalyzeArgs {
  double p = 0.5;
  std::size_t n = 10;
  double c = 0.0;
  double alpha = kBalancedAlpha;
  std::string csv;
};

inline std::string join(const Ordering& order) {
  std::ostringstream out;
  for (std::size_t i = 0; i < order.size(); ++i) out << (i ? " " : "") << order[i];
  return out.str();
}

inline BipartiteInstance read_input(const std::string& path) {
  if (path == "-") return parse_instance(std::cin);
  return load_instance(path);
}

inline QmfMode parse_mode(const std::string& mode) {
  if (mode == "cost_model") return QmfMode::cost_model;
  if (mode == "state_vector") return QmfMode::state_vector;
  fail(ErrorCode::invalid_argument, "unknown qmf mode '" + mode + "'");
}

inline int cmd_solve(const SolveArgs& a, std::ostream& out) {
  const BipartiteInstance raw = read_input(a.input);
  const Algo algo = parse_algo(a.algo);

  SolverOptions opts;
  opts.limit = {a.max_nv, a.max_nu_tlcm};
  opts.dc.base_size = a.base_size;
  opts.qmf.mode = parse_mode(a.mode);
  opts.qmf.seed = a.seed.value_or(default_seed(0));
  opts.qmf.call_constant = a.call_constant;
  opts.qdp.alpha = a.alpha;
  opts.qdp.qmf = opts.qmf;
  opts.qdp.min_quantum_n = a.min_quantum_n;

  out << "objective: " << a.objective << "\n";
  out << "algo: " << a.algo << "\n";

  if (a.objective == "tlcm") {
    TlcmConfig cfg;
    cfg.inner_algo = algo;
    cfg.qdp = opts.qdp;
    cfg.qmf = opts.qmf;
    const TlcmResult r = solve_tlcm(raw, cfg, opts.limit);
    out << "crossings: " << r.solution.crossings << "\n";
    out << "pi_u: " << join(r.pi_u) << "\n";
    out << "ordering: " << join(r.solution.ordering) << "\n";
    out << "ledger: " << r.ledger.to_json().dump() << "\n";
    if (a.verify) {
      if (raw.n_u() <= opts.limit.max_nu_tlcm && raw.n_v() <= opts.limit.max_nv) {
        const auto truth = solve_tlcm_bruteforce(raw.without_colors(), opts.limit);
        if (truth.solution.crossings != r.solution.crossings) {
          out << "verify: MISMATCH (bruteforce crossings " << truth.solution.crossings << ")\n";
          return kVerifyMismatch;
        }
        out << "verify: ok (bruteforce crossings " << truth.solution.crossings << ")\n";
      } else {
        out << "verify: skipped (instance exceeds oracle limits)\n";
      }
    }
    return kOk;
  }

  BipartiteInstance inst;
  if (a.objective == "oscm") {
    inst = raw.colored() ? raw.without_colors() : raw;
  } else if (a.objective == "osscm") {
    inst = raw;
  } else {
    fail(ErrorCode::invalid_argument, "unknown objective '" + a.objective + "'");
  }

  SolveOutcome result;
  std::optional<SplitTrace> trace;
  if (algo == Algo::qdc && a.trace) {
    QdcResult r = solve_qdc(inst, QdcConfig{opts.dc, opts.qmf});
    result = {std::move(r.solution), r.ledger};
    trace = std::move(r.trace);
  } else {
    result = a.objective == "osscm" ? solve_osscm(inst, algo, opts) : solve_with(inst, algo, opts);
  }
  out << "crossings: " << result.solution.crossings << "\n";
  out << "ordering: " << join(result.solution.ordering) << "\n";
  out << "ledger: " << result.ledger.to_json().dump() << "\n";
  if (trace) out << "trace: " << trace->to_json().dump() << "\n";

  if (a.verify) {
    if (inst.n_v() <= opts.limit.max_nv) {
      const Solution truth = solve_bruteforce(inst, opts.limit, Objective::osscm);
      if (truth.crossings != result.solution.crossings) {
        out << "verify: MISMATCH (bruteforce crossings " << truth.crossings << ")\n";
        return kVerifyMismatch;
      }
      out << "verify: ok (bruteforce crossings " << truth.crossings << ")\n";
    } else {
      out << "verify: skipped (n_v exceeds oracle limit " << opts.limit.max_nv << ")\n";
    }
  }
  return kOk;
}

inline int cmd_gen(const GenArgs& a, std::ostream& out) {
  GenSpec spec{a.n_u, a.n_v, a.edge_prob, a.colors, a.seed.value_or(default_seed(1))};
  const BipartiteInstance inst = generate_instance(spec);
  if (a.output.empty() || a.output == "-") {
    emit_instance(out, inst);
  } else {
    save_instance(a.output, inst);
  }
  return kOk;
}

struct BenchRow {
  std::string algo;
  std::size_t n = 0;
  std::uint64_t classical_cost = 0;
  std::uint64_t oracle_calls = 0;
  double wall_ms = 0.0;
};

inline BenchRow bench_row(const std::string& algo_name, std::size_t n, const BenchArgs& a) {
  const Algo algo = parse_algo(algo_name);
  BenchRow row{algo_name, n};
  QdpConfig qdp;
  qdp.alpha = a.alpha;
  const auto start = std::chrono::steady_clock::now();
  if (a.analytic) {
    switch (algo) {
      case Algo::dp: row.classical_cost = dp_recurrence_count(n); break;
      case Algo::dc: row.classical_cost = dc_node_count(n, a.base_size); break;
      case Algo::qdp: {
        const QdpCost c = qdp_cost_model(n, qdp);
        row.classical_cost = c.classical_cost;
        row.oracle_calls = c.quantum_calls;
        break;
      }
      case Algo::qdc:
        row.classical_cost = dc_node_count(n, a.base_size);
        row.oracle_calls = qdc_cost_model(n, a.base_size);
        break;
      default: fail(ErrorCode::invalid_argument, "bench supports dp, dc, qdp, qdc");
    }
  } else {
    GenSpec spec{a.n_u.value_or(n), n, a.edge_prob, 1, a.seed.value_or(default_seed(1)) + n};
    const BipartiteInstance inst = generate_instance(spec);
    SolverOptions opts;
    opts.dc.base_size = a.base_size;
    opts.dc.count_only = true;
    opts.qdp = qdp;
    const SolveOutcome r = solve_with(inst, algo, opts);
    switch (algo) {
      case Algo::dp: row.classical_cost = r.ledger.recurrence_evals; break;
      case Algo::dc: row.classical_cost = r.ledger.nodes; break;
      case Algo::qdp:
        row.classical_cost = r.ledger.recurrence_evals;
        row.oracle_calls = r.ledger.oracle_calls;
        break;
      case Algo::qdc:
        row.classical_cost = r.ledger.nodes;
        row.oracle_calls = r.ledger.oracle_calls;
        break;
      default: fail(ErrorCode::invalid_argument, "bench supports dp, dc, qdp, qdc");
    }
  }
  row.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

inline int cmd_bench(const BenchArgs& a, std::ostream& out) {
  if (a.n_min > a.n_max) fail(ErrorCode::invalid_argument, "n-min exceeds n-max");
  std::vector<BenchRow> rows;
  for (const std::string& algo : a.algos) {
    for (std::size_t n = a.n_min; n <= a.n_max; ++n) rows.push_back(bench_row(algo, n, a));
  }
  std::sort(rows.begin(), rows.end(), [](const BenchRow& x, const BenchRow& y) {
    return std::tie(x.algo, x.n) < std::tie(y.algo, y.n);
  });
  std::ofstream file;
  std::ostream* sink = &out;
  if (!a.output.empty() && a.output != "-") {
    file.open(a.output);
    if (!file) fail(ErrorCode::io, "cannot write '" + a.output + "'");
    sink = &file;
  }
  *sink << "algo,n,classical_cost,oracle_calls,wall_ms\n";
  for (const BenchRow& r : rows) {
    *sink << r.algo << ',' << r.n << ',' << r.classical_cost << ',' << r.oracle_calls << ','
          << std::fixed << std::setprecision(3) << r.wall_ms << '\n';
    sink->unsetf(std::ios::floatfield);
  }
  return kOk;
}

// Cost curves the growth report fits, one (n, cost) series per model.
inline std::vector<std::pair<std::string, std::vector<std::pair<double, double>>>> growth_curves(
    double alpha) {
  std::vector<std::pair<std::string, std::vector<std::pair<double, double>>>> curves;
  auto& dp_nodes = curves.emplace_back("dp_subproblems", std::vector<std::pair<double, double>>{}).second;
  for (std::size_t n = 12; n <= 24; ++n) dp_nodes.emplace_back(n, std::ldexp(1.0, static_cast<int>(n)));
  auto& dp_evals = curves.emplace_back("dp_recurrence_evals", std::vector<std::pair<double, double>>{}).second;
  for (std::size_t n = 12; n <= 24; ++n) dp_evals.emplace_back(n, static_cast<double>(dp_recurrence_count(n)));
  QdpConfig qdp;
  qdp.alpha = alpha;
  auto& q = curves.emplace_back("qdp_total", std::vector<std::pair<double, double>>{}).second;
  for (std::size_t n = 16; n <= 40; ++n) {
    const QdpCost c = qdp_cost_model(n, qdp);
    q.emplace_back(n, static_cast<double>(c.classical_cost + c.quantum_calls));
  }
  auto& dc = curves.emplace_back("dc_nodes", std::vector<std::pair<double, double>>{}).second;
  for (std::size_t n = 8; n <= 20; ++n) dc.emplace_back(n, static_cast<double>(dc_node_count(n, 2)));
  auto& qdc = curves.emplace_back("qdc_oracle_calls", std::vector<std::pair<double, double>>{}).second;
  for (std::size_t k = 8; k <= 32; ++k) qdc.emplace_back(k, static_cast<double>(qdc_cost_model(k, 2)));
  return curves;
}

inline int cmd_analyze(const std::string& what, const AnalyzeArgs& a, std::ostream& out) {
  out << std::setprecision(8);
  if (what == "entropy") {
    out << "H(" << a.p << ") = " << binary_entropy(a.p) << "\n";
  } else if (what == "alpha") {
    const double root = solve_balanced_alpha();
    out << "balanced alpha: " << root << "\n";
    out << "residual at alpha: " << alpha_balance_residual(root) << "\n";
    out << "residual at " << a.alpha << ": " << alpha_balance_residual(a.alpha) << "\n";
    out << "classical exponent H((1-alpha)/4): " << binary_entropy((1.0 - root) / 4.0) << "\n";
    out << "quantum exponent 3/4 + H(alpha)/8: " << 0.75 + binary_entropy(root) / 8.0 << "\n";
    out << "time base 2^H((1-alpha)/4): " << qdp_time_base(root) << "\n";
  } else if (what == "crossover") {
    out << "crossover k (c log n <= c n relaxation): " << fpt_crossover_k(a.n, a.c) << "\n";
    out << "crossover k (log-based, extension): " << fpt_crossover_k_tight(a.n, a.c) << "\n";
  } else if (what == "growth") {
    const auto curves = growth_curves(a.alpha);
    for (const auto& [name, points] : curves) {
      out << name << " fitted base over n in [" << points.front().first << ", "
          << points.back().first << "]: " << fit_exponent_base(points) << "\n";
    }
    if (!a.csv.empty()) {
      std::ofstream file(a.csv);
      if (!file) fail(ErrorCode::io, "cannot write '" + a.csv + "'");
      file << "model,n,cost\n" << std::setprecision(17);
      for (const auto& [name, points] : curves) {
        for (const auto& [n, cost] : points) file << name << ',' << n << ',' << cost << '\n';
      }
    }
  } else {
    fail(ErrorCode::invalid_argument, "unknown analysis '" + what + "'");
  }
  return kOk;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact one-sided crossing minimization with simulated quantum solvers"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "solve an instance file");
  s->add_option("--input,-i", solve.input, "instance file, '-' for stdin")->required();
  s->add_option("--algo", solve.algo, "bruteforce, dp, dc, qdp or qdc (dp or qdp for tlcm)");
  s->add_option("--objective", solve.objective, "oscm, osscm or tlcm");
  s->add_flag("--verify", solve.verify, "cross-check against the brute-force oracle");
  s->add_option("--alpha", solve.alpha, "qdp balance parameter");
  s->add_option("--base-size", solve.base_size, "dc/qdc base case size");
  s->add_option("--mode", solve.mode, "qmf simulation mode: cost_model or state_vector");
  s->add_option("--seed", solve.seed, "seed for state_vector sampling");
  s->add_option("--call-constant", solve.call_constant, "qmf call multiplier");
  s->add_option("--min-quantum-n", solve.min_quantum_n, "qdp classical fallback below this n_V");
  s->add_option("--max-nv", solve.max_nv, "oracle enumeration limit on n_V");
  s->add_option("--max-nu-tlcm", solve.max_nu_tlcm, "two-sided enumeration limit");
  s->add_flag("--trace", solve.trace, "print the qdc split trace as JSON");

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "generate a random bipartite instance");
  g->add_option("--nu", gen.n_u, "number of U-vertices");
  g->add_option("--nv", gen.n_v, "number of V-vertices");
  g->add_option("--p", gen.edge_prob, "edge probability");
  g->add_option("--colors", gen.colors, "number of edge colors");
  g->add_option("--seed", gen.seed, "RNG seed (default: OSCM_SEED or 1)");
  g->add_option("--output,-o", gen.output, "output file (default stdout)");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "ledger-based cost curves as CSV");
  b->add_option("--algo", bench.algos, "algorithms to run")->delimiter(',');
  b->add_option("--n-min", bench.n_min);
  b->add_option("--n-max", bench.n_max);
  b->add_option("--nu", bench.n_u, "U-side size (default n)");
  b->add_option("--p", bench.edge_prob);
  b->add_option("--seed", bench.seed);
  b->add_option("--alpha", bench.alpha);
  b->add_option("--base-size", bench.base_size);
  b->add_flag("--analytic", bench.analytic, "use the cost models instead of running solvers");
  b->add_option("--output,-o", bench.output);

  AnalyzeArgs analyze;
  std::string analysis;
  auto* an = app.add_subcommand("analyze", "complexity-constant reports");
  an->add_option("what", analysis, "entropy, alpha, crossover or growth")->required();
  an->add_option("--p", analyze.p);
  an->add_option("--n", analyze.n);
  an->add_option("--c", analyze.c);
  an->add_option("--alpha", analyze.alpha);
  an->add_option("--csv", analyze.csv, "write (n, cost) curves here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error[usage]: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (s->parsed()) return cmd_solve(solve, out);
    if (g->parsed()) return cmd_gen(gen, out);
    if (b->parsed()) return cmd_bench(bench, out);
    if (an->parsed()) return cmd_analyze(analysis, analyze, out);
  } catch (const Error& e) {
    err << "error[" << to_string(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error[internal]: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace oscm::cli
