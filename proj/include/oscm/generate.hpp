#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "oscm/bigraph.hpp"
#include "oscm/error.hpp"

namespace oscm {

struct GenSpec {
  std::size_t n_u = 1;
  std::size_t n_v = 1;
  double edge_prob = 0.5;
  std::size_t colors = 1;
  std::uint64_t seed = 1;

  void validate() const {
    if (n_u < 1 || n_v < 1) fail(ErrorCode::invalid_argument, "n_u and n_v must be at least 1");
    if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) {
      fail(ErrorCode::invalid_argument, "edge_prob must lie in [0, 1]");
    }
    if (colors < 1) fail(ErrorCode::invalid_argument, "colors must be at least 1");
  }
};

// Uniform double in [0, 1) from the top 53 bits; the mt19937_64 sequence is
// fixed by the standard, so this is reproducible across standard libraries.
inline double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Erdos-Renyi bipartite instance: each (u, v, color) triple is an edge
// independently with probability edge_prob.
inline BipartiteInstance generate_instance(const GenSpec& spec) {
  spec.validate();
  std::mt19937_64 rng(spec.seed);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < spec.n_u; ++u) {
    for (std::size_t v = 0; v < spec.n_v; ++v) {
      for (std::size_t c = 0; c < spec.colors; ++c) {
        if (unit_draw(rng) < spec.edge_prob) {
          edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v),
                           static_cast<std::uint32_t>(c)});
        }
      }
    }
  }
  return BipartiteInstance(spec.n_u, spec.n_v, std::move(edges), spec.colors);
}

// OSCM_SEED, when set to an unsigned integer, replaces default seeds.
inline std::uint64_t default_seed(std::uint64_t fallback) {
  if (const char* env = std::getenv("OSCM_SEED"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0') return v;
    fail(ErrorCode::invalid_argument, "OSCM_SEED must be an unsigned integer");
  }
  return fallback;
}

}  // namespace oscm
