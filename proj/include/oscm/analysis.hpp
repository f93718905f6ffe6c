#pragma once

// Exponent arithmetic behind the running-time bounds, and a regression
// harness for cost curves.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "oscm/error.hpp"

namespace oscm {

inline constexpr double kQuantumDpBase = 1.728;

// H(p) = -p log2 p - (1-p) log2(1-p), with H(0) = H(1) = 0.
inline double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) fail(ErrorCode::invalid_argument, "binary_entropy needs p in [0, 1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

// Classical precompute exponent minus quantum exponent:
// H((1 - alpha)/4) - (3/4 + H(alpha)/8). Its root balances the two phases.
inline double alpha_balance_residual(double alpha) {
  if (!(alpha > 0.0 && alpha <= 0.5)) fail(ErrorCode::invalid_argument, "alpha must lie in (0, 0.5]");
  return binary_entropy((1.0 - alpha) / 4.0) - (0.75 + binary_entropy(alpha) / 8.0);
}

// Bisection for the balancing alpha on [lo, hi]; the residual must change
// sign across the bracket.
inline double solve_balanced_alpha(double lo = 0.01, double hi = 0.5, double tol = 1e-12) {
  double flo = alpha_balance_residual(lo);
  const double fhi = alpha_balance_residual(hi);
  if ((flo > 0.0) == (fhi > 0.0)) fail(ErrorCode::invalid_argument, "bracket does not straddle a root");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = alpha_balance_residual(mid);
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// 2^{H((1 - alpha)/4)}: the per-vertex base of the precompute phase.
inline double qdp_time_base(double alpha) { return std::exp2(binary_entropy((1.0 - alpha) / 4.0)); }

// Crossing count above which the quantum DP beats the O(k 2^sqrt(2k) + n)
// parameterized algorithm: ceil(a^2/2 * n^2) with a = c + log2(1.728),
// taking poly(n) <= n^c and c log n <= c n.
inline std::uint64_t fpt_crossover_k(std::size_t n, double c) {
  if (n < 1 || c < 0.0) fail(ErrorCode::invalid_argument, "fpt_crossover_k needs n >= 1, c >= 0");
  const double a = c + std::log2(kQuantumDpBase);
  const double nn = static_cast<double>(n);
  return static_cast<std::uint64_t>(std::ceil(a * a / 2.0 * nn * nn));
}

// Same comparison without the c log n <= c n relaxation:
// ceil((c log2 n + n log2 1.728)^2 / 2).
inline std::uint64_t fpt_crossover_k_tight(std::size_t n, double c) {
  if (n < 1 || c < 0.0) fail(ErrorCode::invalid_argument, "fpt_crossover_k needs n >= 1, c >= 0");
  const double nn = static_cast<double>(n);
  const double exponent = c * std::log2(nn) + nn * std::log2(kQuantumDpBase);
  return static_cast<std::uint64_t>(std::ceil(exponent * exponent / 2.0));
}

// Least-squares slope of log2(cost) against n, returned as the base 2^slope.
inline double fit_exponent_base(std::span<const std::pair<double, double>> points) {
  if (points.size() < 4) fail(ErrorCode::invalid_argument, "need at least 4 points to fit a base");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!(points[i].second > 0.0) || !std::isfinite(points[i].second)) {
      fail(ErrorCode::invalid_argument, "costs must be positive and finite");
    }
    if (i > 0 && !(points[i].first > points[i - 1].first)) {
      fail(ErrorCode::invalid_argument, "sizes must be strictly increasing");
    }
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(points.size());
  for (const auto& [n, cost] : points) {
    const double y = std::log2(cost);
    sx += n;
    sy += y;
    sxx += n * n;
    sxy += n * y;
  }
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return std::exp2(slope);
}

inline double fit_exponent_base(const std::vector<std::pair<double, double>>& points) {
  return fit_exponent_base(std::span<const std::pair<double, double>>(points));
}

}  // namespace oscm
