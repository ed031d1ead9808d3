#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "zecap/graph.hpp"
#include "zecap/independence.hpp"
#include "zecap/theta.hpp"

namespace zecap {

/// One block length of the sweep. When the strong power was too large (or
/// some other step failed) `error` is set and alpha/rate are absent.
struct RateEntry {
  std::size_t n = 0;
  std::optional<std::size_t> alpha;
  std::optional<double> rate;  // bits per channel use: log2(alpha) / n
  std::vector<std::size_t> witness;
  std::optional<std::string> error;
};

struct CapacityBounds {
  std::vector<RateEntry> per_n;
  double best_lower = 0.0;              // max over computed rates
  std::optional<std::size_t> best_n;    // smallest n attaining best_lower
  std::optional<double> theta;          // theta(G)
  std::optional<double> theta_upper;    // log2 theta(G), bits per use
  std::optional<double> theta_gap;      // certified SDP gap
  std::optional<std::string> theta_error;
  /// best_lower <= theta_upper + tolerance. True when theta is unavailable.
  bool consistent = true;
};

struct CapacityOptions {
  std::size_t n_max = 2;
  std::size_t max_vertices = kMaxExactVertices;  // cap for exact alpha of G^n
  ThetaOptions theta;
  double sandwich_tol = 1e-6;
};

/// Lower bounds log2(alpha(G^n)) / n for n = 1..n_max and the upper bound
/// log2 theta(G). Failures are recorded per entry instead of thrown.
CapacityBounds capacity_bounds(const Graph& g, const CapacityOptions& opts = {});

}  // namespace zecap
