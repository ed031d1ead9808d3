#pragma once

#include <cstddef>

#include "zecap/graph.hpp"

namespace zecap {

inline constexpr std::size_t kMaxSdpVertices = 100;

struct ThetaOptions {
  double tol = 1e-6;
  std::size_t max_iterations = 50000;
  std::size_t max_vertices = kMaxSdpVertices;
};

/// Result of the theta SDP.
///
/// `lower` is the objective of an exactly feasible primal matrix B (PSD,
/// unit trace, zero on every edge) and `upper` is lambda_max of the dual
/// matrix J + sum_{ij in E} y_ij (e_i e_j^T + e_j e_i^T), so
/// lower <= theta(G) <= upper holds up to eigensolver roundoff. `value` is
/// the upper bound.
struct ThetaResult {
  double value = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double gap = 0.0;  // upper - lower
  std::size_t iterations = 0;
};

/// Lovasz theta: max sum_ij B_ij over B PSD, tr B = 1, B_ij = 0 on edges.
///
/// Solved by ADMM on the dual (Wen, Goldfarb, Yin), with the PSD cone handled
/// by eigendecomposition. Stops once the certified gap, the primal residual
/// and the dual residual are all below tol. Throws NotConverged after
/// max_iterations and SizeLimit above max_vertices.
ThetaResult lovasz_theta(const Graph& g, const ThetaOptions& opts = {});

}  // namespace zecap
