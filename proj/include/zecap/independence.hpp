#pragma once

#include <cstddef>
#include <vector>

#include "zecap/graph.hpp"

namespace zecap {

/// Default cap on the vertex count for exact independence numbers.
inline constexpr std::size_t kMaxExactVertices = 64;

struct IndependentSet {
  std::size_t alpha = 0;
  std::vector<std::size_t> witness;  // sorted ascending, size == alpha
  std::size_t nodes = 0;             // search-tree nodes expanded
};

/// Exact maximum independent set by branch and bound: max clique search on
/// the complement with a greedy-colouring upper bound (MCQ style) and
/// degree-ordered branching. The search order is fixed, so the witness is
/// reproducible. Throws SizeLimit when the graph has more than max_vertices.
IndependentSet independence_number(const Graph& g, std::size_t max_vertices = kMaxExactVertices);

}  // namespace zecap
