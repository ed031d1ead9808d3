#pragma once

// Support sets A_k = { j : p(j|k) > eps } and the confusability graph.
//
// Convention: an EDGE joins two states whose supports intersect, i.e. states
// that can be confused. Zero-error codes are independent sets of this graph
// and of its strong powers. Two states without an edge ("non-adjacent") are
// perfectly distinguishable in one channel use.

#include <cstddef>
#include <vector>

#include "zecap/graph.hpp"
#include "zecap/quantum.hpp"

namespace zecap {

inline constexpr double kDefaultSupportEps = 1e-9;

struct SupportSet {
  std::size_t state_index = 0;
  std::vector<std::size_t> indices;  // sorted outcome indices, 0-based

  friend bool operator==(const SupportSet&, const SupportSet&) = default;
};

/// Ordered list of M states of a common dimension d with 1 <= M <= d, unless
/// built with allow_overcomplete.
class StateSet {
 public:
  explicit StateSet(std::vector<DensityMatrix> states, bool allow_overcomplete = false);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return states_.size(); }
  const DensityMatrix& operator[](std::size_t k) const { return states_[k]; }
  const std::vector<DensityMatrix>& states() const { return states_; }

 private:
  std::size_t dim_ = 0;
  std::vector<DensityMatrix> states_;
};

struct ConfusabilityGraph {
  Graph graph;
  std::vector<SupportSet> supports;
  std::vector<std::vector<double>> probabilities;  // p(j|k), row k
  double eps = kDefaultSupportEps;
  /// Number of probabilities in [eps/10, 10 eps]; nonzero means the graph
  /// may change under a small change of eps.
  std::size_t fragile_entries = 0;
};

/// {j : p_j > eps}. Throws EmptySupport if nothing survives.
SupportSet support_set(const ProbVector& p, double eps = kDefaultSupportEps, std::size_t state_index = 0);
SupportSet support_set(std::span<const double> p, double eps = kDefaultSupportEps, std::size_t state_index = 0);

/// True iff the two supports are disjoint.
bool non_adjacent(const SupportSet& a, const SupportSet& b);

ConfusabilityGraph confusability_graph(const QuantumChannel& ch, const StateSet& s, const Povm& p,
                                       double eps = kDefaultSupportEps, const Tolerances& tol = {});

/// Builds the graph from a precomputed probability table (rows = states).
ConfusabilityGraph confusability_graph(std::vector<std::vector<double>> probabilities,
                                       double eps = kDefaultSupportEps);

/// A channel has positive zero-error capacity for this (S, P) iff some pair
/// of states is non-adjacent, i.e. the graph is not complete.
bool has_positive_zero_error_capacity(const Graph& g);
bool has_positive_zero_error_capacity(const ConfusabilityGraph& g);

/// C(M, 2) - |E|.
std::size_t non_adjacent_pair_count(const Graph& g);
std::size_t non_adjacent_pair_count(const ConfusabilityGraph& g);

}  // namespace zecap
