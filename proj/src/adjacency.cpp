#include "zecap/adjacency.hpp"

#include <stdexcept>
#include <string>

#include "zecap/errors.hpp"

namespace zecap {

StateSet::StateSet(std::vector<DensityMatrix> states, bool allow_overcomplete) : states_(std::move(states)) {
  if (states_.empty()) throw ValidationError("state set is empty");
  dim_ = states_.front().dim();
  for (const auto& s : states_)
    if (s.dim() != dim_) throw DimensionMismatch("states in a state set must share one dimension");
  if (!allow_overcomplete && states_.size() > dim_)
    throw ValidationError("state set has " + std::to_string(states_.size()) + " states in dimension " +
                          std::to_string(dim_) + " (M <= d required; use overcomplete mode to lift)");
}

SupportSet support_set(std::span<const double> p, double eps, std::size_t state_index) {
  if (eps < 0.0) throw std::invalid_argument("support threshold must be non-negative");
  SupportSet out;
  out.state_index = state_index;
  for (std::size_t j = 0; j < p.size(); ++j)
    if (p[j] > eps) out.indices.push_back(j);
  if (out.indices.empty())
    throw EmptySupport("state " + std::to_string(state_index) + " has no outcome above eps " + std::to_string(eps));
  return out;
}

SupportSet support_set(const ProbVector& p, double eps, std::size_t state_index) {
  return support_set(p.values(), eps, state_index);
}

bool non_adjacent(const SupportSet& a, const SupportSet& b) {
  auto i = a.indices.begin();
  auto j = b.indices.begin();
  while (i != a.indices.end() && j != b.indices.end()) {
    if (*i == *j) return false;
    if (*i < *j)
      ++i;
    else
      ++j;
  }
  return true;
}

ConfusabilityGraph confusability_graph(std::vector<std::vector<double>> probabilities, double eps) {
  ConfusabilityGraph out;
  out.eps = eps;
  const std::size_t m = probabilities.size();
  out.graph = Graph(m);
  out.supports.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    out.supports.push_back(support_set(probabilities[k], eps, k));
    for (double p : probabilities[k])
      if (p >= eps / 10.0 && p <= eps * 10.0) ++out.fragile_entries;
  }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (!non_adjacent(out.supports[a], out.supports[b])) out.graph.add_edge(a, b);
  out.probabilities = std::move(probabilities);
  return out;
}

ConfusabilityGraph confusability_graph(const QuantumChannel& ch, const StateSet& s, const Povm& p, double eps,
                                       const Tolerances& tol) {
  if (ch.dim() != s.dim() || ch.dim() != p.dim())
    throw DimensionMismatch("channel, state set and POVM dimensions differ");
  std::vector<std::vector<double>> table;
  table.reserve(s.size());
  for (const auto& rho : s.states()) {
    const ProbVector row = outcome_probabilities(ch, rho, p, tol);
    table.emplace_back(row.values().begin(), row.values().end());
  }
  return confusability_graph(std::move(table), eps);
}

std::size_t non_adjacent_pair_count(const Graph& g) {
  const std::size_t m = g.vertex_count();
  return m * (m - (m > 0 ? 1 : 0)) / 2 - g.edge_count();
}

std::size_t non_adjacent_pair_count(const ConfusabilityGraph& g) { return non_adjacent_pair_count(g.graph); }

bool has_positive_zero_error_capacity(const Graph& g) { return non_adjacent_pair_count(g) > 0; }

bool has_positive_zero_error_capacity(const ConfusabilityGraph& g) {
  return has_positive_zero_error_capacity(g.graph);
}

}  // namespace zecap
