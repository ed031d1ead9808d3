#pragma once

// Heuristic search for a state set S and POVM P that maximise the number of
// non-adjacent (perfectly distinguishable) state pairs.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "zecap/adjacency.hpp"
#include "zecap/quantum.hpp"

namespace zecap {

enum class SearchObjective { PairCount, PairCountThenAlpha };

struct SearchConfig {
  std::size_t M = 2;
  std::size_t restarts = 32;
  std::size_t iterations = 2000;
  std::uint64_t seed = 7;
  double step = 0.3;  // magnitude of the random unitary perturbations
  double eps = kDefaultSupportEps;
  SearchObjective objective = SearchObjective::PairCount;
  bool general_povm = false;
  std::size_t povm_outcomes = 0;  // general mode only; 0 means d
  bool allow_overcomplete = false;
  std::size_t threads = 1;  // restarts run concurrently up to this many
};

/// Best objective seen so far within one restart, recorded at each improvement.
struct TracePoint {
  std::size_t iteration = 0;
  std::size_t pair_count = 0;
  std::size_t alpha = 0;
};

struct SearchResult {
  StateSet best_states;
  Povm best_povm;
  ConfusabilityGraph graph;
  std::size_t pair_count = 0;
  std::size_t alpha_1 = 0;
  std::size_t best_restart = 0;
  std::vector<std::vector<TracePoint>> history;  // one trace per restart
};

/// Throws std::invalid_argument when cfg is unusable for dimension d.
void validate_search_config(const SearchConfig& cfg, std::size_t d);

StateSet random_pure_state_set(std::size_t d, std::size_t M, std::uint64_t seed);
Povm random_projective_povm(std::size_t d, std::uint64_t seed);

/// Simulated annealing over pure states and rank-1 POVMs (projective unless
/// cfg.general_povm). Moves are small random unitary rotations of one state
/// or of the measurement, plus "snap" moves that put a state in the
/// lowest-eigenvalue eigenspace of the Heisenberg-picture effect of other
/// states' supports, or align the measurement with an output eigenbasis.
/// Restart r uses seed cfg.seed + r; the result only depends on (ch, cfg).
SearchResult optimize_pair(const QuantumChannel& ch, const SearchConfig& cfg);

}  // namespace zecap
