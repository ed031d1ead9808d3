#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "zecap/adjacency.hpp"
#include "zecap/channel_spec.hpp"
#include "zecap/errors.hpp"
#include "zecap/random.hpp"

using namespace zecap;

namespace {

using Idx = std::vector<std::size_t>;

QuantumChannel fully_depolarizing() {
  const double h = 0.5;
  ComplexMatrix x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << 0, Complex(0, -1), Complex(0, 1), 0;
  z << 1, 0, 0, -1;
  return validate_channel({h * ComplexMatrix::Identity(2, 2), h * x, h * y, h * z});
}

StateSet basis_states(std::size_t d, std::size_t m) {
  std::vector<DensityMatrix> s;
  for (std::size_t k = 0; k < m; ++k) s.push_back(DensityMatrix::basis(d, k));
  return StateSet(std::move(s));
}

RealMatrix pentagon_w() {
  RealMatrix w(5, std::vector<double>(5, 0.0));
  for (std::size_t i = 0; i < 5; ++i) {
    w[i][i] = 0.5;
    w[i][(i + 1) % 5] = 0.5;
  }
  return w;
}

}  // namespace

TEST_CASE("support_set examples") {
  CHECK(support_set(ProbVector({1.0, 0.0}), 1e-9).indices == Idx{0});
  CHECK(support_set(ProbVector({0.5, 0.5}), 1e-9).indices == Idx{0, 1});
  CHECK(support_set(ProbVector({1e-12, 1 - 1e-12}), 1e-9).indices == Idx{1});
}

TEST_CASE("support_set throws when eps swallows every entry") {
  const std::vector<double> p{0.5, 0.5};
  CHECK_THROWS_AS(support_set(std::span<const double>(p), 0.6), EmptySupport);
}

TEST_CASE("non_adjacent examples") {
  auto s = [](Idx v) { return SupportSet{0, std::move(v)}; };
  CHECK(non_adjacent(s({0}), s({1})));
  CHECK_FALSE(non_adjacent(s({0, 1}), s({1, 2})));
  CHECK(non_adjacent(s({0, 2}), s({1, 3})));
  CHECK(non_adjacent(s({1, 3}), s({0, 2})));
}

TEST_CASE("confusability_graph: identity qubit with orthogonal states is edgeless") {
  const ConfusabilityGraph g = confusability_graph(QuantumChannel::identity(2), basis_states(2, 2), Povm::computational(2));
  CHECK(g.graph.vertex_count() == 2);
  CHECK(g.graph.edge_count() == 0);
  CHECK(g.supports[0].indices == Idx{0});
  CHECK(g.supports[1].indices == Idx{1});
  CHECK(has_positive_zero_error_capacity(g));
  CHECK(non_adjacent_pair_count(g) == 1);
}

TEST_CASE("confusability_graph: fully depolarizing qubit is complete") {
  const ConfusabilityGraph g = confusability_graph(fully_depolarizing(), basis_states(2, 2), Povm::computational(2));
  CHECK(g.graph.edge_count() == 1);
  CHECK(g.supports[0].indices == Idx{0, 1});
  CHECK_FALSE(has_positive_zero_error_capacity(g));
  CHECK(non_adjacent_pair_count(g) == 0);
}

TEST_CASE("confusability_graph: pentagon embedding gives C5 and p(j|i) = W(j|i)") {
  const RealMatrix w = pentagon_w();
  const ClassicalEmbedding emb = embed_classical(w);
  const ConfusabilityGraph g = confusability_graph(emb.channel, emb.states, emb.povm);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) CHECK(std::abs(g.probabilities[i][j] - w[i][j]) < 1e-12);
  // Inputs i, k share an output iff W rows overlap: |i - k| = 1 mod 5.
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t k = 0; k < 5; ++k) {
      bool share = false;
      for (std::size_t j = 0; j < 5; ++j) share = share || (w[i][j] > 0 && w[k][j] > 0);
      CHECK(g.graph.has_edge(i, k) == (i != k && share));
    }
  CHECK(g.graph == Graph::cycle(5));
  CHECK(has_positive_zero_error_capacity(g));
  CHECK(non_adjacent_pair_count(g) == 5);
}

TEST_CASE("non_adjacent_pair_count agrees with positive capacity on plain graphs") {
  CHECK(non_adjacent_pair_count(Graph::complete(3)) == 0);
  CHECK(non_adjacent_pair_count(Graph::edgeless(4)) == 6);
  CHECK(non_adjacent_pair_count(Graph::cycle(5)) == 5);
  CHECK_FALSE(has_positive_zero_error_capacity(Graph::complete(3)));
  CHECK(has_positive_zero_error_capacity(Graph::edgeless(2)));
  CHECK(has_positive_zero_error_capacity(Graph::cycle(5)));

  std::mt19937_64 rng(41);
  for (int k = 0; k < 200; ++k) {
    const Graph g = oracle::random_graph(1 + k % 7, 0.7, rng);
    CHECK(has_positive_zero_error_capacity(g) == (non_adjacent_pair_count(g) >= 1));
  }
}

TEST_CASE("graph from random channels is symmetric and matches support disjointness") {
  std::mt19937_64 rng(43);
  for (int k = 0; k < 50; ++k) {
    const std::size_t d = 2 + k % 3;
    const QuantumChannel ch = random_channel(d, 1 + k % 2, rng);
    std::vector<DensityMatrix> s;
    for (std::size_t m = 0; m < d; ++m) s.push_back(random_pure_state(d, rng));
    const ConfusabilityGraph g = confusability_graph(ch, StateSet(std::move(s)), random_general_povm(d, d + 2, rng), 0.05);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        CHECK(g.graph.has_edge(a, b) == g.graph.has_edge(b, a));
        if (a != b) CHECK(g.graph.has_edge(a, b) == !non_adjacent(g.supports[a], g.supports[b]));
      }
  }
}

TEST_CASE("identity channel with orthonormal states and the matching POVM is edgeless for every d") {
  std::mt19937_64 rng(47);
  for (std::size_t d = 1; d <= 8; ++d) {
    const ComplexMatrix u = random_unitary(d, rng);
    std::vector<DensityMatrix> s;
    for (std::size_t k = 0; k < d; ++k) s.push_back(DensityMatrix::pure(u.col(static_cast<Eigen::Index>(k))));
    const ConfusabilityGraph g = confusability_graph(QuantumChannel::identity(d), StateSet(std::move(s)), Povm::from_unitary(u));
    CHECK(g.graph.edge_count() == 0);
  }
}

TEST_CASE("StateSet enforces M <= d unless overcomplete") {
  std::vector<DensityMatrix> three{DensityMatrix::basis(2, 0), DensityMatrix::basis(2, 1), DensityMatrix::maximally_mixed(2)};
  CHECK_THROWS_AS(StateSet{three}, ValidationError);
  CHECK(StateSet(three, true).size() == 3);
  CHECK_THROWS_AS(StateSet({DensityMatrix::basis(2, 0), DensityMatrix::basis(3, 0)}), DimensionMismatch);
  CHECK_THROWS(StateSet(std::vector<DensityMatrix>{}));
}

TEST_CASE("fragile entries count probabilities near eps") {
  const ConfusabilityGraph g = confusability_graph({{1 - 3e-9, 3e-9}, {0.0, 1.0}}, 1e-9);
  CHECK(g.fragile_entries == 1);
  CHECK(g.graph.edge_count() == 1);
  const ConfusabilityGraph h = confusability_graph({{1 - 3e-9, 3e-9}, {0.0, 1.0}}, 1e-8);
  CHECK(h.graph.edge_count() == 0);
}
