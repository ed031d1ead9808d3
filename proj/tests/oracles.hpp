#pragma once

// Reference implementations for the tests. Each one takes the slow, obvious
// route so it shares no code path with the library routine it checks.

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "zecap/graph.hpp"

namespace oracle {

using Adjacency = std::vector<std::vector<bool>>;

inline Adjacency adjacency_of(const zecap::Graph& g) {
  const std::size_t v = g.vertex_count();
  Adjacency a(v, std::vector<bool>(v, false));
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < v; ++j) a[i][j] = g.has_edge(i, j);
  return a;
}

// Largest independent set by enumerating every subset. Keep V <= ~20.
inline std::size_t brute_force_alpha(const zecap::Graph& g) {
  const std::size_t v = g.vertex_count();
  const Adjacency a = adjacency_of(g);
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << v); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size <= best) continue;
    bool ok = true;
    for (std::size_t i = 0; i < v && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      for (std::size_t j = i + 1; j < v && ok; ++j)
        if ((mask >> j & 1) && a[i][j]) ok = false;
    }
    if (ok) best = size;
  }
  return best;
}

// Include/exclude recursion over vertices in index order. The only pruning is
// "chosen + undecided <= best", so it is exhaustive over all 2^V branches that
// could still win.
inline std::size_t pruned_exhaustive_alpha(const zecap::Graph& g) {
  const std::size_t v = g.vertex_count();
  const Adjacency a = adjacency_of(g);
  std::vector<std::size_t> chosen;
  std::size_t best = 0;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (chosen.size() + (v - i) <= best) return;
    if (i == v) {
      best = chosen.size();
      return;
    }
    bool free = true;
    for (std::size_t c : chosen)
      if (a[c][i]) free = false;
    if (free) {
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
    }
    self(self, i + 1);
  };
  rec(rec, 0);
  return best;
}

// Strong product by listing, for each vertex (u, v), the closed neighbourhoods
// N[u] x N[v] minus the vertex itself. Index of (u, v) is u * |H| + v.
inline Adjacency strong_product(const zecap::Graph& g, const zecap::Graph& h) {
  const std::size_t gv = g.vertex_count(), hv = h.vertex_count();
  Adjacency out(gv * hv, std::vector<bool>(gv * hv, false));
  for (std::size_t u = 0; u < gv; ++u) {
    for (std::size_t v = 0; v < hv; ++v) {
      std::vector<std::size_t> nu{u}, nv{v};
      for (std::size_t x = 0; x < gv; ++x)
        if (g.has_edge(u, x)) nu.push_back(x);
      for (std::size_t y = 0; y < hv; ++y)
        if (h.has_edge(v, y)) nv.push_back(y);
      for (std::size_t x : nu)
        for (std::size_t y : nv)
          if (x != u || y != v) out[u * hv + v][x * hv + y] = true;
    }
  }
  return out;
}

// Two tuples are confusable in G^n iff every coordinate is equal or adjacent.
inline bool tuples_confusable(const zecap::Graph& g, const std::vector<std::size_t>& a,
                              const std::vector<std::size_t>& b) {
  for (std::size_t t = 0; t < a.size(); ++t)
    if (a[t] != b[t] && !g.has_edge(a[t], b[t])) return false;
  return true;
}

inline bool independent_in_power(const zecap::Graph& g, const std::vector<std::vector<std::size_t>>& words) {
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      if (words[i] != words[j] && tuples_confusable(g, words[i], words[j])) return false;
  return true;
}

// Classical channel whose confusability graph is exactly g: input v emits its
// private symbol v or the symbol of any incident edge, uniformly.
inline std::vector<std::vector<double>> channel_realizing(const zecap::Graph& g) {
  const std::size_t v = g.vertex_count();
  const auto edges = g.edges();
  std::vector<std::vector<double>> w(v, std::vector<double>(v + edges.size(), 0.0));
  for (std::size_t i = 0; i < v; ++i) {
    std::vector<std::size_t> outs{i};
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (edges[e].first == i || edges[e].second == i) outs.push_back(v + e);
    for (std::size_t j : outs) w[i][j] = 1.0 / static_cast<double>(outs.size());
  }
  return w;
}

inline zecap::Graph random_graph(std::size_t v, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  zecap::Graph g(v);
  for (std::size_t a = 0; a < v; ++a)
    for (std::size_t b = a + 1; b < v; ++b)
      if (coin(rng)) g.add_edge(a, b);
  return g;
}

using C = std::complex<double>;
using Mat2 = std::array<std::array<C, 2>, 2>;

// sum_k K rho K^dagger written out entry by entry for 2x2 matrices.
inline Mat2 apply_kraus_2x2(const std::vector<Mat2>& kraus, const Mat2& rho) {
  Mat2 out{};
  for (const Mat2& k : kraus)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b) out[i][j] += k[i][a] * rho[a][b] * std::conj(k[j][b]);
  return out;
}

}  // namespace oracle
