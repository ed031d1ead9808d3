#include "zecap/graph.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "zecap/errors.hpp"

namespace zecap {

Graph::Graph(std::size_t vertex_count) : v_(vertex_count), adj_(vertex_count * vertex_count, 0) {}

Graph Graph::complete(std::size_t v) {
  Graph g(v);
  for (std::size_t a = 0; a < v; ++a)
    for (std::size_t b = a + 1; b < v; ++b) g.add_edge(a, b);
  return g;
}

Graph Graph::edgeless(std::size_t v) { return Graph(v); }

Graph Graph::cycle(std::size_t v) {
  Graph g(v);
  if (v < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  for (std::size_t a = 0; a < v; ++a) g.add_edge(a, (a + 1) % v);
  return g;
}

Graph Graph::from_edges(std::size_t v, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  Graph g(v);
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

void Graph::add_edge(std::size_t a, std::size_t b) {
  if (a >= v_ || b >= v_) throw std::invalid_argument("edge endpoint out of range");
  if (a == b) throw std::invalid_argument("self-loop on vertex " + std::to_string(a));
  adj_[a * v_ + b] = 1;
  adj_[b * v_ + a] = 1;
}

void Graph::remove_edge(std::size_t a, std::size_t b) {
  if (a >= v_ || b >= v_) throw std::invalid_argument("edge endpoint out of range");
  adj_[a * v_ + b] = 0;
  adj_[b * v_ + a] = 0;
}

std::size_t Graph::degree(std::size_t a) const {
  std::size_t deg = 0;
  for (std::size_t b = 0; b < v_; ++b) deg += adj_[a * v_ + b];
  return deg;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (auto x : adj_) total += x;
  return total / 2;
}

std::vector<std::size_t> Graph::neighbors(std::size_t a) const {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < v_; ++b)
    if (adj_[a * v_ + b]) out.push_back(b);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < v_; ++a)
    for (std::size_t b = a + 1; b < v_; ++b)
      if (has_edge(a, b)) out.emplace_back(a, b);
  return out;
}

Graph Graph::complement() const {
  Graph g(v_);
  for (std::size_t a = 0; a < v_; ++a)
    for (std::size_t b = a + 1; b < v_; ++b)
      if (!has_edge(a, b)) g.add_edge(a, b);
  return g;
}

Graph Graph::relabeled(const std::vector<std::size_t>& perm) const {
  if (perm.size() != v_) throw std::invalid_argument("permutation size mismatch");
  Graph g(v_);
  for (auto [a, b] : edges()) g.add_edge(perm[a], perm[b]);
  return g;
}

bool Graph::is_independent(const std::vector<std::size_t>& vertices) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i] == vertices[j] || has_edge(vertices[i], vertices[j])) return false;
  return true;
}

std::size_t saturating_pow(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<std::size_t>::max() / base) return std::numeric_limits<std::size_t>::max();
    out *= base;
  }
  return out;
}

Graph strong_product(const Graph& g, const Graph& h, std::size_t max_vertices) {
  const std::size_t vg = g.vertex_count();
  const std::size_t vh = h.vertex_count();
  if (vh != 0 && vg > std::numeric_limits<std::size_t>::max() / vh)
    throw SizeLimit("strong product", std::numeric_limits<std::size_t>::max(), max_vertices);
  const std::size_t total = vg * vh;
  if (total > max_vertices) throw SizeLimit("strong product", total, max_vertices);

  Graph out(total);
  for (std::size_t u1 = 0; u1 < vg; ++u1) {
    for (std::size_t u2 = u1; u2 < vg; ++u2) {
      if (u1 != u2 && !g.has_edge(u1, u2)) continue;
      for (std::size_t v1 = 0; v1 < vh; ++v1) {
        for (std::size_t v2 = 0; v2 < vh; ++v2) {
          if (v1 != v2 && !h.has_edge(v1, v2)) continue;
          if (u1 == u2 && v1 >= v2) continue;  // each unordered pair once, no loops
          out.add_edge(u1 * vh + v1, u2 * vh + v2);
        }
      }
    }
  }
  return out;
}

Graph strong_power(const Graph& g, std::size_t n, std::size_t max_vertices) {
  if (n == 0) throw std::invalid_argument("strong power needs n >= 1");
  const std::size_t total = saturating_pow(g.vertex_count(), n);
  if (total > max_vertices) throw SizeLimit("strong power", total, max_vertices);
  Graph out = g;
  for (std::size_t k = 1; k < n; ++k) out = strong_product(out, g, max_vertices);
  return out;
}

std::vector<std::size_t> power_vertex_tuple(std::size_t vertex, std::size_t base, std::size_t n) {
  std::vector<std::size_t> tuple(n, 0);
  for (std::size_t t = n; t-- > 0;) {
    tuple[t] = vertex % base;
    vertex /= base;
  }
  return tuple;
}

std::size_t power_vertex_index(const std::vector<std::size_t>& tuple, std::size_t base) {
  std::size_t idx = 0;
  for (auto digit : tuple) idx = idx * base + digit;
  return idx;
}

}  // namespace zecap
