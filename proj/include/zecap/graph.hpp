#pragma once

// Simple undirected graphs in which an edge means "confusable", plus strong
// products and powers.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace zecap {

/// Default cap on the vertex count of a strong product.
inline constexpr std::size_t kMaxProductVertices = 4096;

class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);

  static Graph complete(std::size_t v);
  static Graph edgeless(std::size_t v);
  static Graph cycle(std::size_t v);
  /// Builds from an unordered edge list; throws std::invalid_argument on
  /// self-loops or out-of-range endpoints.
  static Graph from_edges(std::size_t v, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t vertex_count() const { return v_; }
  bool has_edge(std::size_t a, std::size_t b) const { return adj_[a * v_ + b] != 0; }
  /// Adds the edge {a, b}; a == b is rejected.
  void add_edge(std::size_t a, std::size_t b);
  void remove_edge(std::size_t a, std::size_t b);

  std::size_t degree(std::size_t a) const;
  std::size_t edge_count() const;
  /// Sorted neighbor list of a.
  std::vector<std::size_t> neighbors(std::size_t a) const;
  /// Edges {a, b} with a < b in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  Graph complement() const;
  /// Graph with vertex i renamed to perm[i].
  Graph relabeled(const std::vector<std::size_t>& perm) const;

  /// True iff no two vertices of the set are joined by an edge.
  bool is_independent(const std::vector<std::size_t>& vertices) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t v_ = 0;
  std::vector<std::uint8_t> adj_;
};

/// G x H with (u1,v1) ~ (u2,v2) iff each coordinate is equal or adjacent and
/// the pairs differ. Vertex (u, v) gets index u * |H| + v.
Graph strong_product(const Graph& g, const Graph& h, std::size_t max_vertices = kMaxProductVertices);

/// n-fold strong power; vertices are tuples in lexicographic order, so vertex
/// index k spells its tuple in base |G|, most significant coordinate first.
Graph strong_power(const Graph& g, std::size_t n, std::size_t max_vertices = kMaxProductVertices);

/// Digits of a strong-power vertex index.
std::vector<std::size_t> power_vertex_tuple(std::size_t vertex, std::size_t base, std::size_t n);
std::size_t power_vertex_index(const std::vector<std::size_t>& tuple, std::size_t base);

/// Integer power with overflow saturation at SIZE_MAX.
std::size_t saturating_pow(std::size_t base, std::size_t exp);

}  // namespace zecap
