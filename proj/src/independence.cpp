#include "zecap/independence.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "zecap/errors.hpp"

namespace zecap {

namespace {

class Bitset {
 public:
  explicit Bitset(std::size_t n = 0) : words_((n + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

  bool any() const {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// Lowest set bit; requires any().
  std::size_t first() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
    return words_.size() * 64;
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  void and_not(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
  }

 private:
  std::vector<std::uint64_t> words_;
};

// Max clique on the compatibility graph (complement of the confusability graph).
class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : n_(g.vertex_count()) {
    // Order vertices by compatibility degree, highest first; ties by index.
    std::vector<std::size_t> compat_degree(n_);
    for (std::size_t v = 0; v < n_; ++v) compat_degree[v] = n_ - 1 - g.degree(v);
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return compat_degree[a] > compat_degree[b]; });

    compat_.assign(n_, Bitset(n_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (i != j && !g.has_edge(order_[i], order_[j])) compat_[i].set(j);
  }

  IndependentSet run() {
    // Greedy seed so the first branches already prune.
    Bitset cand(n_);
    for (std::size_t i = 0; i < n_; ++i) cand.set(i);
    std::vector<std::size_t> greedy;
    Bitset rest = cand;
    while (rest.any()) {
      const std::size_t v = rest.first();
      greedy.push_back(v);
      rest &= compat_[v];
    }
    best_ = greedy;

    std::vector<std::size_t> current;
    expand(current, cand);

    IndependentSet out;
    out.alpha = best_.size();
    for (auto i : best_) out.witness.push_back(order_[i]);
    std::sort(out.witness.begin(), out.witness.end());
    out.nodes = nodes_;
    return out;
  }

 private:
  // Greedy sequential colouring of `cand`; returns vertices in colour order
  // with the colour (1-based) of each.
  void colour_sort(const Bitset& cand, std::vector<std::size_t>& verts, std::vector<std::size_t>& colours) const {
    verts.clear();
    colours.clear();
    Bitset uncoloured = cand;
    std::size_t colour = 0;
    while (uncoloured.any()) {
      ++colour;
      Bitset q = uncoloured;
      while (q.any()) {
        const std::size_t v = q.first();
        q.reset(v);
        q.and_not(compat_[v]);  // same colour class must be pairwise incompatible
        uncoloured.reset(v);
        verts.push_back(v);
        colours.push_back(colour);
      }
    }
  }

  void expand(std::vector<std::size_t>& current, Bitset cand) {
    ++nodes_;
    std::vector<std::size_t> verts;
    std::vector<std::size_t> colours;
    colour_sort(cand, verts, colours);
    for (std::size_t k = verts.size(); k-- > 0;) {
      if (current.size() + colours[k] <= best_.size()) return;
      const std::size_t v = verts[k];
      current.push_back(v);
      Bitset next = cand;
      next &= compat_[v];
      if (next.any()) {
        expand(current, next);
      } else if (current.size() > best_.size()) {
        best_ = current;
      }
      current.pop_back();
      cand.reset(v);
    }
  }

  std::size_t n_;
  std::vector<std::size_t> order_;
  std::vector<Bitset> compat_;
  std::vector<std::size_t> best_;
  std::size_t nodes_ = 0;
};

}  // namespace

IndependentSet independence_number(const Graph& g, std::size_t max_vertices) {
  if (g.vertex_count() > max_vertices) throw SizeLimit("exact independence number", g.vertex_count(), max_vertices);
  if (g.vertex_count() == 0) return {};
  IndependentSet out = CliqueSearch(g).run();
  // Cheap exact re-check of the witness.
  if (!g.is_independent(out.witness) || out.witness.size() != out.alpha)
    throw Error("internal error: independence witness is not independent");
  return out;
}

}  // namespace zecap
