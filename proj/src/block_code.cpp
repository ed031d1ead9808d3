#include "zecap/block_code.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <set>
#include <stdexcept>

#include "zecap/errors.hpp"
#include "zecap/graph.hpp"

namespace zecap {

namespace {

std::vector<SupportSet> per_use_supports(const QuantumBlockCode& code, const QuantumChannel& ch,
                                         std::vector<std::vector<double>>* probs = nullptr) {
  std::vector<SupportSet> out;
  out.reserve(code.source.size());
  for (std::size_t k = 0; k < code.source.size(); ++k) {
    const ProbVector p = outcome_probabilities(ch, code.source[k], code.povm);
    out.push_back(support_set(p, code.eps, k));
    if (probs) probs->emplace_back(p.values().begin(), p.values().end());
  }
  return out;
}

// Odometer over the Cartesian product of the given index lists.
template <typename Fn>
void for_each_product(const std::vector<const std::vector<std::size_t>*>& factors, Fn&& fn) {
  const std::size_t n = factors.size();
  std::vector<std::size_t> pos(n, 0);
  OutputWord w(n);
  for (const auto* f : factors)
    if (f->empty()) return;
  while (true) {
    for (std::size_t t = 0; t < n; ++t) w[t] = (*factors[t])[pos[t]];
    fn(w);
    std::size_t t = n;
    while (t-- > 0) {
      if (++pos[t] < factors[t]->size()) break;
      pos[t] = 0;
      if (t == 0) return;
    }
    if (n == 0) return;
  }
}

}  // namespace

double QuantumBlockCode::rate() const {
  if (codewords.empty() || n == 0) return 0.0;
  return std::log2(static_cast<double>(codewords.size())) / static_cast<double>(n);
}

QuantumBlockCode make_code(const StateSet& s, const Povm& p, std::size_t n, std::vector<Codeword> codewords,
                           double eps) {
  if (n == 0) throw std::invalid_argument("block length must be at least 1");
  if (s.dim() != p.dim()) throw DimensionMismatch("state set and POVM dimensions differ");
  for (const auto& c : codewords) {
    if (c.size() != n) throw std::invalid_argument("codeword length differs from block length");
    for (auto k : c)
      if (k >= s.size()) throw std::invalid_argument("codeword entry out of range");
  }
  std::sort(codewords.begin(), codewords.end());
  codewords.erase(std::unique(codewords.begin(), codewords.end()), codewords.end());
  return QuantumBlockCode{n, std::move(codewords), s, p, eps};
}

QuantumBlockCode build_code(const ConfusabilityGraph& g, const StateSet& s, const Povm& p, std::size_t n,
                            std::size_t max_vertices) {
  if (g.graph.vertex_count() != s.size()) throw DimensionMismatch("graph does not match the state set");
  const Graph power = strong_power(g.graph, n, max_vertices);
  const IndependentSet is = independence_number(power, max_vertices);
  std::vector<Codeword> words;
  words.reserve(is.alpha);
  for (auto v : is.witness) words.push_back(power_vertex_tuple(v, s.size(), n));
  return make_code(s, p, n, std::move(words), g.eps);
}

std::vector<std::vector<OutputWord>> reachable_supports(const QuantumBlockCode& code, const QuantumChannel& ch,
                                                        std::size_t max_words) {
  const std::vector<SupportSet> supports = per_use_supports(code, ch);
  std::vector<std::vector<OutputWord>> out;
  out.reserve(code.size());
  for (const auto& c : code.codewords) {
    std::vector<const std::vector<std::size_t>*> factors;
    std::size_t count = 1;
    for (auto k : c) {
      factors.push_back(&supports[k].indices);
      const std::size_t f = supports[k].indices.size();
      count = count > max_words / f ? max_words + 1 : count * f;
    }
    if (count > max_words) throw SizeLimit("reachable output words of one codeword", count, max_words);
    std::vector<OutputWord> words;
    words.reserve(count);
    for_each_product(factors, [&](const OutputWord& w) { words.push_back(w); });
    out.push_back(std::move(words));
  }
  return out;
}

std::optional<std::size_t> DecoderTable::decode(const OutputWord& w) const {
  const auto it = table_.find(w);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

DecoderTable build_decoder(const QuantumBlockCode& code, const QuantumChannel& ch) {
  const auto supports = reachable_supports(code, ch);
  std::map<OutputWord, std::size_t> table;
  for (std::size_t k = 0; k < supports.size(); ++k) {
    const std::size_t message = k + 1;
    for (const auto& w : supports[k]) {
      const auto [it, inserted] = table.emplace(w, message);
      if (!inserted) throw AmbiguousSupports(it->second, message);
    }
  }
  return DecoderTable(std::move(table), saturating_pow(code.povm.size(), code.n));
}

ZeroErrorReport verify_zero_error(const QuantumBlockCode& code, const QuantumChannel& ch, const VerifyOptions& opts) {
  ZeroErrorReport rep;
  rep.eps = code.eps;
  const std::size_t n = code.n;
  const std::size_t outcomes = code.povm.size();

  // Product path: per-use probabilities, words = Cartesian products.
  std::vector<std::vector<double>> probs;
  const std::vector<SupportSet> supports = per_use_supports(code, ch, &probs);
  std::vector<std::set<OutputWord>> product_sets;
  for (const auto& c : code.codewords) {
    std::vector<const std::vector<std::size_t>*> factors;
    for (auto k : c) factors.push_back(&supports[k].indices);
    std::set<OutputWord> words;
    for_each_product(factors, [&](const OutputWord& w) { words.insert(w); });
    product_sets.push_back(std::move(words));
  }

  // Tensor path, only at small sizes.
  std::vector<std::set<OutputWord>> tensor_sets;
  const std::size_t big_dim = saturating_pow(ch.dim(), n);
  const std::size_t big_kraus = saturating_pow(ch.kraus().size(), n);
  const std::size_t all_words = saturating_pow(outcomes, n);
  if (big_dim <= opts.max_tensor_dim && big_kraus <= opts.max_tensor_kraus && all_words <= opts.max_tensor_words) {
    rep.tensor_path_checked = true;
    // n-fold product Kraus operators and POVM elements.
    std::vector<ComplexMatrix> kraus = {ComplexMatrix::Identity(1, 1)};
    for (std::size_t t = 0; t < n; ++t) {
      std::vector<ComplexMatrix> next;
      next.reserve(kraus.size() * ch.kraus().size());
      for (const auto& a : kraus)
        for (const auto& b : ch.kraus()) next.push_back(kron(a, b));
      kraus = std::move(next);
    }
    const QuantumChannel product_channel(big_dim, std::move(kraus), Unchecked{});

    std::vector<ComplexMatrix> effects;
    effects.reserve(all_words);
    for (std::size_t idx = 0; idx < all_words; ++idx) {
      const OutputWord w = power_vertex_tuple(idx, outcomes, n);
      ComplexMatrix e = ComplexMatrix::Identity(1, 1);
      for (auto j : w) e = kron(e, code.povm[j]);
      effects.push_back(std::move(e));
    }
    const Povm product_povm(big_dim, std::move(effects), Unchecked{});

    for (const auto& c : code.codewords) {
      DensityMatrix rho = code.source[c[0]];
      for (std::size_t t = 1; t < n; ++t) rho = tensor(rho, code.source[c[t]]);
      const ProbVector p = outcome_probabilities(product_channel, rho, product_povm);
      std::set<OutputWord> words;
      for (std::size_t idx = 0; idx < all_words; ++idx)
        if (p[idx] > code.eps) words.insert(power_vertex_tuple(idx, outcomes, n));
      tensor_sets.push_back(std::move(words));
    }
    rep.tensor_matches_product = tensor_sets == product_sets;
  }

  auto word_probability = [&](const Codeword& c, const OutputWord& w) {
    double p = 1.0;
    for (std::size_t t = 0; t < n; ++t) p *= probs[c[t]][w[t]];
    return p;
  };

  bool product_disjoint = true;
  bool tensor_disjoint = true;
  const std::size_t k = code.size();
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      std::vector<OutputWord> shared;
      std::set_intersection(product_sets[a].begin(), product_sets[a].end(), product_sets[b].begin(),
                            product_sets[b].end(), std::back_inserter(shared));
      if (rep.tensor_path_checked) {
        std::vector<OutputWord> shared_tensor;
        std::set_intersection(tensor_sets[a].begin(), tensor_sets[a].end(), tensor_sets[b].begin(),
                              tensor_sets[b].end(), std::back_inserter(shared_tensor));
        if (!shared_tensor.empty()) tensor_disjoint = false;
      }
      if (shared.empty()) continue;
      product_disjoint = false;
      ++rep.overlapping_pairs;
      // Probability that a (resp. b) lands on a word the other can also produce.
      for (auto [from, to] : {std::pair{a, b}, std::pair{b, a}}) {
        double mass = 0.0;
        for (const auto& w : product_sets[to]) mass += word_probability(code.codewords[from], w);
        if (mass > rep.max_overlap_mass) {
          rep.max_overlap_mass = mass;
          rep.worst_pair = std::pair{from + 1, to + 1};
        }
      }
    }
  }
  rep.pass = product_disjoint && (!rep.tensor_path_checked || tensor_disjoint);
  return rep;
}

}  // namespace zecap
