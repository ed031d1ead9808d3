#include "zecap/report.hpp"

#include <sstream>

#include "zecap/channel_spec.hpp"
#include "zecap/errors.hpp"

namespace zecap {

using nlohmann::json;

json graph_to_json(const Graph& g) {
  json adj = json::array();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) adj.push_back(g.neighbors(v));
  return {{"vertex_count", g.vertex_count()}, {"adjacency", std::move(adj)}};
}

Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("adjacency") || !j["adjacency"].is_array())
    throw SpecFormatError("graph JSON needs an 'adjacency' list");
  const json& adj = j["adjacency"];
  const std::size_t v = j.contains("vertex_count") ? j["vertex_count"].get<std::size_t>() : adj.size();
  if (adj.size() != v) throw SpecFormatError("adjacency list length differs from vertex_count");
  Graph g(v);
  for (std::size_t a = 0; a < v; ++a) {
    if (!adj[a].is_array()) throw SpecFormatError("adjacency entries must be lists");
    for (const auto& b : adj[a]) {
      if (!b.is_number_unsigned()) throw SpecFormatError("neighbor indices must be non-negative integers");
      const auto nb = b.get<std::size_t>();
      if (nb >= v) throw SpecFormatError("neighbor index out of range");
      if (nb == a) throw SpecFormatError("self-loop on vertex " + std::to_string(a));
      g.add_edge(a, nb);
    }
  }
  // Every listed edge must be listed from both ends.
  for (std::size_t a = 0; a < v; ++a)
    if (g.neighbors(a).size() != adj[a].size()) throw SpecFormatError("adjacency list is not symmetric");
  return g;
}

std::string graph_to_dot(const Graph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) os << "  " << v << ";\n";
  for (auto [a, b] : g.edges()) os << "  " << a << " -- " << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string graph_to_dot(const ConfusabilityGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  os << "  // edge = confusable: supports intersect at eps " << g.eps << "\n";
  for (std::size_t v = 0; v < g.graph.vertex_count(); ++v) {
    os << "  " << v << " [label=\"" << v << "\\nA={";
    const auto& idx = g.supports[v].indices;
    for (std::size_t k = 0; k < idx.size(); ++k) os << (k ? "," : "") << idx[k];
    os << "}\"];\n";
  }
  for (auto [a, b] : g.graph.edges()) os << "  " << a << " -- " << b << ";\n";
  os << "}\n";
  return os.str();
}

json confusability_to_json(const ConfusabilityGraph& g) {
  json supports = json::array();
  for (const auto& s : g.supports) supports.push_back(s.indices);
  return {{"eps_support", g.eps},
          {"fragile_entries", g.fragile_entries},
          {"probabilities", g.probabilities},
          {"supports", std::move(supports)},
          {"graph", graph_to_json(g.graph)},
          {"non_adjacent_pairs", non_adjacent_pair_count(g)},
          {"positive_zero_error_capacity", has_positive_zero_error_capacity(g)}};
}

json search_result_to_json(const SearchResult& r, const SearchConfig& cfg) {
  json states = json::array();
  for (const auto& s : r.best_states.states()) states.push_back(matrix_to_json(s.matrix()));
  json povm = json::array();
  for (const auto& e : r.best_povm.elements()) povm.push_back(matrix_to_json(e));
  json history = json::array();
  for (const auto& trace : r.history) {
    json t = json::array();
    for (const auto& p : trace) t.push_back({p.iteration, p.pair_count, p.alpha});
    history.push_back(std::move(t));
  }
  return {{"config",
           {{"M", cfg.M},
            {"restarts", cfg.restarts},
            {"iterations", cfg.iterations},
            {"seed", cfg.seed},
            {"step", cfg.step},
            {"eps_support", cfg.eps},
            {"objective", cfg.objective == SearchObjective::PairCount ? "pair_count" : "pair_count_then_alpha"},
            {"general_povm", cfg.general_povm},
            {"povm_outcomes", r.best_povm.size()},
            {"allow_overcomplete", cfg.allow_overcomplete}}},
          {"pair_count", r.pair_count},
          {"alpha_1", r.alpha_1},
          {"best_restart", r.best_restart},
          {"states", std::move(states)},
          {"povm", std::move(povm)},
          {"confusability", confusability_to_json(r.graph)},
          {"history", std::move(history)}};
}

json capacity_to_json(const CapacityBounds& b) {
  json per_n = json::array();
  for (const auto& e : b.per_n) {
    json row = {{"n", e.n}};
    if (e.alpha) {
      row["alpha"] = *e.alpha;
      row["rate"] = *e.rate;
      row["witness"] = e.witness;
    }
    if (e.error) row["error"] = *e.error;
    per_n.push_back(std::move(row));
  }
  json out = {{"per_n", std::move(per_n)}, {"best_lower", b.best_lower}, {"consistent", b.consistent}};
  out["best_n"] = b.best_n ? json(*b.best_n) : json(nullptr);
  if (b.theta) {
    out["theta"] = *b.theta;
    out["theta_upper"] = *b.theta_upper;
    out["theta_gap"] = *b.theta_gap;
  } else {
    out["theta_upper"] = nullptr;
    out["theta_error"] = b.theta_error.value_or("");
  }
  return out;
}

json zero_error_to_json(const ZeroErrorReport& r) {
  json out = {{"pass", r.pass},
              {"eps_support", r.eps},
              {"overlapping_pairs", r.overlapping_pairs},
              {"max_overlap_mass", r.max_overlap_mass},
              {"tensor_path_checked", r.tensor_path_checked}};
  if (r.tensor_path_checked) out["tensor_matches_product"] = r.tensor_matches_product;
  if (r.worst_pair) out["worst_pair"] = {r.worst_pair->first, r.worst_pair->second};
  return out;
}

json code_to_json(const QuantumBlockCode& code, const DecoderTable* decoder, const ZeroErrorReport& cert,
                  std::size_t listing_limit) {
  json out = {{"n", code.n},
              {"K", code.size()},
              {"rate", code.rate()},
              {"codewords", code.codewords},
              {"zero_error", zero_error_to_json(cert)}};
  if (decoder) {
    json dec = {{"mapped_words", decoder->mapped_count()},
                {"unreachable_words", decoder->unreachable_count()},
                {"total_words", decoder->total_words()}};
    if (decoder->mapped_count() <= listing_limit) {
      json table = json::array();
      for (const auto& [word, message] : decoder->entries()) table.push_back({{"word", word}, {"message", message}});
      dec["table"] = std::move(table);
    } else {
      dec["table_elided"] = true;
    }
    out["decoder"] = std::move(dec);
  } else {
    out["decoder"] = nullptr;
  }
  return out;
}

}  // namespace zecap
