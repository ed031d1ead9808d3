#pragma once

// JSON and DOT serialization of graphs, search results, bounds and codes.

#include <string>

#include <json.hpp>

#include "zecap/adjacency.hpp"
#include "zecap/block_code.hpp"
#include "zecap/capacity.hpp"
#include "zecap/graph.hpp"
#include "zecap/search.hpp"

namespace zecap {

/// {"vertex_count": V, "adjacency": [[neighbors of 0], [neighbors of 1], ...]}, 0-based.
nlohmann::json graph_to_json(const Graph& g);
/// Inverse of graph_to_json. Rejects self-loops, asymmetric lists and
/// out-of-range indices with SpecFormatError.
Graph graph_from_json(const nlohmann::json& j);

/// Undirected DOT; edges join confusable states, vertex labels list A_k.
std::string graph_to_dot(const ConfusabilityGraph& g, const std::string& name = "confusability");
std::string graph_to_dot(const Graph& g, const std::string& name = "G");

nlohmann::json confusability_to_json(const ConfusabilityGraph& g);
nlohmann::json search_result_to_json(const SearchResult& r, const SearchConfig& cfg);
nlohmann::json capacity_to_json(const CapacityBounds& b);
nlohmann::json zero_error_to_json(const ZeroErrorReport& r);

/// Code summary, codewords, decoder statistics and certificate. Reachable
/// word listings are included only while their total stays <= listing_limit.
nlohmann::json code_to_json(const QuantumBlockCode& code, const DecoderTable* decoder, const ZeroErrorReport& cert,
                            std::size_t listing_limit = 1000);

}  // namespace zecap
