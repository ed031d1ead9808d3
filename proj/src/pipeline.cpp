#include "zecap/pipeline.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "zecap/adjacency.hpp"
#include "zecap/block_code.hpp"
#include "zecap/capacity.hpp"
#include "zecap/channel_spec.hpp"
#include "zecap/errors.hpp"
#include "zecap/report.hpp"
#include "zecap/theta.hpp"

namespace zecap {

using nlohmann::json;

namespace {

struct Prepared {
  QuantumChannel channel;
  StateSet states;
  Povm povm;
  std::optional<SearchResult> search;
  SearchConfig cfg;
};

json tool_json() { return {{"name", "zecap"}, {"version", kToolVersion}}; }

json options_json(const PipelineOptions& o) {
  json j = {{"eps", o.eps},
            {"n_max", o.n_max},
            {"M", o.search.M},
            {"restarts", o.search.restarts},
            {"iters", o.search.iterations},
            {"seed", o.search.seed},
            {"step", o.search.step},
            {"general_povm", o.search.general_povm},
            {"outcomes", o.search.povm_outcomes},
            {"objective", o.search.objective == SearchObjective::PairCountThenAlpha ? "pair_count_then_alpha" : "pair_count"},
            {"allow_overcomplete", o.search.allow_overcomplete},
            {"theta_tol", o.theta_tol},
            {"max_vertices", o.max_vertices}};
  j["code_n"] = o.code_n ? json(*o.code_n) : json(nullptr);
  return j;
}

json matrices_json(const StateSet& s) {
  json out = json::array();
  for (const auto& rho : s.states()) out.push_back(matrix_to_json(rho.matrix()));
  return out;
}

json matrices_json(const Povm& p) {
  json out = json::array();
  for (const auto& e : p.elements()) out.push_back(matrix_to_json(e));
  return out;
}

SearchConfig effective_config(const PipelineOptions& opts, std::size_t d) {
  SearchConfig cfg = opts.search;
  cfg.eps = opts.eps;
  if (cfg.M == 0) cfg.M = d;
  return cfg;
}

// Fixed (S, P) from the spec, or the best pair found by search.
Prepared prepare(const json& spec_json, const PipelineOptions& opts, bool force_search) {
  const ChannelSpec spec = parse_spec(spec_json);
  ResolvedSpec r = resolve_spec(spec, {}, opts.search.allow_overcomplete);
  SearchConfig cfg = effective_config(opts, r.channel.dim());
  if (r.states && !force_search)
    return Prepared{std::move(r.channel), std::move(*r.states), std::move(*r.povm), std::nullopt, cfg};
  SearchResult sr = optimize_pair(r.channel, cfg);
  StateSet s = sr.best_states;
  Povm p = sr.best_povm;
  return Prepared{std::move(r.channel), std::move(s), std::move(p), std::move(sr), cfg};
}

std::string format_bits(double x) {
  std::ostringstream os;
  os << std::setprecision(6) << x;
  return os.str();
}

template <typename Fn>
PipelineResult guarded(json doc, Fn&& body) {
  PipelineResult res;
  res.document = std::move(doc);
  try {
    body(res);
    if (!res.document.contains("status")) res.document["status"] = "ok";
  } catch (const ValidationError& e) {
    res.document["status"] = "failed";
    res.document["error"] = {{"kind", "validation"}, {"message", e.what()}};
    res.exit_code = kExitValidation;
  } catch (const std::invalid_argument& e) {
    res.document["status"] = "failed";
    res.document["error"] = {{"kind", "invalid_argument"}, {"message", e.what()}};
    res.exit_code = kExitValidation;
  } catch (const Error& e) {
    res.document["status"] = "failed";
    res.document["error"] = {{"kind", "computation"}, {"message", e.what()}};
    res.exit_code = kExitValidation;
  }
  return res;
}

}  // namespace

PipelineResult run_validate(const json& spec_json) {
  return guarded({{"tool", tool_json()}}, [&](PipelineResult& res) {
    const ChannelSpec spec = parse_spec(spec_json);
    const ResolvedSpec r = resolve_spec(spec);
    json& doc = res.document;
    doc["name"] = spec.name;
    doc["dim"] = r.channel.dim();
    doc["kraus_count"] = r.channel.kraus().size();
    doc["input_kind"] = spec.classical_matrix ? "classical_matrix" : "kraus";
    doc["has_state_set"] = r.states.has_value();
    if (r.states) {
      doc["M"] = r.states->size();
      doc["N"] = r.povm->size();
    }
    doc["valid"] = true;
  });
}

PipelineResult run_analyze(const json& spec_json, const PipelineOptions& opts) {
  json doc = {{"tool", tool_json()}, {"input", {{"spec", spec_json}, {"options", options_json(opts)}}}};
  return guarded(std::move(doc), [&](PipelineResult& res) {
    json& doc = res.document;
    Prepared prep = prepare(spec_json, opts, false);
    const bool searched = prep.search.has_value();
    doc["channel"] = {{"name", spec_json.value("name", std::string{})},
                      {"dim", prep.channel.dim()},
                      {"kraus_count", prep.channel.kraus().size()}};
    doc["provenance"] = searched ? "searched" : "given";
    doc["seed"] = prep.cfg.seed;

    ConfusabilityGraph g = searched ? prep.search->graph : confusability_graph(prep.channel, prep.states, prep.povm, opts.eps);
    if (searched) {
      doc["search"] = {{"M", prep.cfg.M},
                       {"restarts", prep.cfg.restarts},
                       {"iterations", prep.cfg.iterations},
                       {"pair_count", prep.search->pair_count},
                       {"alpha_1", prep.search->alpha_1},
                       {"best_restart", prep.search->best_restart},
                       {"general_povm", prep.cfg.general_povm}};
    }
    doc["states"] = matrices_json(prep.states);
    doc["povm"] = matrices_json(prep.povm);
    doc["confusability"] = confusability_to_json(g);
    res.dot = graph_to_dot(g);

    CapacityOptions copts;
    copts.n_max = opts.n_max;
    copts.max_vertices = opts.max_vertices;
    copts.theta.tol = opts.theta_tol;
    const CapacityBounds bounds = capacity_bounds(g.graph, copts);
    doc["bounds"] = capacity_to_json(bounds);

    const std::size_t pairs = non_adjacent_pair_count(g);
    const std::string which = searched ? "searched" : "given";
    if (pairs == 0) {
      doc["summary"] = "zero-error capacity = 0 for " + which + " (S,P)";
    } else {
      std::string s = "zero-error capacity >= " + format_bits(bounds.best_lower) + " bits/use for " + which + " (S,P)";
      if (bounds.best_n) s += " at n = " + std::to_string(*bounds.best_n);
      if (bounds.theta_upper) s += "; graph capacity <= " + format_bits(*bounds.theta_upper) + " bits/use";
      doc["summary"] = s;
    }

    const std::optional<std::size_t> n = opts.code_n ? opts.code_n : bounds.best_n;
    if (!n) {
      doc["code"] = nullptr;
      return;
    }
    try {
      const QuantumBlockCode code = build_code(g, prep.states, prep.povm, *n, opts.max_vertices);
      const DecoderTable decoder = build_decoder(code, prep.channel);
      const ZeroErrorReport cert = verify_zero_error(code, prep.channel);
      doc["code"] = code_to_json(code, &decoder, cert);
      if (!cert.pass) {
        doc["status"] = "failed";
        res.exit_code = kExitValidation;
      }
    } catch (const SizeLimit& e) {
      doc["code"] = {{"n", *n}, {"error", e.what()}};
    }
    if (!bounds.consistent) {
      doc["status"] = "failed";
      doc["error"] = {{"kind", "computation"}, {"message", "lower bound exceeds log2 theta"}};
      res.exit_code = kExitValidation;
    }
  });
}

PipelineResult run_search(const json& spec_json, const PipelineOptions& opts) {
  json doc = {{"tool", tool_json()}, {"input", {{"spec", spec_json}, {"options", options_json(opts)}}}};
  return guarded(std::move(doc), [&](PipelineResult& res) {
    Prepared prep = prepare(spec_json, opts, true);
    res.document["result"] = search_result_to_json(*prep.search, prep.cfg);
    res.dot = graph_to_dot(prep.search->graph);
  });
}

PipelineResult run_code(const json& spec_json, const PipelineOptions& opts) {
  json doc = {{"tool", tool_json()}, {"input", {{"spec", spec_json}, {"options", options_json(opts)}}}};
  return guarded(std::move(doc), [&](PipelineResult& res) {
    if (!opts.code_n || *opts.code_n == 0) throw std::invalid_argument("code needs --n >= 1");
    json& doc = res.document;
    Prepared prep = prepare(spec_json, opts, false);
    const ConfusabilityGraph g =
        prep.search ? prep.search->graph : confusability_graph(prep.channel, prep.states, prep.povm, opts.eps);
    doc["provenance"] = prep.search ? "searched" : "given";
    doc["states"] = matrices_json(prep.states);
    doc["povm"] = matrices_json(prep.povm);
    doc["confusability"] = confusability_to_json(g);
    const QuantumBlockCode code = build_code(g, prep.states, prep.povm, *opts.code_n, opts.max_vertices);
    const ZeroErrorReport cert = verify_zero_error(code, prep.channel);
    std::optional<DecoderTable> decoder;
    try {
      decoder = build_decoder(code, prep.channel);
    } catch (const AmbiguousSupports& e) {
      doc["decoder_error"] = e.what();
    }
    doc["code"] = code_to_json(code, decoder ? &*decoder : nullptr, cert);
    if (!cert.pass) {
      doc["status"] = "failed";
      res.exit_code = kExitValidation;
    }
  });
}

PipelineResult run_theta(const json& graph_json, double tol) {
  return guarded({{"tool", tool_json()}}, [&](PipelineResult& res) {
    const Graph g = graph_from_json(graph_json);
    ThetaOptions o;
    o.tol = tol;
    const ThetaResult t = lovasz_theta(g, o);
    res.document["vertex_count"] = g.vertex_count();
    res.document["edge_count"] = g.edge_count();
    res.document["theta"] = t.value;
    res.document["lower"] = t.lower;
    res.document["upper"] = t.upper;
    res.document["gap"] = t.gap;
    res.document["iterations"] = t.iterations;
    res.document["log2_theta"] = std::log2(t.value);
  });
}

}  // namespace zecap
