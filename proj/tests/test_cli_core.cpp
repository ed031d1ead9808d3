#include <doctest.h>

#include <cmath>

#include "zecap/channel_spec.hpp"
#include "zecap/errors.hpp"
#include "zecap/pipeline.hpp"
#include "zecap/report.hpp"

using namespace zecap;
using nlohmann::json;

namespace {

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

// Rebuild pipeline options from the copy a report embeds.
PipelineOptions options_from(const json& o) {
  PipelineOptions p;
  p.eps = o.at("eps");
  p.n_max = o.at("n_max");
  p.search.M = o.at("M");
  p.search.restarts = o.at("restarts");
  p.search.iterations = o.at("iters");
  p.search.seed = o.at("seed");
  p.search.step = o.at("step");
  p.search.general_povm = o.at("general_povm");
  p.search.povm_outcomes = o.at("outcomes");
  p.search.objective =
      o.at("objective") == "pair_count_then_alpha" ? SearchObjective::PairCountThenAlpha : SearchObjective::PairCount;
  p.search.allow_overcomplete = o.at("allow_overcomplete");
  p.theta_tol = o.at("theta_tol");
  p.max_vertices = o.at("max_vertices");
  if (!o.at("code_n").is_null()) p.code_n = o.at("code_n").get<std::size_t>();
  return p;
}

PipelineOptions quick() {
  PipelineOptions o;
  o.search.restarts = 4;
  o.search.iterations = 400;
  return o;
}

json spec_json(const std::string& builtin) { return spec_to_json(builtin_spec(builtin)); }

}  // namespace

TEST_CASE("matrix JSON accepts [re, im] pairs and bare numbers") {
  const ComplexMatrix m = matrix_from_json(json::parse("[[[1, 0], 0.5], [[0, -1], 2]]"));
  CHECK(m(0, 0) == Complex(1, 0));
  CHECK(m(0, 1) == Complex(0.5, 0));
  CHECK(m(1, 0) == Complex(0, -1));
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
  CHECK_THROWS_AS(matrix_from_json(json::parse("[[1, 2], [3]]")), SpecFormatError);
  CHECK_THROWS_AS(matrix_from_json(json::parse("[[[1, 2, 3]]]")), SpecFormatError);
  CHECK_THROWS_AS(matrix_from_json(json::parse("[]")), SpecFormatError);
}

TEST_CASE("parse_spec round-trips every builtin") {
  for (const auto& name : builtin_examples()) {
    CAPTURE(name);
    const json j = spec_json(name);
    CHECK(spec_to_json(parse_spec(j)) == j);
    CHECK_NOTHROW(resolve_spec(parse_spec(j)));
  }
}

TEST_CASE("parse_spec rejects malformed documents") {
  CHECK_THROWS_AS(parse_spec(json::parse("[]")), SpecFormatError);
  CHECK_THROWS_AS(parse_spec(json::parse(R"({"name": "x", "kraus": [[[1]]]})")), SpecFormatError);
  CHECK_THROWS_AS(parse_spec(json::parse(R"({"name": "x", "dim": 1})")), SpecFormatError);
  CHECK_THROWS_AS(parse_spec(json::parse(R"({"name": "x", "dim": 1, "kraus": [[[1]]], "classical_matrix": [[1]]})")),
                  SpecFormatError);
  CHECK_THROWS_AS(parse_spec(json::parse(R"({"name": "x", "dim": 1, "kraus": [[[1]]], "states": [[[1]]]})")),
                  SpecFormatError);
  CHECK_THROWS_AS(resolve_spec(parse_spec(json::parse(R"({"name": "x", "dim": 2, "kraus": [[[1]]]})"))),
                  DimensionMismatch);
  CHECK_THROWS_AS(resolve_spec(parse_spec(json::parse(R"({"name": "x", "dim": 2, "classical_matrix": [[0.5, 0.4], [0, 1]]})"))),
                  NotStochastic);
  CHECK_THROWS_AS(resolve_spec(parse_spec(json::parse(R"({"name": "x", "dim": 1, "kraus": [[[2]]]})"))), NotTracePreserving);
}

TEST_CASE("a spec may fix (S, P)") {
  const json j = json::parse(R"({"name": "fixed", "dim": 2, "kraus": [[[1, 0], [0, 1]]],
      "states": [[[1, 0], [0, 0]], [[0, 0], [0, 1]]], "povm": [[[1, 0], [0, 0]], [[0, 0], [0, 1]]]})");
  const ResolvedSpec r = resolve_spec(parse_spec(j));
  REQUIRE(r.states.has_value());
  CHECK(r.states->size() == 2);
  CHECK(r.povm->size() == 2);
}

TEST_CASE("embed_classical examples") {
  const ClassicalEmbedding id = embed_classical({{1, 0}, {0, 1}});
  CHECK(confusability_graph(id.channel, id.states, id.povm).graph.edge_count() == 0);

  const ClassicalEmbedding useless = embed_classical({{0.5, 0.5}, {0.5, 0.5}});
  CHECK(confusability_graph(useless.channel, useless.states, useless.povm).graph == Graph::complete(2));

  // Non-square: 2 inputs, 3 outputs, padded to d = 3.
  const RealMatrix w{{0.2, 0.8, 0.0}, {0.0, 0.3, 0.7}};
  const ClassicalEmbedding e = embed_classical(w);
  CHECK(e.channel.dim() == 3);
  CHECK(e.states.size() == 2);
  const ConfusabilityGraph g = confusability_graph(e.channel, e.states, e.povm);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(std::abs(g.probabilities[i][j] - w[i][j]) < 1e-12);

  CHECK_THROWS_AS(embed_classical({{0.5, 0.6}}), NotStochastic);
  CHECK_THROWS_AS(embed_classical({{1.5, -0.5}}), NotStochastic);
  CHECK_THROWS_AS(embed_classical({{1.0}, {0.5, 0.5}}), NotStochastic);
}

TEST_CASE("classical builtins reproduce W exactly") {
  for (const auto& name : builtin_examples()) {
    const ChannelSpec spec = builtin_spec(name);
    if (!spec.classical_matrix) continue;
    const ClassicalEmbedding e = embed_classical(*spec.classical_matrix);
    const ConfusabilityGraph g = confusability_graph(e.channel, e.states, e.povm);
    for (std::size_t i = 0; i < spec.classical_matrix->size(); ++i)
      for (std::size_t j = 0; j < (*spec.classical_matrix)[i].size(); ++j)
        CHECK(std::abs(g.probabilities[i][j] - (*spec.classical_matrix)[i][j]) < 1e-12);
  }
}

TEST_CASE("builtin Kraus forms") {
  const Complex i(0, 1);
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  const ComplexMatrix x = mat2(0, 1, 1, 0), y = mat2(0, -i, i, 0), z = mat2(1, 0, 0, -1);

  const auto dep = *builtin_spec("depolarizing-p0.4").kraus;
  REQUIRE(dep.size() == 4);
  CHECK(max_abs(dep[0] - std::sqrt(1 - 0.3) * id) < 1e-15);
  CHECK(max_abs(dep[1] - std::sqrt(0.1) * x) < 1e-15);
  CHECK(max_abs(dep[2] - std::sqrt(0.1) * y) < 1e-15);
  CHECK(max_abs(dep[3] - std::sqrt(0.1) * z) < 1e-15);

  const auto deph = *builtin_spec("dephasing-p0.25").kraus;
  REQUIRE(deph.size() == 2);
  CHECK(max_abs(deph[0] - std::sqrt(0.75) * id) < 1e-15);
  CHECK(max_abs(deph[1] - std::sqrt(0.25) * z) < 1e-15);

  const auto flip = *builtin_spec("bitflip-p0.1").kraus;
  REQUIRE(flip.size() == 2);
  CHECK(max_abs(flip[0] - std::sqrt(0.9) * id) < 1e-15);
  CHECK(max_abs(flip[1] - std::sqrt(0.1) * x) < 1e-15);

  CHECK(builtin_spec("identity-d64").dim == 64);
  CHECK(builtin_spec("pentagon").classical_matrix->size() == 5);

  CHECK_THROWS_AS(builtin_spec("identity-d0"), std::invalid_argument);
  CHECK_THROWS_AS(builtin_spec("identity-d65"), std::invalid_argument);
  CHECK_THROWS_AS(builtin_spec("depolarizing-p1.5"), std::invalid_argument);
  CHECK_THROWS_AS(builtin_spec("dephasing-pabc"), std::invalid_argument);
  CHECK_THROWS_AS(builtin_spec("amplitude"), std::invalid_argument);
}

TEST_CASE("graph JSON round trip and validation") {
  const Graph c5 = Graph::cycle(5);
  const json j = graph_to_json(c5);
  CHECK(j["vertex_count"] == 5);
  CHECK(j["adjacency"][0] == json::array({1, 4}));
  CHECK(graph_from_json(j) == c5);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertex_count": 2, "adjacency": [[1], []]})")), SpecFormatError);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertex_count": 1, "adjacency": [[0]]})")), SpecFormatError);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertex_count": 2, "adjacency": [[2], []]})")), SpecFormatError);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertex_count": 2, "adjacency": [[]]})")), SpecFormatError);
}

TEST_CASE("DOT export lists every edge once") {
  const std::string dot = graph_to_dot(Graph::cycle(5));
  CHECK(dot.find("graph") != std::string::npos);
  std::size_t count = 0;
  for (std::size_t pos = dot.find("--"); pos != std::string::npos; pos = dot.find("--", pos + 2)) ++count;
  CHECK(count == 5);

  const ResolvedSpec r = resolve_spec(builtin_spec("pentagon"));
  const std::string labelled = graph_to_dot(confusability_graph(r.channel, *r.states, *r.povm));
  CHECK(labelled.find("A={0,1}") != std::string::npos);
}

TEST_CASE("analyze: pentagon report") {
  const PipelineResult res = run_analyze(spec_json("pentagon"), quick());
  CHECK(res.exit_code == kExitOk);
  const json& d = res.document;
  CHECK(d["status"] == "ok");
  CHECK(d["provenance"] == "given");
  const json& per_n = d["bounds"]["per_n"];
  CHECK(per_n[0]["alpha"] == 2);
  CHECK(per_n[1]["alpha"] == 5);
  CHECK(per_n[1]["rate"].get<double>() == doctest::Approx(0.5 * std::log2(5.0)).epsilon(1e-15));
  CHECK(std::abs(d["bounds"]["theta_upper"].get<double>() - 0.5 * std::log2(5.0)) < 1e-5);
  CHECK(d["code"]["K"] == 5);
  CHECK(d["code"]["zero_error"]["pass"] == true);
  CHECK(res.dot.has_value());
}

TEST_CASE("analyze: fully depolarizing channel has zero capacity for the searched pair") {
  const PipelineResult res = run_analyze(spec_json("depolarizing-p1"), quick());
  CHECK(res.exit_code == kExitOk);
  CHECK(res.document["summary"] == "zero-error capacity = 0 for searched (S,P)");
  CHECK(res.document["search"]["pair_count"] == 0);
  CHECK(res.document["provenance"] == "searched");
}

TEST_CASE("analyze: identity qutrit reaches log2 3 at n = 1") {
  const PipelineResult res = run_analyze(spec_json("identity-d3"), quick());
  CHECK(res.exit_code == kExitOk);
  CHECK(res.document["search"]["M"] == 3);
  CHECK(res.document["bounds"]["per_n"][0]["rate"].get<double>() == std::log2(3.0));
}

TEST_CASE("a report reproduces itself from its embedded inputs") {
  for (const char* name : {"pentagon", "bitflip-p0.1", "identity-d2"}) {
    CAPTURE(name);
    const PipelineResult first = run_analyze(spec_json(name), quick());
    const json& input = first.document["input"];
    const PipelineResult again = run_analyze(input["spec"], options_from(input["options"]));
    CHECK(again.document.dump() == first.document.dump());
  }
}

TEST_CASE("validation failures map to exit code 1 with a failure marker") {
  const PipelineResult bad = run_validate(json::parse(R"({"name": "x", "dim": 1, "kraus": [[[2]]]})"));
  CHECK(bad.exit_code == kExitValidation);
  CHECK(bad.document["status"] == "failed");
  CHECK(bad.document["error"]["kind"] == "validation");

  const PipelineResult good = run_validate(spec_json("dephasing-p0.5"));
  CHECK(good.exit_code == kExitOk);
  CHECK(good.document["valid"] == true);

  const PipelineResult analyze = run_analyze(json::parse(R"({"name": "x"})"), quick());
  CHECK(analyze.exit_code == kExitValidation);
  CHECK(analyze.document.contains("input"));

  CHECK(run_code(spec_json("pentagon"), quick()).exit_code == kExitValidation);
}

TEST_CASE("code subcommand certifies the pentagon n = 2 code") {
  PipelineOptions o = quick();
  o.code_n = 2;
  const PipelineResult res = run_code(spec_json("pentagon"), o);
  CHECK(res.exit_code == kExitOk);
  CHECK(res.document["code"]["K"] == 5);
  CHECK(res.document["code"]["decoder"]["mapped_words"] == 20);
  CHECK(res.document["code"]["decoder"]["unreachable_words"] == 5);
}

TEST_CASE("theta subcommand") {
  const PipelineResult res = run_theta(graph_to_json(Graph::cycle(5)), 1e-6);
  CHECK(res.exit_code == kExitOk);
  CHECK(std::abs(res.document["theta"].get<double>() - std::sqrt(5.0)) < 1e-5);
  CHECK(run_theta(json::parse(R"({"vertex_count": 1, "adjacency": [[0]]})"), 1e-6).exit_code == kExitValidation);
}
