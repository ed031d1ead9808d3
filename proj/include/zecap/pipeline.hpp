#pragma once

// End-to-end orchestration behind the zecap subcommands: validate -> graph ->
// bounds -> search -> code. File I/O stays in the CLI; these functions take
// parsed JSON and return the document to emit plus the process exit code.

#include <cstddef>
#include <optional>
#include <string>

#include <json.hpp>

#include "zecap/independence.hpp"
#include "zecap/search.hpp"

namespace zecap {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int { kExitOk = 0, kExitValidation = 1, kExitFile = 2 };

struct PipelineOptions {
  PipelineOptions() { search.M = 0; }

  double eps = kDefaultSupportEps;
  std::size_t n_max = 2;
  std::optional<std::size_t> code_n;  // block length for the code; default: best n of the sweep
  SearchConfig search;                // search.M == 0 means "use d"
  double theta_tol = 1e-6;
  std::size_t max_vertices = kMaxExactVertices;
};

struct PipelineResult {
  nlohmann::json document;
  int exit_code = kExitOk;
  std::optional<std::string> dot;  // confusability graph, when one was built
};

PipelineResult run_validate(const nlohmann::json& spec);
PipelineResult run_analyze(const nlohmann::json& spec, const PipelineOptions& opts);
PipelineResult run_search(const nlohmann::json& spec, const PipelineOptions& opts);
/// Requires opts.code_n.
PipelineResult run_code(const nlohmann::json& spec, const PipelineOptions& opts);
PipelineResult run_theta(const nlohmann::json& graph, double tol);

}  // namespace zecap
