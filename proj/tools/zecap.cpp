// zecap: zero-error capacity bounds for quantum channels.

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "zecap/channel_spec.hpp"
#include "zecap/pipeline.hpp"

namespace {

using nlohmann::json;
using namespace zecap;

struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw FileError("cannot open " + path);
    buf << in.rdbuf();
  }
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw FileError("cannot parse " + path + ": " + e.what());
  }
}

// Write to a sibling temp file, then rename over the target.
void write_atomically(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw FileError("cannot write " + tmp);
    out << content;
    if (!out.flush()) throw FileError("cannot write " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw FileError("cannot rename into " + path);
  }
}

void emit(const json& doc, const std::string& out_path) {
  const std::string text = doc.dump(2) + "\n";
  if (out_path.empty())
    std::cout << text;
  else
    write_atomically(out_path, text);
}

std::size_t env_threads() {
  if (const char* v = std::getenv("ZECAP_THREADS")) {
    try {
      const long n = std::stol(v);
      if (n >= 1) return static_cast<std::size_t>(n);
    } catch (const std::exception&) {
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::uint64_t env_seed() {
  if (const char* v = std::getenv("ZECAP_SEED")) {
    try {
      return std::stoull(v);
    } catch (const std::exception&) {
    }
  }
  return 7;
}

int finish(const PipelineResult& res, const std::string& out_path, const std::string& dot_path) {
  emit(res.document, out_path);
  if (!dot_path.empty() && res.dot) write_atomically(dot_path, *res.dot);
  if (res.exit_code != kExitOk && res.document.contains("error"))
    std::cerr << "zecap: " << res.document["error"].value("message", std::string{"failed"}) << "\n";
  else if (res.exit_code != kExitOk)
    std::cerr << "zecap: zero-error certificate failed\n";
  return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zecap: zero-error capacity bounds of noisy quantum channels"};
  app.require_subcommand(1);

  PipelineOptions opts;
  opts.search.seed = env_seed();
  opts.search.threads = env_threads();
  std::string spec_path;
  std::string out_path;
  std::string dot_path;
  std::size_t code_n = 0;
  double theta_tol = 1e-6;
  std::string builtin_name;

  auto add_search_flags = [&](CLI::App* cmd) {
    cmd->add_option("--M", opts.search.M, "number of states to place (default: d)");
    cmd->add_option("--restarts", opts.search.restarts, "independent annealing restarts")->capture_default_str();
    cmd->add_option("--iters", opts.search.iterations, "iterations per restart")->capture_default_str();
    cmd->add_option("--seed", opts.search.seed, "base RNG seed (default: $ZECAP_SEED or 7)");
    cmd->add_option("--step", opts.search.step, "magnitude of random unitary moves")->capture_default_str();
    cmd->add_flag("--general-povm", opts.search.general_povm, "search rank-1 POVMs instead of projective ones");
    cmd->add_option("--outcomes", opts.search.povm_outcomes, "POVM outcome count in --general-povm mode");
    cmd->add_flag("--allow-overcomplete", opts.search.allow_overcomplete, "allow more states than the dimension");
    cmd->add_flag("--alpha-objective", [&](std::int64_t) { opts.search.objective = SearchObjective::PairCountThenAlpha; },
                  "rank candidates by (pair count, alpha) during annealing");
  };

  auto* validate = app.add_subcommand("validate", "check a channel spec");
  validate->add_option("spec", spec_path, "spec JSON ('-' for stdin)")->required();

  auto* analyze = app.add_subcommand("analyze", "confusability graph, capacity bounds and a zero-error code");
  analyze->add_option("spec", spec_path, "spec JSON ('-' for stdin)")->required();
  analyze->add_option("--eps", opts.eps, "support threshold on probabilities")->capture_default_str();
  analyze->add_option("--n-max", opts.n_max, "largest block length for alpha(G^n)")->capture_default_str();
  analyze->add_option("--out", out_path, "report path (default: stdout)");
  analyze->add_option("--dot", dot_path, "write the confusability graph as DOT");
  add_search_flags(analyze);

  auto* search = app.add_subcommand("search", "optimize the state set and POVM");
  search->add_option("spec", spec_path, "spec JSON ('-' for stdin)")->required();
  search->add_option("--eps", opts.eps, "support threshold on probabilities")->capture_default_str();
  search->add_option("--out", out_path, "result path (default: stdout)");
  search->add_option("--dot", dot_path, "write the confusability graph as DOT");
  add_search_flags(search);

  auto* code = app.add_subcommand("code", "build and certify a zero-error block code");
  code->add_option("spec", spec_path, "spec JSON ('-' for stdin)")->required();
  code->add_option("--n", code_n, "block length")->required()->check(CLI::PositiveNumber);
  code->add_option("--eps", opts.eps, "support threshold on probabilities")->capture_default_str();
  code->add_option("--out", out_path, "code path (default: stdout)");
  add_search_flags(code);

  auto* theta = app.add_subcommand("theta", "Lovasz theta of an adjacency-list graph");
  theta->add_option("graph", spec_path, "graph JSON ('-' for stdin)")->required();
  theta->add_option("--tol", theta_tol, "certified duality gap")->capture_default_str();

  auto* builtin = app.add_subcommand("builtin", "print a built-in channel spec");
  builtin->add_option("name", builtin_name,
                      "identity-d<N> | depolarizing-p<x> | dephasing-p<x> | bitflip-p<x> | pentagon")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*builtin) {
      try {
        emit(spec_to_json(builtin_spec(builtin_name)), "");
      } catch (const std::invalid_argument& e) {
        std::cerr << "zecap: " << e.what() << "\n";
        return kExitValidation;
      }
      return kExitOk;
    }
    if (*theta) return finish(run_theta(read_json(spec_path), theta_tol), "", "");

    const json spec = read_json(spec_path);
    if (*validate) return finish(run_validate(spec), "", "");
    if (*analyze) return finish(run_analyze(spec, opts), out_path, dot_path);
    if (*search) return finish(run_search(spec, opts), out_path, dot_path);
    if (*code) {
      opts.code_n = code_n;
      return finish(run_code(spec, opts), out_path, "");
    }
  } catch (const FileError& e) {
    std::cerr << "zecap: " << e.what() << "\n";
    return kExitFile;
  }
  return kExitOk;
}
