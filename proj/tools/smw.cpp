#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "smw/checks.hpp"
#include "smw/errors.hpp"
#include "smw/families.hpp"
#include "smw/graph_io.hpp"
#include "smw/json_io.hpp"
#include "smw/oracles.hpp"
#include "smw/pipeline.hpp"
#include "smw/solve.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUncertified = 2;

struct RunConfig {
  std::string command;
  std::string input;
  std::string output;
  std::string decomposition;
  std::string problem;
  std::string family;
  std::string suite;
  int exact_limit = 12;
  bool heuristic = false;
  std::uint64_t seed = 1;
  int n = 8;
  int k = 1;
  bool verbose = false;
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw smw::DomainError("cannot write " + cfg.output);
  out << text << '\n';
}

smw::PipelineOptions pipeline_options(const RunConfig& cfg) {
  smw::PipelineOptions opts;
  opts.exact_limit = cfg.exact_limit;
  opts.heuristic = cfg.heuristic;
  return opts;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw smw::DomainError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int cmd_decompose(const RunConfig& cfg) {
  smw::Graph g = smw::read_graph_file(cfg.input);
  smw::PipelineResult r = smw::compute_sm_decomposition(g, pipeline_options(cfg));
  emit(cfg, smw::decomposition_document(g, r));
  return r.certified() ? kExitOk : kExitUncertified;
}

int cmd_solve(const RunConfig& cfg) {
  smw::Problem p = smw::parse_problem(cfg.problem);
  smw::Graph g = smw::read_graph_file(cfg.input);
  smw::BranchDecomposition bd;
  if (!cfg.decomposition.empty()) {
    bd = smw::parse_decomposition_json(read_text(cfg.decomposition));
    if (bd.vertices() != g.vertices())
      throw smw::DomainError("decomposition leaves " + bd.vertices().to_string() +
                             " differ from V(G) " + g.vertices().to_string());
  } else {
    bd = smw::compute_sm_decomposition(g, pipeline_options(cfg)).bd;
  }
  smw::SolveOutcome out = smw::solve_problem(p, g, smw::root_decomposition(bd));
  emit(cfg, smw::solve_document(g, out));
  return kExitOk;
}

int cmd_oracle(const RunConfig& cfg) {
  smw::Problem p = smw::parse_problem(cfg.problem);
  smw::Graph g = smw::read_graph_file(cfg.input);
  emit(cfg, smw::oracle_document(g, p, smw::brute_force_solve(p, g)));
  return kExitOk;
}

int cmd_generate(const RunConfig& cfg) {
  smw::FamilySpec spec{smw::parse_family(cfg.family), cfg.n, cfg.k};
  smw::FamilyInstance inst = smw::generate_family(spec, cfg.seed);
  std::ostringstream os;
  os << "# " << smw::to_string(spec.kind) << " n=" << spec.n << " k=" << spec.k
     << " seed=" << cfg.seed << " bound=" << inst.bound << '\n'
     << smw::to_edge_list(inst.graph);
  std::string text = os.str();
  text.pop_back();
  emit(cfg, text);
  return kExitOk;
}

int cmd_check(const RunConfig& cfg) {
  smw::CheckResult r = smw::run_check(cfg.suite, cfg.seed);
  nlohmann::json doc = {{"format", smw::kJsonFormat},
                        {"command", "check"},
                        {"suite", r.suite},
                        {"seed", cfg.seed},
                        {"passed", r.passed()},
                        {"cases", r.cases},
                        {"violations", r.violations},
                        {"detail", r.detail}};
  if (!r.passed()) doc["counterexample"] = r.counterexample;
  emit(cfg, doc.dump(2));
  if (cfg.verbose) std::cerr << r.suite << ": " << r.seconds << " s\n";
  if (!r.passed()) std::cerr << "violation: " << r.counterexample << '\n';
  return r.passed() ? kExitOk : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Split-matching-width decompositions and dynamic programming solvers"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.output, "Write the result to FILE instead of stdout");
    sub->add_flag("-v,--verbose", cfg.verbose, "Report timings on stderr");
  };
  auto add_pipeline = [&](CLI::App* sub) {
    sub->add_option("--exact-limit", cfg.exact_limit,
                    "Largest prime decomposed by the exact backend")
        ->capture_default_str();
    sub->add_flag("--heuristic", cfg.heuristic,
                  "Use the heuristic backend for primes above the exact limit");
  };

  auto* decompose = app.add_subcommand("decompose", "Compute an sm-width branch decomposition");
  decompose->add_option("graph", cfg.input, "Graph file (edge list or DIMACS)")->required();
  add_pipeline(decompose);
  add_common(decompose);

  auto* solve = app.add_subcommand("solve", "Solve a problem by dynamic programming");
  solve->add_option("problem", cfg.problem, "maxcut | hc | chromatic | eds")
      ->required()
      ->check(CLI::IsMember({"maxcut", "hc", "chromatic", "eds"}));
  solve->add_option("graph", cfg.input, "Graph file")->required();
  solve->add_option("--decomposition", cfg.decomposition,
                    "Branch decomposition JSON to use instead of the pipeline");
  add_pipeline(solve);
  add_common(solve);

  auto* oracle = app.add_subcommand("oracle", "Solve a small instance by exhaustive search");
  oracle->add_option("problem", cfg.problem, "maxcut | hc | chromatic | eds")
      ->required()
      ->check(CLI::IsMember({"maxcut", "hc", "chromatic", "eds"}));
  oracle->add_option("graph", cfg.input, "Graph file")->required();
  add_common(oracle);

  auto* generate = app.add_subcommand("generate", "Generate a graph from a known-width family");
  generate
      ->add_option("family", cfg.family,
                   "tree | cycle | clique | series-parallel | distance-hereditary | twin-cover | "
                   "glued")
      ->required();
  generate->add_option("--n", cfg.n, "Number of vertices")->capture_default_str();
  generate->add_option("--k", cfg.k, "Twin-cover size or glued treewidth")->capture_default_str();
  generate->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  add_common(generate);

  auto* check = app.add_subcommand("check", "Run a property suite on a seeded corpus");
  check->add_option("suite", cfg.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(smw::check_names()));
  check->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  add_common(check);

  CLI11_PARSE(app, argc, argv);

  try {
    auto start = std::chrono::steady_clock::now();
    int code = kExitError;
    if (*decompose) code = cmd_decompose(cfg);
    if (*solve) code = cmd_solve(cfg);
    if (*oracle) code = cmd_oracle(cfg);
    if (*generate) code = cmd_generate(cfg);
    if (*check) code = cmd_check(cfg);
    if (cfg.verbose) {
      std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
      std::cerr << "elapsed: " << took.count() << " s\n";
    }
    return code;
  } catch (const smw::RefusalError& e) {
    std::cerr << "refused: " << e.what() << '\n';
  } catch (const smw::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitError;
}
