#include "smw/checks.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "smw/coloring.hpp"
#include "smw/corpus.hpp"
#include "smw/cut_functions.hpp"
#include "smw/eds.hpp"
#include "smw/errors.hpp"
#include "smw/exact_width.hpp"
#include "smw/families.hpp"
#include "smw/graph_enumeration.hpp"
#include "smw/hamiltonian.hpp"
#include "smw/maxcut.hpp"
#include "smw/oracles.hpp"
#include "smw/pipeline.hpp"
#include "smw/solve.hpp"
#include "smw/split_decomposition.hpp"

namespace smw {

namespace {

/// Collects cases and the first violation of a suite.
class Recorder {
 public:
  explicit Recorder(std::string suite) : start_(std::chrono::steady_clock::now()) {
    result_.suite = std::move(suite);
  }

  void pass() { ++result_.cases; }
  void fail(const Graph& g, const std::string& what) {
    ++result_.cases;
    ++result_.violations;
    if (result_.counterexample.empty()) result_.counterexample = what + " on " + g.to_string();
  }
  void expect(bool ok, const Graph& g, const std::string& what) {
    if (ok) {
      pass();
    } else {
      fail(g, what);
    }
  }
  /// Runs body, turning any exception into a violation.
  void guard(const Graph& g, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      fail(g, std::string("exception: ") + e.what());
    }
  }

  CheckResult finish(std::string detail) {
    result_.detail = std::move(detail);
    result_.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return result_;
  }

 private:
  CheckResult result_;
  std::chrono::steady_clock::time_point start_;
};

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Graph random_graph(Rng& rng, int n_min, int n_max) {
  int n = uniform(rng, n_min, n_max);
  double p = std::uniform_real_distribution<double>(0.1, 0.7)(rng);
  return random_connected_graph(n, p, rng);
}

VertexSet random_subset(Rng& rng, const VertexSet& of) {
  VertexSet s;
  for (Vertex v : of)
    if (uniform(rng, 0, 1)) s.insert(v);
  return s;
}

/// Alternates pipeline decompositions with random caterpillars.
RootedBranchDecomposition mixed_decomposition(const Graph& g, Rng& rng, bool pipeline) {
  if (pipeline) return root_decomposition(compute_sm_decomposition(g).bd);
  std::vector<Vertex> order = g.vertices().to_vector();
  std::shuffle(order.begin(), order.end(), rng);
  return root_decomposition(BranchDecomposition::caterpillar(order));
}

template <class Problem>
void preserves_at_every_join(const Problem& p, const Graph& g, const RootedBranchDecomposition& rbd,
                             Recorder& rec, const char* name) {
  using Cert = typename Problem::Certificate;
  std::vector<std::vector<Cert>> sets(rbd.nodes.size());
  for (int w : rbd.postorder()) {
    NodeContext ctx = make_context(g, rbd, w);
    const RootedNode& node = rbd.nodes[w];
    if (node.is_leaf()) {
      sets[w] = p.initialize_leaf(ctx, node.leaf);
      continue;
    }
    sets[w] = p.join(ctx, sets[node.left], sets[node.right]);
    std::vector<Cert> big = brute_conc_sets(p, g, ctx.a1, sets[node.left], ctx.a2, sets[node.right]);
    rec.expect(check_preserves(p, g, ctx.a, sets[w], big), g,
               std::string(name) + " join at " + ctx.a.to_string() + " loses a completion");
  }
}

}  // namespace

CheckResult check_submodularity(std::uint64_t seed, int trials, int n_max) {
  Recorder rec("submodularity");
  Rng rng(seed);
  for (int i = 0; i < trials; ++i) {
    Graph g = random_graph(rng, 2, n_max);
    VertexSet a = random_subset(rng, g.vertices());
    VertexSet b = random_subset(rng, g.vertices());
    int lhs = mm_value(g, a) + mm_value(g, b);
    int rhs = mm_value(g, a | b) + mm_value(g, a & b);
    rec.expect(lhs >= rhs, g, "A=" + a.to_string() + " B=" + b.to_string());
  }
  return rec.finish(std::to_string(trials) + " random (G,A,B), n<=" + std::to_string(n_max));
}

CheckResult check_koenig(int n_max) {
  Recorder rec("koenig");
  for (const Graph& g : connected_graphs_up_to(n_max)) {
    std::vector<Vertex> vs = g.vertices().to_vector();
    for (std::uint32_t mask = 0; mask < (1u << vs.size()); ++mask) {
      VertexSet a;
      for (std::size_t i = 0; i < vs.size(); ++i)
        if (mask >> i & 1u) a.insert(vs[i]);
      Matching m = max_matching_cut(g, a);
      VertexSet cover = koenig_cover(g, a, m);
      bool ok = static_cast<int>(m.size()) == cover.size() && is_matching(m);
      for (const Edge& e : crossing_edges(g, a))
        ok = ok && (cover.contains(e.u) || cover.contains(e.v));
      for (const Edge& e : m) ok = ok && g.has_edge(e.u, e.v) && a.contains(e.u) != a.contains(e.v);
      rec.expect(ok, g, "cut " + a.to_string());
    }
  }
  return rec.finish("every cut of every connected graph, n<=" + std::to_string(n_max));
}

CheckResult check_split_roundtrip(std::uint64_t seed, int n_all, int random, int n_random_max) {
  Recorder rec("split-roundtrip");
  auto check_one = [&](const Graph& g) {
    rec.guard(g, [&] {
      SplitDecomposition sd = split_decompose(g);
      bool ok = sd.recompose_all() == g;
      for (const Graph& prime : sd.primes())
        if (prime.order() >= 4 && find_split_bruteforce(prime)) ok = false;
      rec.expect(ok, g, "recomposition differs or a prime has a split");
    });
  };
  for (const Graph& g : connected_graphs_up_to(n_all)) check_one(g);
  Rng rng(seed);
  for (int i = 0; i < random; ++i) check_one(random_graph(rng, 2, n_random_max));
  return rec.finish("all connected n<=" + std::to_string(n_all) + " and " + std::to_string(random) +
                    " random n<=" + std::to_string(n_random_max));
}

CheckResult check_widths(std::uint64_t seed, int n_all, int random, int n_random_max) {
  Recorder rec("widths");
  auto bounded = [&](const Graph& g) {
    rec.guard(g, [&] {
      PipelineResult r = compute_sm_decomposition(g);
      int smw = exact_smw(g, std::max(8, g.order()));
      rec.expect(r.certified() && r.report.width <= 54 * (smw + 1) * (smw + 1), g,
                 "pipeline width " + std::to_string(r.report.width) + " vs smw " +
                     std::to_string(smw));
    });
  };
  for (const Graph& g : connected_graphs_up_to(n_all)) bounded(g);
  Rng rng(seed);
  for (int i = 0; i < random; ++i) bounded(random_graph(rng, 2, n_random_max));
  int dh = 0, tc = 0, glued = 0;
  for (int i = 0; i < 60; ++i) {
    FamilyInstance inst = generate_family({FamilyKind::distance_hereditary, uniform(rng, 2, 16), 1}, rng());
    rec.guard(inst.graph, [&] {
      int width = compute_sm_decomposition(inst.graph).report.width;
      int cert = f_width(*inst.certificate, inst.graph, CutFunction::sm).width;
      rec.expect(width == 1 && cert == 1, inst.graph,
                 "distance-hereditary width " + std::to_string(width));
      ++dh;
    });
  }
  for (int i = 0; i < 60; ++i) {
    int k = uniform(rng, 1, 3);
    FamilyInstance inst = generate_family({FamilyKind::twin_cover, uniform(rng, k + 1, 12), k}, rng());
    rec.guard(inst.graph, [&] {
      int width = compute_sm_decomposition(inst.graph).report.width;
      int cert = f_width(*inst.certificate, inst.graph, CutFunction::sm).width;
      rec.expect(width <= k && cert <= k, inst.graph,
                 "twin-cover(" + std::to_string(k) + ") width " + std::to_string(width));
      ++tc;
    });
  }
  for (int i = 0; i < 30; ++i) {
    int k = uniform(rng, 1, 3);
    FamilyInstance inst = generate_family({FamilyKind::glued, uniform(rng, k + 5, 8), k}, rng());
    rec.guard(inst.graph, [&] {
      int smw = exact_smw(inst.graph);
      rec.expect(smw <= k + 1, inst.graph, "glued(" + std::to_string(k) + ") smw " + std::to_string(smw));
      ++glued;
    });
  }
  return rec.finish("all connected n<=" + std::to_string(n_all) + ", " + std::to_string(random) +
                    " random n<=" + std::to_string(n_random_max) + ", " + std::to_string(dh) +
                    " distance-hereditary, " + std::to_string(tc) + " twin-cover, " +
                    std::to_string(glued) + " glued");
}

CheckResult check_exact_spots() {
  Recorder rec("exact-spots");
  struct Spot {
    const char* name;
    Graph g;
    CutFunction f;
    int expected;
  };
  std::vector<Spot> spots{{"smw(C5)", corpus::c5(), CutFunction::sm, 2},
                          {"smw(K4)", corpus::k4(), CutFunction::sm, 1},
                          {"smw(P4)", corpus::p4(), CutFunction::sm, 1},
                          {"mmw(K4)", corpus::k4(), CutFunction::mm, 2}};
  std::string detail;
  for (const Spot& s : spots) {
    rec.guard(s.g, [&] {
      int dp = s.f == CutFunction::sm ? exact_smw(s.g) : exact_mmw(s.g);
      int walk = enumerate_optimal_width(s.g, s.f);
      rec.expect(dp == s.expected && walk == s.expected, s.g,
                 std::string(s.name) + " = " + std::to_string(dp) + "/" + std::to_string(walk));
      if (!detail.empty()) detail += ", ";
      detail += std::string(s.name) + "=" + std::to_string(dp);
    });
  }
  return rec.finish(detail);
}

CheckResult check_solvers(std::uint64_t seed, int n_all, int n_all_no_eds, int eds_random) {
  Recorder rec("solvers");
  auto compare = [&](Problem p, const Graph& g, const RootedBranchDecomposition& rbd) {
    rec.guard(g, [&] {
      int got = solve_problem(p, g, rbd).value;
      int want = brute_force_solve(p, g);
      rec.expect(got == want, g,
                 std::string(to_string(p)) + " gave " + std::to_string(got) + ", oracle " +
                     std::to_string(want));
    });
  };
  const Problem all[] = {Problem::maxcut, Problem::hc, Problem::chromatic, Problem::eds};
  for (int n = 1; n <= std::max(n_all, n_all_no_eds); ++n) {
    for (const Graph& g : connected_graphs(n)) {
      RootedBranchDecomposition rbd = root_decomposition(compute_sm_decomposition(g).bd);
      for (Problem p : all)
        if (p == Problem::eds ? n <= n_all : n <= n_all_no_eds) compare(p, g, rbd);
    }
  }
  Rng rng(seed);
  for (int i = 0; i < eds_random; ++i) {
    Graph g = random_graph(rng, 2, kEdsOracleLimit);
    compare(Problem::eds, g, root_decomposition(compute_sm_decomposition(g).bd));
  }
  return rec.finish("all connected n<=" + std::to_string(n_all) + " (4 problems), n<=" +
                    std::to_string(n_all_no_eds) + " (maxcut/hc/chromatic), " +
                    std::to_string(eds_random) + " random n<=7 (eds)");
}

CheckResult check_ceilings(std::uint64_t seed, int n_all, int random) {
  Recorder rec("ceilings");
  long joins = 0;
  auto run = [&](const Graph& g, const RootedBranchDecomposition& rbd) {
    rec.guard(g, [&] {
      joins += static_cast<long>(recursive_solve(MaxCutProblem(), g, rbd).stats.size());
      joins += static_cast<long>(recursive_solve(HamiltonianProblem(), g, rbd).stats.size());
      int chi = oracle_chromatic(g);
      joins += static_cast<long>(recursive_solve(ColoringProblem(chi), g, rbd).stats.size());
      int eds = oracle_eds(g);
      joins += static_cast<long>(recursive_solve(EdsProblem(eds), g, rbd).stats.size());
      rec.pass();
    });
  };
  Rng rng(seed);
  for (const Graph& g : connected_graphs_up_to(n_all)) {
    run(g, mixed_decomposition(g, rng, true));
    run(g, mixed_decomposition(g, rng, false));
  }
  for (int i = 0; i < random; ++i) {
    Graph g = random_graph(rng, 2, kEdsOracleLimit);
    run(g, mixed_decomposition(g, rng, i % 2 == 0));
  }
  return rec.finish(std::to_string(joins) + " nodes checked over pipeline and caterpillar decompositions");
}

CheckResult check_preservation(std::uint64_t seed, int per_problem, int n_max) {
  Recorder rec("preserves");
  Rng rng(seed);
  for (int i = 0; i < per_problem; ++i) {
    Graph g = random_graph(rng, 3, n_max);
    RootedBranchDecomposition rbd = mixed_decomposition(g, rng, i % 2 == 0);
    rec.guard(g, [&] { preserves_at_every_join(MaxCutProblem(), g, rbd, rec, "maxcut"); });
    rec.guard(g, [&] { preserves_at_every_join(HamiltonianProblem(), g, rbd, rec, "hc"); });
    int chi = oracle_chromatic(g);
    rec.guard(g, [&] { preserves_at_every_join(ColoringProblem(chi), g, rbd, rec, "chromatic"); });
    int t = i % 2 == 0 ? oracle_eds(g) : -1;
    rec.guard(g, [&] { preserves_at_every_join(EdsProblem(t), g, rbd, rec, "eds"); });
  }
  return rec.finish(std::to_string(per_problem) + " random instances per problem, n<=" +
                    std::to_string(n_max));
}

CheckResult check_sandwich(std::uint64_t seed, int n_max) {
  Recorder rec("sandwich");
  Rng rng(seed);
  const FamilyKind kinds[] = {FamilyKind::tree, FamilyKind::cycle, FamilyKind::clique,
                              FamilyKind::series_parallel};
  for (FamilyKind kind : kinds) {
    for (int n = 3; n <= n_max; ++n) {
      for (int rep = 0; rep < 5; ++rep) {
        FamilyInstance inst = generate_family({kind, n, 1}, rng());
        const Graph& g = inst.graph;
        rec.guard(g, [&] {
          int tw = *inst.treewidth;
          int mmw = exact_mmw(g);
          int smw = exact_smw(g);
          rec.expect(3 * mmw >= tw + 1 && mmw <= tw + 1 && smw <= tw + 1, g,
                     std::string(to_string(kind)) + ": tw=" + std::to_string(tw) +
                         " mmw=" + std::to_string(mmw) + " smw=" + std::to_string(smw));
        });
      }
    }
  }
  return rec.finish("trees, cycles, cliques and series-parallel graphs, 3<=n<=" +
                    std::to_string(n_max));
}

std::vector<std::string> check_names() {
  return {"submodularity", "koenig", "split", "widths", "spots",
          "solvers", "ceilings", "preserves", "sandwich"};
}

CheckResult run_check(const std::string& name, std::uint64_t seed) {
  if (name == "submodularity") return check_submodularity(seed);
  if (name == "koenig") return check_koenig();
  if (name == "split") return check_split_roundtrip(seed);
  if (name == "widths") return check_widths(seed);
  if (name == "spots") return check_exact_spots();
  if (name == "solvers") return check_solvers(seed);
  if (name == "ceilings") return check_ceilings(seed);
  if (name == "preserves") return check_preservation(seed);
  if (name == "sandwich") return check_sandwich(seed);
  throw DomainError("unknown check suite '" + name + "'");
}

}  // namespace smw
