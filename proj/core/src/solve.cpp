#include "smw/solve.hpp"

#include "smw/coloring.hpp"
#include "smw/eds.hpp"
#include "smw/hamiltonian.hpp"
#include "smw/maxcut.hpp"

namespace smw {

namespace {

bool is_hamiltonian_cycle(const Graph& g, const std::vector<Vertex>& cycle) {
  if (static_cast<int>(cycle.size()) != g.order() || g.order() < 3) return false;
  if (VertexSet::from_range(cycle) != g.vertices()) return false;
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (!g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  return true;
}

}  // namespace

SolveOutcome solve_problem(Problem p, const Graph& g, const RootedBranchDecomposition& rbd) {
  SolveOutcome out;
  out.problem = p;
  switch (p) {
    case Problem::maxcut: {
      MaxCutResult r = solve_maxcut(g, rbd);
      out.value = r.value;
      out.cut_side = r.witness;
      out.verified = cut_size(g, r.witness) == r.value;
      break;
    }
    case Problem::hc: {
      HamiltonianResult r = solve_hamiltonian(g, rbd);
      out.value = r.hamiltonian ? 1 : 0;
      out.cycle = r.cycle;
      out.verified = !r.hamiltonian || is_hamiltonian_cycle(g, r.cycle);
      break;
    }
    case Problem::chromatic: {
      ColoringResult r = solve_chromatic(g, rbd);
      out.value = r.colors;
      out.color_classes = r.witness.blocks;
      out.verified = r.witness.ground() == g.vertices() && all_independent(g, r.witness) &&
                     static_cast<int>(r.witness.blocks.size()) <= r.colors;
      break;
    }
    case Problem::eds: {
      EdsResult r = solve_eds(g, rbd);
      out.value = r.size;
      out.dominating_edges = r.edges;
      out.verified = static_cast<int>(r.edges.size()) == r.size && is_edge_dominating(g, r.edges);
      for (const Edge& e : r.edges) out.verified = out.verified && g.has_edge(e.u, e.v);
      break;
    }
  }
  if (!out.verified) throw InvariantError(std::string(to_string(p)) + " witness failed verification");
  return out;
}

SolveOutcome solve_problem(Problem p, const Graph& g, const PipelineOptions& opts) {
  PipelineResult pr = compute_sm_decomposition(g, opts);
  return solve_problem(p, g, root_decomposition(pr.bd));
}

}  // namespace smw
