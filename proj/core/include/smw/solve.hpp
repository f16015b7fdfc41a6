#pragma once

#include <vector>

#include "smw/oracles.hpp"
#include "smw/pipeline.hpp"

namespace smw {

/// Answer of one solver run together with its witness.
struct SolveOutcome {
  Problem problem = Problem::maxcut;
  /// Cut size, 1/0 for Hamiltonicity, colour count or EDS size.
  int value = 0;
  VertexSet cut_side;                     // maxcut
  std::vector<Vertex> cycle;              // hc, empty when no cycle
  std::vector<VertexSet> color_classes;   // chromatic
  std::vector<Edge> dominating_edges;     // eds
  /// The witness was re-checked against the graph.
  bool verified = false;
};

/// Runs the matching solver over rbd and re-verifies its witness; throws
/// InvariantError when the witness does not check out.
SolveOutcome solve_problem(Problem p, const Graph& g, const RootedBranchDecomposition& rbd);

/// Pipeline decomposition followed by solve_problem.
SolveOutcome solve_problem(Problem p, const Graph& g, const PipelineOptions& opts = {});

}  // namespace smw
