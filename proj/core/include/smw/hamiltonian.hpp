#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "smw/dp_framework.hpp"

namespace smw {

/// Vertex-disjoint paths covering `vertices` (single vertices are paths of
/// length zero), or one cycle through all of V(G).
struct PathSystem {
  VertexSet vertices;
  std::vector<Edge> edges;  // sorted

  bool operator==(const PathSystem&) const = default;
};

struct PathEnds {
  Vertex first = 0;  // first <= second; equal for a single vertex
  Vertex second = 0;
};

struct PathStructure {
  bool cycle = false;
  std::vector<PathEnds> paths;  // sorted by (first, second)
};

/// Paths of the system, or nullopt when some vertex has degree > 2, an edge
/// leaves the vertex set, or a cycle does not cover every vertex.
std::optional<PathStructure> analyse_path_system(const PathSystem& ps);

/// Unordered pair of outside neighbourhoods (N(v1) \ A, N(v2) \ A), smaller first.
using PathClass = std::pair<VertexSet, VertexSet>;
std::vector<PathClass> path_classes(const Graph& g, const VertexSet& a, const PathSystem& ps);

class HamiltonianProblem {
 public:
  using Certificate = PathSystem;

  std::vector<Certificate> initialize_leaf(const NodeContext& ctx, Vertex v) const;
  std::vector<Certificate> join(const NodeContext& ctx, const std::vector<Certificate>& s1,
                                const std::vector<Certificate>& s2) const;
  bool verify(const Graph& g, const Certificate& c) const;

  std::vector<Certificate> enumerate(const Graph& g, const VertexSet& x) const;
  std::vector<Certificate> brute_conc(const Graph& g, const VertexSet& a1, const Certificate& x,
                                      const VertexSet& a2, const Certificate& y) const;
  std::optional<long> conc_score(const Graph& g, const Certificate& x,
                                 const Certificate& z) const;
};

/// Hamiltonian cycle test; the witness is a cyclic vertex order.
struct HamiltonianResult {
  bool hamiltonian = false;
  std::vector<Vertex> cycle;
};

HamiltonianResult solve_hamiltonian(const Graph& g, const RootedBranchDecomposition& rbd);

/// Cyclic vertex order of a Hamiltonian-cycle certificate.
std::vector<Vertex> cycle_order(const PathSystem& ps);

}  // namespace smw
