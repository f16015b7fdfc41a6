#pragma once

#include <cstdint>
#include <vector>

#include "smw/graph.hpp"

namespace smw {

inline constexpr int kEnumerationLimit = 8;

/// Canonical adjacency code: equal for isomorphic graphs, distinct otherwise.
/// Order at most 11.
std::uint64_t canonical_code(const Graph& g);

/// One representative per isomorphism class of connected graphs on
/// vertices 0..n-1, ordered by edge count and then by canonical code.
/// Refuses above kEnumerationLimit.
std::vector<Graph> connected_graphs(int n);

/// connected_graphs(1) ... connected_graphs(n_max), concatenated.
std::vector<Graph> connected_graphs_up_to(int n_max);

}  // namespace smw
