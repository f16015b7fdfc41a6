#pragma once

#include <vector>

#include "smw/graph.hpp"

namespace smw {

using Matching = std::vector<Edge>;

/// Hopcroft-Karp on an index bipartite graph. adj[l] lists right indices.
/// Returns, for each left index, its matched right index or -1.
std::vector<int> hopcroft_karp(int n_left, int n_right, const std::vector<std::vector<int>>& adj);

/// Maximum matching among the G-edges joining `left` to `right` (disjoint sets).
Matching bipartite_max_matching(const Graph& g, const VertexSet& left, const VertexSet& right);

/// Maximum matching of G[A, V \ A].
Matching max_matching_cut(const Graph& g, const VertexSet& a);

/// Minimum vertex cover of G[A, V \ A] built from a maximum matching.
/// Throws DomainError if `m` is not a matching of crossing edges or is not maximum.
VertexSet koenig_cover(const Graph& g, const VertexSet& a, const Matching& m);

/// Maximum matching of a general graph (Edmonds).
Matching general_max_matching(const Graph& g);

bool is_matching(const Matching& m);

}  // namespace smw
