#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "smw/branch_decomposition.hpp"

namespace smw {

/// The single generator every randomised routine draws from.
using Rng = std::mt19937_64;

enum class FamilyKind { tree, cycle, clique, series_parallel, distance_hereditary, twin_cover, glued };

const char* to_string(FamilyKind k);
/// Accepts "tree", "cycle", "clique", "series-parallel", "distance-hereditary",
/// "twin-cover", "glued"; throws DomainError otherwise.
FamilyKind parse_family(const std::string& name);

struct FamilySpec {
  FamilyKind kind = FamilyKind::tree;
  int n = 6;
  int k = 1;  // twin-cover size or glued treewidth
};

/// One step of a distance-hereditary construction: `added` joins as a
/// pendant, true twin or false twin of `base`.
struct DhStep {
  enum class Op { pendant, true_twin, false_twin };
  Op op = Op::pendant;
  Vertex base = 0;
  Vertex added = 0;
};

struct FamilyInstance {
  FamilySpec spec;
  Graph graph;
  /// Declared sm-width upper bound (tw+1, tc, 1 or k+1).
  int bound = 0;
  /// Treewidth when the family fixes it.
  std::optional<int> treewidth;
  /// Distance-hereditary construction sequence (also used for the glued part).
  std::vector<DhStep> dh_steps;
  /// The cover S of a twin-cover instance.
  VertexSet twin_cover;
  /// Decomposition built from the construction that witnesses `bound`
  /// (distance-hereditary and twin-cover instances).
  std::optional<BranchDecomposition> certificate;
  /// For glued instances: the split side X of the distance-hereditary part
  /// and the bag Y of the bounded-treewidth part.
  VertexSet glued_x;
  VertexSet glued_y;
};

/// Throws DomainError on invalid parameters.
FamilyInstance generate_family(const FamilySpec& spec, std::uint64_t seed);

/// Distance-hereditary graph on 0..n-1 by random pendant and twin steps from K2.
Graph random_distance_hereditary(int n, Rng& rng, std::vector<DhStep>* steps = nullptr);
/// Sibling-leaf decomposition rebuilt from a construction sequence; every
/// cut with two vertices on each side is a split.
BranchDecomposition dh_decomposition(Vertex first, const std::vector<DhStep>& steps);

/// Groups of leaves as consecutive subtrees hung off one spine.
BranchDecomposition grouped_decomposition(const std::vector<std::vector<Vertex>>& groups);

/// Connected graph with n vertices, each further pair present with probability p.
Graph random_connected_graph(int n, double p, Rng& rng);
Graph random_tree(int n, Rng& rng);
/// Random k-tree on n > k vertices (treewidth exactly k).
Graph random_k_tree(int n, int k, Rng& rng, std::vector<VertexSet>* bags = nullptr);
/// Series-parallel graph with a cycle (treewidth 2), n >= 3.
Graph random_series_parallel(int n, Rng& rng);

}  // namespace smw
