#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "smw/graph.hpp"

namespace smw {

struct Split {
  VertexSet v1;
  VertexSet v2;
};

/// A split of a connected graph with at least 4 vertices, or nullopt when
/// the graph is prime. Among the minimal splits found by seeded closure the
/// most balanced one is returned (ties: smallest V1); V1 holds min V(G).
std::optional<Split> find_split(const Graph& g);

/// Exhaustive scan over all bipartitions; n <= 16.
std::optional<Split> find_split_bruteforce(const Graph& g);

/// Every split of g (each bipartition reported once, V1 holding min V(G)); n <= 16.
std::vector<Split> all_splits_bruteforce(const Graph& g);

/// Decompose g along a split with a fresh marker vertex.
std::pair<Graph, Graph> decompose_once(const Graph& g, const Split& split, Vertex marker);

/// G1 * G2 along the shared marker.
Graph recompose(const Graph& g1, const Graph& g2, Vertex marker);

class SplitDecomposition {
 public:
  /// Builds the tree from parts whose non-original vertices are markers,
  /// each shared by exactly two parts.
  SplitDecomposition(Graph original, std::vector<Graph> parts);

  const Graph& original() const { return original_; }
  const std::vector<Graph>& primes() const { return primes_; }
  int prime_count() const { return static_cast<int>(primes_.size()); }
  /// marker -> (i, j), i < j
  const std::map<Vertex, std::pair<int, int>>& markers() const { return markers_; }
  /// (i, j, marker)
  struct TreeEdge {
    int i;
    int j;
    Vertex marker;
  };
  const std::vector<TreeEdge>& tree_edges() const { return tree_edges_; }

  bool is_marker(Vertex v) const { return markers_.count(v) > 0; }
  /// Index of the other prime holding marker v.
  int other_side(Vertex marker, int i) const;

  VertexSet tot(Vertex v, int i) const;
  VertexSet tot(const VertexSet& s, int i) const;
  VertexSet act(Vertex v, int i) const;
  VertexSet tot_inverse(const VertexSet& s, int i) const;

  /// Recompose every marker; yields a graph on original ids.
  Graph recompose_all() const;

 private:
  VertexSet originals_behind(int from, int start) const;

  Graph original_;
  std::vector<Graph> primes_;
  std::map<Vertex, std::pair<int, int>> markers_;
  std::vector<TreeEdge> tree_edges_;
  std::vector<std::vector<std::pair<int, Vertex>>> adj_;
};

/// Full decomposition into primes. Markers are numbered upward from
/// `first_marker`, or from max id + 1 when it is negative.
SplitDecomposition split_decompose(const Graph& g, Vertex first_marker = -1);

}  // namespace smw
