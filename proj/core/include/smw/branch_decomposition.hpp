#pragma once

#include <string>
#include <utility>
#include <vector>

#include "smw/cut_functions.hpp"
#include "smw/graph.hpp"

namespace smw {

/// Subcubic tree whose leaves carry the vertices of a graph.
///
/// Nodes are dense indices; surgery may leave dead slots behind until
/// compacted(). Inner nodes carry leaf label -1.
class BranchDecomposition {
 public:
  BranchDecomposition() = default;

  static BranchDecomposition single_leaf(Vertex v);
  /// One inner node adjacent to every vertex (two vertices: a single edge).
  static BranchDecomposition star(const VertexSet& vs);
  /// Spine of inner nodes, leaves in the given order.
  static BranchDecomposition caterpillar(const std::vector<Vertex>& order);

  int add_node(Vertex leaf = -1);
  void add_edge(int a, int b);
  void remove_edge(int a, int b);
  /// Deletes a node and its incident edges.
  void remove_node(int node);
  /// Replaces the degree-2 node by an edge between its neighbours.
  void suppress(int node);
  /// Inserts a new inner node on edge a-b and returns it.
  int subdivide(int a, int b);

  int slot_count() const { return static_cast<int>(adj_.size()); }
  int node_count() const;
  bool alive(int node) const { return alive_.at(node); }
  const std::vector<int>& neighbors(int node) const { return adj_.at(node); }
  int degree(int node) const { return static_cast<int>(adj_.at(node).size()); }
  Vertex leaf_vertex(int node) const { return leaf_.at(node); }
  bool is_leaf(int node) const { return leaf_.at(node) >= 0; }
  /// Node carrying v; throws DomainError when absent.
  int leaf_of(Vertex v) const;
  /// Edges (a, b) with a < b, ascending.
  std::vector<std::pair<int, int>> edges() const;
  VertexSet vertices() const;

  /// Throws InvariantError unless this is a subcubic tree whose degree <= 1
  /// nodes are exactly the labelled ones.
  void validate() const;
  /// Same as validate() and additionally requires the labels to equal vs.
  void validate(const VertexSet& vs) const;

  /// Renumbers live nodes densely, preserving relative order.
  BranchDecomposition compacted() const;

  /// Leaves of the component containing `start` once edge start-avoid is cut.
  VertexSet side(int start, int avoid) const;

  std::string to_string() const;

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<Vertex> leaf_;
  std::vector<bool> alive_;
};

struct EdgeCut {
  int a = 0;
  int b = 0;
  /// Normalised side: the smaller one, ties to the side holding the smallest vertex.
  VertexSet side;
};

VertexSet normalise_cut(const VertexSet& side, const VertexSet& all);

/// One cut per tree edge, in edges() order.
std::vector<EdgeCut> edge_cuts(const BranchDecomposition& bd);
/// Normalised cut sides sorted by (size, lexicographic).
std::vector<VertexSet> induced_cuts(const BranchDecomposition& bd);

struct WidthReport {
  CutFunction function = CutFunction::sm;
  std::vector<EdgeCut> cuts;
  std::vector<CutEvaluation> evaluations;
  int width = 0;
};

WidthReport f_width(const BranchDecomposition& bd, const Graph& g, CutFunction f);

struct RootedNode {
  int parent = -1;
  int left = -1;
  int right = -1;
  Vertex leaf = -1;
  VertexSet vertices;

  bool is_leaf() const { return left < 0; }
};

/// Rooted binary tree; every inner node has exactly two children.
struct RootedBranchDecomposition {
  std::vector<RootedNode> nodes;
  int root = -1;

  /// Children before parents.
  std::vector<int> postorder() const;
  /// V_w of every non-root node.
  std::vector<VertexSet> cuts() const;
};

/// Subdivides the smallest edge and roots there; a single leaf roots at
/// itself. Degree-2 inner nodes of
/// the input are contracted away.
RootedBranchDecomposition root_decomposition(const BranchDecomposition& bd);

}  // namespace smw
