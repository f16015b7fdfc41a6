#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "smw/vertex_set.hpp"

namespace smw {

/// Unordered vertex pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool touches(Vertex x) const { return u == x || v == x; }
  Vertex other(Vertex x) const { return x == u ? v : u; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph over arbitrary non-negative ids.
class Graph {
 public:
  Graph() = default;
  /// Throws DomainError on self-loops, duplicate edges or foreign endpoints.
  Graph(VertexSet vertices, std::vector<Edge> edges);

  /// Vertices 0..n-1.
  static Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  const VertexSet& vertices() const { return vertices_; }
  /// Sorted ascending.
  const std::vector<Edge>& edges() const { return edges_; }
  int order() const { return vertices_.size(); }
  int size() const { return static_cast<int>(edges_.size()); }

  bool has_vertex(Vertex v) const { return vertices_.contains(v); }
  bool has_edge(Vertex a, Vertex b) const;
  const VertexSet& neighbors(Vertex v) const;
  int degree(Vertex v) const { return neighbors(v).size(); }

  /// "n=4 m=3 [0-1 1-2 2-3]"
  std::string to_string() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  VertexSet vertices_;
  std::vector<Edge> edges_;
  std::vector<VertexSet> adjacency_;
};

/// G[S]; ids preserved.
Graph induced_subgraph(const Graph& g, const VertexSet& s);
/// Spanning subgraph keeping exactly the edges crossing (A, V \ A).
Graph bipartite_cut_graph(const Graph& g, const VertexSet& a);
/// N(S) = union of N(v) over v in S, minus S.
VertexSet neighborhood(const Graph& g, const VertexSet& s);
/// Vertex and edge union.
Graph graph_sum(const Graph& g1, const Graph& g2);
/// The graph (V', {}).
Graph graph_from_vertices(const VertexSet& vs);
/// The graph (V(E'), E').
Graph graph_from_edges(const std::vector<Edge>& es);

/// V(G) \ A
VertexSet complement(const Graph& g, const VertexSet& a);
std::vector<Edge> crossing_edges(const Graph& g, const VertexSet& a);
/// Edges with one endpoint in x and the other in y (x, y disjoint).
std::vector<Edge> edges_between(const Graph& g, const VertexSet& x, const VertexSet& y);
bool is_connected(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g);
/// Removes v and its incident edges.
Graph delete_vertex(const Graph& g, Vertex v);

}  // namespace smw
