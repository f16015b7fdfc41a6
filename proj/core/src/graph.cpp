#include "smw/graph.hpp"

#include <algorithm>
#include <sstream>

#include "smw/errors.hpp"

namespace smw {

Graph::Graph(VertexSet vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  adjacency_.resize(static_cast<std::size_t>(vertices_.max() + 1));
  for (const Edge& e : edges_) {
    if (e.u == e.v) throw DomainError("self-loop at vertex " + std::to_string(e.u));
    if (!vertices_.contains(e.u) || !vertices_.contains(e.v)) {
      throw DomainError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                        " has an endpoint outside the vertex set");
    }
    if (adjacency_[e.u].contains(e.v)) {
      throw DomainError("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    adjacency_[e.u].insert(e.v);
    adjacency_[e.v].insert(e.u);
  }
  std::sort(edges_.begin(), edges_.end());
}

Graph Graph::from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (auto [a, b] : edges) es.emplace_back(a, b);
  return Graph(VertexSet::prefix(n), std::move(es));
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (!vertices_.contains(a)) return false;
  return adjacency_[a].contains(b);
}

const VertexSet& Graph::neighbors(Vertex v) const {
  if (!vertices_.contains(v)) {
    throw DomainError("vertex " + std::to_string(v) + " not in graph");
  }
  return adjacency_[v];
}

std::string Graph::to_string() const {
  std::ostringstream os;
  os << "n=" << order() << " m=" << size() << " V=" << vertices_.to_string() << " [";
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) os << ' ';
    os << edges_[i].u << '-' << edges_[i].v;
  }
  os << ']';
  return os.str();
}

namespace {

void require_subset(const Graph& g, const VertexSet& s) {
  if (!s.is_subset_of(g.vertices())) {
    throw DomainError("vertex set " + s.to_string() + " is not a subset of V(G)");
  }
}

}  // namespace

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  require_subset(g, s);
  std::vector<Edge> es;
  for (const Edge& e : g.edges())
    if (s.contains(e.u) && s.contains(e.v)) es.push_back(e);
  return Graph(s, std::move(es));
}

Graph bipartite_cut_graph(const Graph& g, const VertexSet& a) {
  require_subset(g, a);
  return Graph(g.vertices(), crossing_edges(g, a));
}

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
  require_subset(g, s);
  VertexSet out;
  for (Vertex v : s) out |= g.neighbors(v);
  return out - s;
}

Graph graph_sum(const Graph& g1, const Graph& g2) {
  std::vector<Edge> es = g1.edges();
  for (const Edge& e : g2.edges())
    if (!g1.has_edge(e.u, e.v)) es.push_back(e);
  return Graph(g1.vertices() | g2.vertices(), std::move(es));
}

Graph graph_from_vertices(const VertexSet& vs) { return Graph(vs, {}); }

Graph graph_from_edges(const std::vector<Edge>& es) {
  VertexSet vs;
  for (const Edge& e : es) {
    vs.insert(e.u);
    vs.insert(e.v);
  }
  std::vector<Edge> unique = es;
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  return Graph(vs, std::move(unique));
}

VertexSet complement(const Graph& g, const VertexSet& a) { return g.vertices() - a; }

std::vector<Edge> crossing_edges(const Graph& g, const VertexSet& a) {
  std::vector<Edge> es;
  for (const Edge& e : g.edges())
    if (a.contains(e.u) != a.contains(e.v)) es.push_back(e);
  return es;
}

std::vector<Edge> edges_between(const Graph& g, const VertexSet& x, const VertexSet& y) {
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) {
    if ((x.contains(e.u) && y.contains(e.v)) || (x.contains(e.v) && y.contains(e.u))) {
      es.push_back(e);
    }
  }
  return es;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> comps;
  VertexSet seen;
  for (Vertex start : g.vertices()) {
    if (seen.contains(start)) continue;
    VertexSet comp{start};
    VertexSet frontier{start};
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= g.neighbors(v);
      next -= comp;
      comp |= next;
      frontier = next;
    }
    seen |= comp;
    comps.push_back(comp);
  }
  return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

Graph delete_vertex(const Graph& g, Vertex v) {
  VertexSet rest = g.vertices();
  rest.erase(v);
  return induced_subgraph(g, rest);
}

}  // namespace smw
