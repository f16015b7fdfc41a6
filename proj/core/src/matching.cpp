#include "smw/matching.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>
#include <algorithm>
#include <deque>
#include <limits>

#include "smw/errors.hpp"

namespace smw {

std::vector<int> hopcroft_karp(int n_left, int n_right,
                               const std::vector<std::vector<int>>& adj) {
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> match_l(n_left, -1), match_r(n_right, -1), dist(n_left);

  auto bfs = [&] {
    std::deque<int> q;
    bool found = false;
    for (int l = 0; l < n_left; ++l) {
      if (match_l[l] == -1) {
        dist[l] = 0;
        q.push_back(l);
      } else {
        dist[l] = kInf;
      }
    }
    while (!q.empty()) {
      int l = q.front();
      q.pop_front();
      for (int r : adj[l]) {
        int next = match_r[r];
        if (next == -1) {
          found = true;
        } else if (dist[next] == kInf) {
          dist[next] = dist[l] + 1;
          q.push_back(next);
        }
      }
    }
    return found;
  };

  std::vector<std::size_t> it(n_left);
  auto dfs = [&](auto&& self, int l) -> bool {
    for (; it[l] < adj[l].size(); ++it[l]) {
      int r = adj[l][it[l]];
      int next = match_r[r];
      if (next == -1 || (dist[next] == dist[l] + 1 && self(self, next))) {
        match_l[l] = r;
        match_r[r] = l;
        ++it[l];
        return true;
      }
    }
    dist[l] = kInf;
    return false;
  };

  while (bfs()) {
    std::fill(it.begin(), it.end(), 0);
    for (int l = 0; l < n_left; ++l)
      if (match_l[l] == -1) dfs(dfs, l);
  }
  return match_l;
}

Matching bipartite_max_matching(const Graph& g, const VertexSet& left, const VertexSet& right) {
  std::vector<Vertex> ls = left.to_vector(), rs = right.to_vector();
  std::vector<int> r_index(VertexSet::kCapacity, -1);
  for (std::size_t i = 0; i < rs.size(); ++i) r_index[rs[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> adj(ls.size());
  for (std::size_t i = 0; i < ls.size(); ++i)
    for (Vertex w : g.neighbors(ls[i]) & right) adj[i].push_back(r_index[w]);
  auto match = hopcroft_karp(static_cast<int>(ls.size()), static_cast<int>(rs.size()), adj);
  Matching m;
  for (std::size_t i = 0; i < ls.size(); ++i)
    if (match[i] != -1) m.emplace_back(ls[i], rs[match[i]]);
  std::sort(m.begin(), m.end());
  return m;
}

Matching max_matching_cut(const Graph& g, const VertexSet& a) {
  if (!a.is_subset_of(g.vertices())) throw DomainError("cut side not a subset of V(G)");
  return bipartite_max_matching(g, a, g.vertices() - a);
}

VertexSet koenig_cover(const Graph& g, const VertexSet& a, const Matching& m) {
  if (!a.is_subset_of(g.vertices())) throw DomainError("cut side not a subset of V(G)");
  VertexSet b = g.vertices() - a;
  std::vector<Vertex> mate(VertexSet::kCapacity, -1);
  for (const Edge& e : m) {
    if (!g.has_edge(e.u, e.v) || a.contains(e.u) == a.contains(e.v)) {
      throw DomainError("matching edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                        " does not cross the cut");
    }
    if (mate[e.u] != -1 || mate[e.v] != -1) throw DomainError("edges share an endpoint");
    mate[e.u] = e.v;
    mate[e.v] = e.u;
  }
  // Alternating search from unmatched A-vertices.
  VertexSet reached;
  std::deque<Vertex> q;
  for (Vertex v : a) {
    if (mate[v] == -1) {
      reached.insert(v);
      q.push_back(v);
    }
  }
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop_front();
    for (Vertex w : g.neighbors(v) & b) {
      if (reached.contains(w)) continue;
      reached.insert(w);
      if (mate[w] == -1) throw DomainError("matching is not maximum: augmenting path found");
      if (!reached.contains(mate[w])) {
        reached.insert(mate[w]);
        q.push_back(mate[w]);
      }
    }
  }
  return ((a - reached) | (b & reached));
}

Matching general_max_matching(const Graph& g) {
  using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  std::vector<Vertex> ids = g.vertices().to_vector();
  std::vector<int> index(VertexSet::kCapacity, -1);
  for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = static_cast<int>(i);
  if (ids.empty()) return {};
  BGraph bg(ids.size());
  for (const Edge& e : g.edges()) boost::add_edge(index[e.u], index[e.v], bg);
  std::vector<boost::graph_traits<BGraph>::vertex_descriptor> mate(ids.size());
  boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);
  Matching m;
  const auto null = boost::graph_traits<BGraph>::null_vertex();
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (mate[i] != null && i < mate[i]) m.emplace_back(ids[i], ids[mate[i]]);
  std::sort(m.begin(), m.end());
  return m;
}

bool is_matching(const Matching& m) {
  VertexSet used;
  for (const Edge& e : m) {
    if (used.contains(e.u) || used.contains(e.v)) return false;
    used.insert(e.u);
    used.insert(e.v);
  }
  return true;
}

}  // namespace smw
