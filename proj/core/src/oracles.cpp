#include "smw/oracles.hpp"

#include <bit>
#include <cstdint>

#include "smw/errors.hpp"

namespace smw {

namespace {

void require_order(const Graph& g, int limit) {
  if (g.order() > limit) {
    throw RefusalError("oracle limited to " + std::to_string(limit) + " vertices, got " +
                       std::to_string(g.order()));
  }
}

/// Adjacency bitmasks over the ascending vertex list.
std::vector<std::uint32_t> local_adjacency(const Graph& g) {
  std::vector<Vertex> vs = g.vertices().to_vector();
  std::vector<int> index(VertexSet::kCapacity, -1);
  for (std::size_t i = 0; i < vs.size(); ++i) index[vs[i]] = static_cast<int>(i);
  std::vector<std::uint32_t> adj(vs.size(), 0);
  for (const Edge& e : g.edges()) {
    adj[index[e.u]] |= 1u << index[e.v];
    adj[index[e.v]] |= 1u << index[e.u];
  }
  return adj;
}

}  // namespace

const char* to_string(Problem p) {
  switch (p) {
    case Problem::maxcut: return "maxcut";
    case Problem::hc: return "hc";
    case Problem::chromatic: return "chromatic";
    case Problem::eds: return "eds";
  }
  return "?";
}

Problem parse_problem(const std::string& name) {
  for (Problem p : {Problem::maxcut, Problem::hc, Problem::chromatic, Problem::eds})
    if (name == to_string(p)) return p;
  throw DomainError("unknown problem '" + name + "'");
}

int oracle_maxcut(const Graph& g) {
  require_order(g, kOracleLimit);
  auto adj = local_adjacency(g);
  int n = static_cast<int>(adj.size());
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    int cut = 0;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1u) cut += std::popcount(adj[v] & ~s);
    best = std::max(best, cut);
  }
  return best;
}

bool oracle_hamiltonian(const Graph& g) {
  require_order(g, kOracleLimit);
  auto adj = local_adjacency(g);
  int n = static_cast<int>(adj.size());
  if (n < 3) return false;
  // reach[mask] bit v: a path from vertex 0 through exactly mask ends at v.
  std::vector<std::uint32_t> reach(1u << n, 0);
  reach[1] = 1;
  for (std::uint32_t mask = 1; mask < (1u << n); mask += 2) {
    for (int v = 0; v < n; ++v) {
      if (!(reach[mask] >> v & 1u)) continue;
      std::uint32_t next = adj[v] & ~mask;
      for (int w = 0; w < n; ++w)
        if (next >> w & 1u) reach[mask | 1u << w] |= 1u << w;
    }
  }
  return (reach[(1u << n) - 1] & adj[0]) != 0;
}

int oracle_chromatic(const Graph& g) {
  require_order(g, kOracleLimit);
  auto adj = local_adjacency(g);
  int n = static_cast<int>(adj.size());
  const std::uint32_t full = (1u << n) - 1;
  std::vector<bool> independent(1u << n, true);
  for (std::uint32_t s = 1; s <= full; ++s) {
    int v = std::countr_zero(s);
    std::uint32_t rest = s & (s - 1);
    independent[s] = independent[rest] && (adj[v] & rest) == 0;
  }
  std::vector<int> colors(1u << n, n + 1);
  colors[0] = 0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint32_t low = mask & (~mask + 1);
    std::uint32_t rest = mask ^ low;
    // Colour classes containing the lowest vertex of mask.
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      if (independent[sub | low]) colors[mask] = std::min(colors[mask], colors[mask ^ (sub | low)] + 1);
      if (sub == 0) break;
    }
  }
  return colors[full];
}

int oracle_eds(const Graph& g) {
  require_order(g, kEdsOracleLimit);
  auto adj = local_adjacency(g);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t u = 0; u < adj.size(); ++u)
    for (std::size_t v = u + 1; v < adj.size(); ++v)
      if (adj[u] >> v & 1u) edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  const int m = static_cast<int>(edges.size());
  int best = m;
  for (std::uint32_t s = 0; s < (1u << m); ++s) {
    int size = std::popcount(s);
    if (size >= best) continue;
    std::uint32_t touched = 0;
    for (int i = 0; i < m; ++i)
      if (s >> i & 1u) touched |= 1u << edges[i].first | 1u << edges[i].second;
    bool dominating = true;
    for (const auto& [u, v] : edges)
      if (!(touched >> u & 1u) && !(touched >> v & 1u)) dominating = false;
    if (dominating) best = size;
  }
  return best;
}

int brute_force_solve(Problem p, const Graph& g) {
  switch (p) {
    case Problem::maxcut: return oracle_maxcut(g);
    case Problem::hc: return oracle_hamiltonian(g) ? 1 : 0;
    case Problem::chromatic: return oracle_chromatic(g);
    case Problem::eds: return oracle_eds(g);
  }
  throw DomainError("unknown problem");
}

}  // namespace smw
