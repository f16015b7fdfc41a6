#include "smw/graph_enumeration.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <unordered_set>

#include "smw/errors.hpp"

namespace smw {

namespace {

using Masks = std::vector<std::uint32_t>;

/// Colour refinement started from degrees; colours are ranks of sorted
/// signatures and therefore invariant under relabelling.
std::vector<int> refine(const Masks& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) color[v] = std::popcount(adj[v]);
  for (int round = 0; round < n; ++round) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> nb;
      for (int w = 0; w < n; ++w)
        if (adj[v] >> w & 1u) nb.push_back(color[w]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::vector<std::vector<int>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v)
      next[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) -
                                 distinct.begin());
    std::vector<int> ranked = color;
    std::sort(ranked.begin(), ranked.end());
    int classes_before = static_cast<int>(std::unique(ranked.begin(), ranked.end()) - ranked.begin());
    color = next;
    if (static_cast<int>(distinct.size()) == classes_before) break;
  }
  return color;
}

std::uint64_t code_for(const Masks& adj, const std::vector<int>& order) {
  const int n = static_cast<int>(order.size());
  std::uint64_t code = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) code = code << 1 | (adj[order[i]] >> order[j] & 1u);
  return code;
}

std::uint64_t canonical_masks(const Masks& adj) {
  const int n = static_cast<int>(adj.size());
  if (n <= 1) return 0;
  std::vector<int> color = refine(adj);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return color[a] < color[b]; });
  std::vector<std::pair<int, int>> cells;  // [begin, end)
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && color[order[j]] == color[order[i]]) ++j;
    cells.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = 0;
  bool first = true;
  // Odometer over the permutations of every cell.
  for (auto& [b, e] : cells) std::sort(order.begin() + b, order.begin() + e);
  while (true) {
    std::uint64_t c = code_for(adj, order);
    if (first || c > best) best = c;
    first = false;
    std::size_t k = 0;
    for (; k < cells.size(); ++k) {
      auto [b, e] = cells[k];
      if (std::next_permutation(order.begin() + b, order.begin() + e)) break;
    }
    if (k == cells.size()) break;
  }
  return best;
}

Masks masks_of(const Graph& g) {
  std::vector<Vertex> vs = g.vertices().to_vector();
  std::vector<int> index(VertexSet::kCapacity, -1);
  for (std::size_t i = 0; i < vs.size(); ++i) index[vs[i]] = static_cast<int>(i);
  Masks adj(vs.size(), 0);
  for (const Edge& e : g.edges()) {
    adj[index[e.u]] |= 1u << index[e.v];
    adj[index[e.v]] |= 1u << index[e.u];
  }
  return adj;
}

Graph graph_of(const Masks& adj) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  const int n = static_cast<int>(adj.size());
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (adj[u] >> v & 1u) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

/// Representative adjacency masks of connected graphs on n vertices,
/// keyed by canonical code.
std::map<std::uint64_t, Masks> generate(int n) {
  std::map<std::uint64_t, Masks> out;
  if (n == 1) {
    out[0] = Masks{0};
    return out;
  }
  // Every connected graph has a vertex whose removal leaves it connected.
  for (const auto& [code, base] : generate(n - 1)) {
    for (std::uint32_t nb = 1; nb < (1u << (n - 1)); ++nb) {
      Masks adj = base;
      adj.push_back(nb);
      for (int v = 0; v < n - 1; ++v)
        if (nb >> v & 1u) adj[v] |= 1u << (n - 1);
      std::uint64_t c = canonical_masks(adj);
      out.try_emplace(c, adj);
    }
  }
  return out;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  if (g.order() > 11) throw RefusalError("canonical codes limited to 11 vertices");
  return canonical_masks(masks_of(g)) << 4 | static_cast<std::uint64_t>(g.order());
}

std::vector<Graph> connected_graphs(int n) {
  if (n < 1) throw DomainError("order must be positive");
  if (n > kEnumerationLimit) {
    throw RefusalError("graph enumeration limited to " + std::to_string(kEnumerationLimit) +
                       " vertices");
  }
  std::vector<std::pair<std::pair<int, std::uint64_t>, Graph>> keyed;
  for (const auto& [code, adj] : generate(n)) {
    Graph g = graph_of(adj);
    keyed.push_back({{g.size(), code}, std::move(g)});
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  out.reserve(keyed.size());
  for (auto& [key, g] : keyed) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> connected_graphs_up_to(int n_max) {
  std::vector<Graph> out;
  for (int n = 1; n <= n_max; ++n) {
    std::vector<Graph> part = connected_graphs(n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace smw
