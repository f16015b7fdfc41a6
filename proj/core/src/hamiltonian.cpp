#include "smw/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>

namespace smw {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

PathSystem merge_systems(const PathSystem& x, const PathSystem& y) {
  PathSystem out;
  out.vertices = x.vertices | y.vertices;
  out.edges.reserve(x.edges.size() + y.edges.size());
  std::merge(x.edges.begin(), x.edges.end(), y.edges.begin(), y.edges.end(),
             std::back_inserter(out.edges));
  return out;
}

void add_edges(PathSystem& ps, const std::vector<Edge>& extra) {
  ps.edges.insert(ps.edges.end(), extra.begin(), extra.end());
  std::sort(ps.edges.begin(), ps.edges.end());
}

std::vector<int> degrees(const PathSystem& ps) {
  std::vector<int> deg(VertexSet::kCapacity, 0);
  for (const Edge& e : ps.edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

/// Calls visit for every subset of `candidates` respecting the per-vertex budgets.
void for_each_link_set(const std::vector<Edge>& candidates, std::vector<int>& budget,
                       const std::function<void(const std::vector<Edge>&)>& visit) {
  std::vector<Edge> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == candidates.size()) {
      visit(chosen);
      return;
    }
    rec(i + 1);
    const Edge& e = candidates[i];
    if (budget[e.u] > 0 && budget[e.v] > 0) {
      --budget[e.u];
      --budget[e.v];
      chosen.push_back(e);
      rec(i + 1);
      chosen.pop_back();
      ++budget[e.u];
      ++budget[e.v];
    }
  };
  rec(0);
}

std::vector<Vertex> endpoint_list(const std::vector<PathEnds>& paths) {
  VertexSet s;
  for (const PathEnds& p : paths) {
    s.insert(p.first);
    s.insert(p.second);
  }
  return s.to_vector();
}

std::vector<Edge> links_between(const Graph& g, const std::vector<Vertex>& left,
                                const std::vector<Vertex>& right) {
  std::vector<Edge> out;
  for (Vertex l : left)
    for (Vertex r : right)
      if (g.has_edge(l, r)) out.emplace_back(l, r);
  std::sort(out.begin(), out.end());
  return out;
}

bool allowed_cycle(const Graph& g, const PathSystem& ps) { return ps.vertices == g.vertices(); }

/// Joins path chains (and optionally closes the single chain into a cycle).
std::optional<PathSystem> connect_chains(const Graph& g, const PathSystem& base,
                                         const std::vector<std::vector<PathEnds>>& chains,
                                         bool close) {
  std::vector<Edge> extra;
  auto link = [&](Vertex a, Vertex b) {
    if (a == b || !g.has_edge(a, b)) return false;
    Edge e(a, b);
    if (std::find(extra.begin(), extra.end(), e) != extra.end()) return false;
    extra.push_back(e);
    return true;
  };
  for (const auto& chain : chains) {
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      if (!link(chain[i].second, chain[i + 1].first)) return std::nullopt;
  }
  if (close && !link(chains.front().back().second, chains.front().front().first)) {
    return std::nullopt;
  }
  PathSystem out = base;
  add_edges(out, extra);
  return out;
}

}  // namespace

std::optional<PathStructure> analyse_path_system(const PathSystem& ps) {
  std::vector<int> deg = degrees(ps);
  std::vector<int> parent(VertexSet::kCapacity);
  std::iota(parent.begin(), parent.end(), 0);
  for (const Edge& e : ps.edges) {
    if (!ps.vertices.contains(e.u) || !ps.vertices.contains(e.v)) return std::nullopt;
    if (deg[e.u] > 2 || deg[e.v] > 2) return std::nullopt;
    parent[find_root(parent, e.u)] = find_root(parent, e.v);
  }
  std::vector<int> size(VertexSet::kCapacity, 0);
  std::vector<int> edge_count(VertexSet::kCapacity, 0);
  VertexSet roots;
  for (Vertex v : ps.vertices) {
    int r = find_root(parent, v);
    ++size[r];
    roots.insert(r);
  }
  for (const Edge& e : ps.edges) ++edge_count[find_root(parent, e.u)];
  PathStructure out;
  for (Vertex r : roots) {
    if (edge_count[r] == size[r]) {
      // A cycle must be the whole system.
      if (roots.size() != 1) return std::nullopt;
      out.cycle = true;
      return out;
    }
  }
  std::vector<std::vector<Vertex>> ends(VertexSet::kCapacity);
  for (Vertex v : ps.vertices)
    if (deg[v] <= 1) ends[find_root(parent, v)].push_back(v);
  for (Vertex r : roots) {
    const auto& e = ends[r];
    out.paths.push_back(e.size() == 1 ? PathEnds{e[0], e[0]} : PathEnds{e[0], e[1]});
  }
  std::sort(out.paths.begin(), out.paths.end(), [](const PathEnds& x, const PathEnds& y) {
    return std::pair(x.first, x.second) < std::pair(y.first, y.second);
  });
  return out;
}

std::vector<PathClass> path_classes(const Graph& g, const VertexSet& a, const PathSystem& ps) {
  std::vector<PathClass> out;
  auto st = analyse_path_system(ps);
  if (!st || st->cycle) return out;
  for (const PathEnds& p : st->paths) {
    VertexSet n1 = g.neighbors(p.first) - a;
    VertexSet n2 = g.neighbors(p.second) - a;
    if (n2 < n1) std::swap(n1, n2);
    out.emplace_back(n1, n2);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PathSystem> HamiltonianProblem::initialize_leaf(const NodeContext&, Vertex v) const {
  PathSystem ps;
  ps.vertices.insert(v);
  return {ps};
}

std::vector<PathSystem> HamiltonianProblem::join(const NodeContext& ctx,
                                                 const std::vector<PathSystem>& s1,
                                                 const std::vector<PathSystem>& s2) const {
  const Graph& g = ctx.g();
  std::vector<PathSystem> raw;
  const bool split1 = ctx.cut1.is_split;
  const bool split2 = ctx.cut2.is_split;
  const bool crossing = !edges_between(g, ctx.a1, ctx.a2).empty();
  for (const PathSystem& g1 : s1) {
    auto st1 = analyse_path_system(g1);
    if (!st1 || st1->cycle) continue;
    for (const PathSystem& g2 : s2) {
      auto st2 = analyse_path_system(g2);
      if (!st2 || st2->cycle) continue;
      PathSystem base = merge_systems(g1, g2);
      raw.push_back(base);
      const auto& p1 = st1->paths;
      const auto& p2 = st2->paths;
      if (static_cast<int>(p1.size()) > ctx.cut1.mm_value ||
          static_cast<int>(p2.size()) > ctx.cut2.mm_value) {
        continue;
      }
      if (split1 && split2) {
        if (!crossing) continue;
        const int n1 = static_cast<int>(p1.size());
        const int n2 = static_cast<int>(p2.size());
        // (pi1, pi2, pi3): resulting paths with both ends in A1, both in A2, or one in each.
        for (int pi3 = 0; pi3 <= std::min(n1, n2); ++pi3) {
          for (int pi1 = 0; pi1 + pi3 <= n1; ++pi1) {
            int pi2 = pi1 - (n1 - n2);
            if (pi2 < 0 || pi2 + pi3 > n2) continue;
            if (pi1 == n1 && pi2 == n2) continue;  // plain union
            int extra = n1 - pi1 - pi3;
            std::size_t i1 = 0;
            std::size_t i2 = 0;
            std::vector<std::vector<PathEnds>> chains;
            for (int k = 0; k < pi1; ++k) chains.push_back({p1[i1++]});
            for (int k = 0; k < pi2; ++k) chains.push_back({p2[i2++]});
            for (int k = 0; k < pi3; ++k) chains.push_back({p1[i1++], p2[i2++]});
            bool close = false;
            if (chains.empty()) {
              if (!allowed_cycle(g, base) || extra < 1) continue;
              // One alternating cycle through every path.
              std::vector<PathEnds> ring;
              for (int k = 0; k < extra; ++k) {
                ring.push_back(p1[i1++]);
                ring.push_back(p2[i2++]);
              }
              chains.push_back(ring);
              close = true;
            } else {
              std::vector<PathEnds>& first = chains.front();
              bool starts_in_a1 = pi1 > 0 || (pi2 == 0);
              std::vector<PathEnds> inserted;
              for (int k = 0; k < extra; ++k) {
                if (starts_in_a1) {
                  inserted.push_back(p2[i2++]);
                  inserted.push_back(p1[i1++]);
                } else {
                  inserted.push_back(p1[i1++]);
                  inserted.push_back(p2[i2++]);
                }
              }
              first.insert(first.begin() + 1, inserted.begin(), inserted.end());
            }
            if (auto ps = connect_chains(g, base, chains, close)) raw.push_back(*ps);
          }
        }
        continue;
      }
      std::vector<Vertex> left;
      std::vector<Vertex> right;
      if (!split1 && !split2) {
        left = endpoint_list(p1);
        right = endpoint_list(p2);
      } else {
        const auto& ps_split = split1 ? p1 : p2;
        const auto& ps_rest = split1 ? p2 : p1;
        std::size_t keep = std::min(ps_split.size(), 2 * ps_rest.size());
        std::vector<PathEnds> kept(ps_split.begin(),
                                   ps_split.begin() + static_cast<std::ptrdiff_t>(keep));
        left = endpoint_list(kept);
        right = endpoint_list(ps_rest);
      }
      std::vector<Edge> candidates = links_between(g, left, right);
      std::vector<int> budget(VertexSet::kCapacity, 0);
      std::vector<int> deg = degrees(base);
      for (Vertex v : base.vertices) budget[v] = 2 - deg[v];
      for_each_link_set(candidates, budget, [&](const std::vector<Edge>& links) {
        if (links.empty()) return;
        PathSystem ps = base;
        add_edges(ps, links);
        raw.push_back(std::move(ps));
      });
    }
  }
  // Filters and path-equivalence deduplication.
  std::map<std::pair<bool, std::vector<PathClass>>, bool> seen;
  std::vector<PathSystem> out;
  for (PathSystem& ps : raw) {
    auto st = analyse_path_system(ps);
    if (!st) continue;
    std::vector<PathClass> classes;
    if (st->cycle) {
      if (!allowed_cycle(g, ps)) continue;
    } else {
      if (static_cast<int>(st->paths.size()) > ctx.cut.mm_value) continue;
      classes = path_classes(g, ctx.a, ps);
      bool isolated = std::any_of(classes.begin(), classes.end(), [](const PathClass& c) {
        return c.first.empty() || c.second.empty();
      });
      if (isolated) continue;
    }
    auto key = std::make_pair(st->cycle, std::move(classes));
    if (seen.emplace(std::move(key), true).second) out.push_back(std::move(ps));
  }
  double k = ctx.cut.sm_value;
  enforce_ceiling(ctx, out.size(), ctx.n() + std::pow(4.0, k * k), "join_hc");
  return out;
}

bool HamiltonianProblem::verify(const Graph& g, const PathSystem& c) const {
  if (c.vertices != g.vertices() || g.order() < 3) return false;
  for (const Edge& e : c.edges)
    if (!g.has_edge(e.u, e.v)) return false;
  auto st = analyse_path_system(c);
  return st && st->cycle && static_cast<int>(c.edges.size()) == g.order();
}

std::vector<PathSystem> HamiltonianProblem::enumerate(const Graph& g, const VertexSet& x) const {
  Graph sub = induced_subgraph(g, x);
  std::vector<Edge> candidates = sub.edges();
  std::vector<int> budget(VertexSet::kCapacity, 0);
  for (Vertex v : x) budget[v] = 2;
  std::vector<PathSystem> out;
  for_each_link_set(candidates, budget, [&](const std::vector<Edge>& chosen) {
    PathSystem ps{x, chosen};
    std::sort(ps.edges.begin(), ps.edges.end());
    auto st = analyse_path_system(ps);
    if (!st || (st->cycle && !allowed_cycle(g, ps))) return;
    out.push_back(std::move(ps));
  });
  return out;
}

std::vector<PathSystem> HamiltonianProblem::brute_conc(const Graph& g, const VertexSet& a1,
                                                       const PathSystem& x, const VertexSet& a2,
                                                       const PathSystem& y) const {
  (void)a1;
  (void)a2;
  PathSystem base = merge_systems(x, y);
  std::vector<int> deg = degrees(base);
  std::vector<Vertex> left;
  std::vector<Vertex> right;
  for (Vertex v : x.vertices)
    if (deg[v] < 2) left.push_back(v);
  for (Vertex v : y.vertices)
    if (deg[v] < 2) right.push_back(v);
  std::vector<int> budget(VertexSet::kCapacity, 0);
  for (Vertex v : base.vertices) budget[v] = 2 - deg[v];
  std::vector<PathSystem> out;
  for_each_link_set(links_between(g, left, right), budget, [&](const std::vector<Edge>& links) {
    PathSystem ps = base;
    add_edges(ps, links);
    auto st = analyse_path_system(ps);
    if (!st || (st->cycle && !allowed_cycle(g, ps))) return;
    out.push_back(std::move(ps));
  });
  return out;
}

std::optional<long> HamiltonianProblem::conc_score(const Graph& g, const PathSystem& x,
                                                   const PathSystem& z) const {
  for (const PathSystem& ps : brute_conc(g, x.vertices, x, z.vertices, z))
    if (verify(g, ps)) return 0;
  return std::nullopt;
}

std::vector<Vertex> cycle_order(const PathSystem& ps) {
  std::vector<Vertex> order;
  if (ps.edges.empty()) return order;
  std::vector<std::vector<Vertex>> adj(VertexSet::kCapacity);
  for (const Edge& e : ps.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  Vertex start = ps.vertices.min();
  Vertex prev = -1;
  Vertex cur = start;
  do {
    order.push_back(cur);
    Vertex next = adj[cur][0] != prev ? adj[cur][0] : adj[cur][1];
    prev = cur;
    cur = next;
  } while (cur != start && order.size() <= ps.edges.size());
  return order;
}

HamiltonianResult solve_hamiltonian(const Graph& g, const RootedBranchDecomposition& rbd) {
  HamiltonianProblem p;
  auto trace = recursive_solve(p, g, rbd);
  HamiltonianResult r;
  if (trace.witness) {
    r.hamiltonian = true;
    r.cycle = cycle_order(*trace.witness);
  }
  return r;
}

}  // namespace smw
