#include "smw/families.hpp"

#include <algorithm>
#include <map>

#include "smw/cut_functions.hpp"
#include "smw/errors.hpp"

namespace smw {

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

/// Rooted chain over existing nodes; returns the top node.
int chain(BranchDecomposition& bd, const std::vector<int>& items) {
  int top = items.front();
  for (std::size_t i = 1; i < items.size(); ++i) {
    int p = bd.add_node();
    bd.add_edge(p, top);
    bd.add_edge(p, items[i]);
    top = p;
  }
  return top;
}

void drop_degree_two(BranchDecomposition& bd, int node) {
  if (!bd.is_leaf(node) && bd.degree(node) == 2) bd.suppress(node);
}

}  // namespace

const char* to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::tree: return "tree";
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::clique: return "clique";
    case FamilyKind::series_parallel: return "series-parallel";
    case FamilyKind::distance_hereditary: return "distance-hereditary";
    case FamilyKind::twin_cover: return "twin-cover";
    case FamilyKind::glued: return "glued";
  }
  return "?";
}

FamilyKind parse_family(const std::string& name) {
  for (FamilyKind k : {FamilyKind::tree, FamilyKind::cycle, FamilyKind::clique,
                       FamilyKind::series_parallel, FamilyKind::distance_hereditary,
                       FamilyKind::twin_cover, FamilyKind::glued})
    if (name == to_string(k)) return k;
  throw DomainError("unknown family '" + name + "'");
}

Graph random_distance_hereditary(int n, Rng& rng, std::vector<DhStep>* steps) {
  if (n < 1) throw DomainError("distance-hereditary graphs need at least one vertex");
  std::vector<VertexSet> adj(n);
  std::vector<DhStep> seq;
  for (Vertex x = 1; x < n; ++x) {
    DhStep s;
    s.base = uniform(rng, 0, x - 1);
    s.added = x;
    s.op = x == 1 ? DhStep::Op::pendant : static_cast<DhStep::Op>(uniform(rng, 0, 2));
    if (s.op != DhStep::Op::pendant) {
      for (Vertex w : adj[s.base]) {
        adj[x].insert(w);
        adj[w].insert(x);
      }
    }
    if (s.op != DhStep::Op::false_twin) {
      adj[x].insert(s.base);
      adj[s.base].insert(x);
    }
    seq.push_back(s);
  }
  EdgeList edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : adj[u])
      if (u < v) edges.emplace_back(u, v);
  if (steps) *steps = seq;
  return Graph::from_edges(n, edges);
}

BranchDecomposition dh_decomposition(Vertex first, const std::vector<DhStep>& steps) {
  BranchDecomposition bd = BranchDecomposition::single_leaf(first);
  for (const DhStep& s : steps) {
    int p = bd.leaf_of(s.base);
    int x = bd.add_node(s.added);
    if (bd.degree(p) == 0) {
      bd.add_edge(p, x);
      continue;
    }
    int q = bd.neighbors(p).front();
    int i = bd.subdivide(p, q);
    bd.add_edge(i, x);
  }
  return bd;
}

BranchDecomposition grouped_decomposition(const std::vector<std::vector<Vertex>>& groups) {
  BranchDecomposition bd;
  std::vector<int> tops;
  for (const auto& group : groups) {
    if (group.empty()) continue;
    std::vector<int> leaves;
    for (Vertex v : group) leaves.push_back(bd.add_node(v));
    tops.push_back(chain(bd, leaves));
  }
  if (tops.empty()) throw DomainError("no vertices to decompose");
  int top = chain(bd, tops);
  drop_degree_two(bd, top);
  return bd.compacted();
}

Graph random_tree(int n, Rng& rng) {
  EdgeList edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(uniform(rng, 0, v - 1), v);
  return Graph::from_edges(n, edges);
}

Graph random_connected_graph(int n, double p, Rng& rng) {
  Graph tree = random_tree(n, rng);
  EdgeList edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (tree.has_edge(u, v) || coin(rng, p)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph random_k_tree(int n, int k, Rng& rng, std::vector<VertexSet>* bags) {
  if (k < 1 || n <= k) throw DomainError("k-trees need 1 <= k < n");
  std::map<std::pair<Vertex, Vertex>, bool> present;
  EdgeList edges;
  auto add = [&](Vertex u, Vertex v) {
    if (present.emplace(std::minmax(u, v), true).second) edges.emplace_back(u, v);
  };
  VertexSet base = VertexSet::prefix(k + 1);
  for (Vertex u = 0; u <= k; ++u)
    for (Vertex v = u + 1; v <= k; ++v) add(u, v);
  std::vector<VertexSet> cliques;
  for (Vertex u = 0; u <= k; ++u) {
    VertexSet c = base;
    c.erase(u);
    cliques.push_back(c);
  }
  std::vector<VertexSet> all_bags{base};
  for (Vertex v = k + 1; v < n; ++v) {
    VertexSet c = cliques[uniform(rng, 0, static_cast<int>(cliques.size()) - 1)];
    for (Vertex u : c) add(u, v);
    VertexSet bag = c;
    bag.insert(v);
    all_bags.push_back(bag);
    for (Vertex u : c) {
      VertexSet next = bag;
      next.erase(u);
      cliques.push_back(next);
    }
  }
  if (bags) *bags = all_bags;
  return Graph::from_edges(n, edges);
}

Graph random_series_parallel(int n, Rng& rng) {
  if (n < 3) throw DomainError("series-parallel samples need at least 3 vertices");
  std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}, {1, 2}, {0, 2}};
  for (Vertex v = 3; v < n; ++v) {
    std::size_t pick = uniform(rng, 0, static_cast<int>(edges.size()) - 1);
    auto [a, b] = edges[pick];
    switch (uniform(rng, 0, 2)) {
      case 0:  // series: subdivide a-b
        edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(pick));
        edges.emplace_back(a, v);
        edges.emplace_back(v, b);
        break;
      case 1:  // parallel path a-v-b
        edges.emplace_back(a, v);
        edges.emplace_back(v, b);
        break;
      default:
        edges.emplace_back(a, v);
    }
  }
  return Graph::from_edges(n, edges);
}

FamilyInstance generate_family(const FamilySpec& spec, std::uint64_t seed) {
  Rng rng(seed);
  FamilyInstance inst;
  inst.spec = spec;
  const int n = spec.n;
  const int k = spec.k;
  switch (spec.kind) {
    case FamilyKind::tree:
      if (n < 2) throw DomainError("tree needs n >= 2");
      inst.graph = random_tree(n, rng);
      inst.treewidth = 1;
      inst.bound = 2;
      break;
    case FamilyKind::cycle:
      if (n < 3) throw DomainError("cycle needs n >= 3");
      {
        EdgeList edges;
        for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
        inst.graph = Graph::from_edges(n, edges);
      }
      inst.treewidth = 2;
      inst.bound = 3;
      break;
    case FamilyKind::clique:
      if (n < 1) throw DomainError("clique needs n >= 1");
      {
        EdgeList edges;
        for (Vertex u = 0; u < n; ++u)
          for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
        inst.graph = Graph::from_edges(n, edges);
      }
      inst.treewidth = n - 1;
      inst.bound = n;
      break;
    case FamilyKind::series_parallel:
      inst.graph = random_series_parallel(n, rng);
      inst.treewidth = 2;
      inst.bound = 3;
      break;
    case FamilyKind::distance_hereditary:
      if (n < 2) throw DomainError("distance-hereditary family needs n >= 2");
      inst.graph = random_distance_hereditary(n, rng, &inst.dh_steps);
      inst.certificate = dh_decomposition(0, inst.dh_steps);
      inst.bound = 1;
      break;
    case FamilyKind::twin_cover: {
      if (k < 1 || n <= k) throw DomainError("twin-cover needs 1 <= k < n");
      EdgeList edges;
      Graph s_part = random_connected_graph(k, 0.5, rng);
      for (const Edge& e : s_part.edges()) edges.emplace_back(e.u, e.v);
      std::vector<std::vector<Vertex>> groups;
      Vertex next = k;
      while (next < n) {
        int size = uniform(rng, 1, std::min(3, n - next));
        std::vector<Vertex> clique;
        for (int i = 0; i < size; ++i) clique.push_back(next++);
        for (std::size_t i = 0; i < clique.size(); ++i)
          for (std::size_t j = i + 1; j < clique.size(); ++j) edges.emplace_back(clique[i], clique[j]);
        VertexSet attach;
        while (attach.empty())
          for (Vertex s = 0; s < k; ++s)
            if (coin(rng, 0.5)) attach.insert(s);
        for (Vertex c : clique)
          for (Vertex s : attach) edges.emplace_back(c, s);
        groups.push_back(clique);
      }
      std::vector<Vertex> cover;
      for (Vertex s = 0; s < k; ++s) cover.push_back(s);
      groups.push_back(cover);
      inst.graph = Graph::from_edges(n, edges);
      inst.twin_cover = VertexSet::prefix(k);
      inst.certificate = grouped_decomposition(groups);
      inst.bound = k;
      break;
    }
    case FamilyKind::glued: {
      if (k < 1 || n < k + 5) throw DomainError("glued(k) needs k >= 1 and n >= k + 5");
      const int n2 = std::max(k + 1, std::min(n / 2, n - 4));
      const int n1 = n - n2;
      // The distance-hereditary part needs a split side of size 2..k+1.
      for (int attempt = 0;; ++attempt) {
        if (attempt > 1000) throw InvariantError("no suitable split side found");
        std::vector<DhStep> steps;
        Graph g1 = random_distance_hereditary(n1, rng, &steps);
        BranchDecomposition bd1 = dh_decomposition(0, steps);
        std::vector<VertexSet> sides;
        for (const EdgeCut& c : edge_cuts(bd1))
          if (c.side.size() >= 2 && c.side.size() <= k + 1 && n1 - c.side.size() >= 2 &&
              is_split_cut(g1, c.side))
            sides.push_back(c.side);
        if (sides.empty()) continue;
        VertexSet x = sides[uniform(rng, 0, static_cast<int>(sides.size()) - 1)];
        std::vector<VertexSet> bags;
        Graph g2 = random_k_tree(n2, k, rng, &bags);
        VertexSet y0 = bags[uniform(rng, 0, static_cast<int>(bags.size()) - 1)];
        EdgeList edges;
        for (const Edge& e : g1.edges()) edges.emplace_back(e.u, e.v);
        for (const Edge& e : g2.edges()) edges.emplace_back(e.u + n1, e.v + n1);
        VertexSet y;
        for (Vertex v : y0) y.insert(v + n1);
        std::vector<std::pair<Vertex, Vertex>> glue;
        for (Vertex a : x)
          for (Vertex b : y)
            if (coin(rng, 0.5)) glue.emplace_back(a, b);
        if (glue.empty()) glue.emplace_back(x.min(), y.min());
        edges.insert(edges.end(), glue.begin(), glue.end());
        inst.graph = Graph::from_edges(n, edges);
        inst.dh_steps = steps;
        inst.glued_x = x;
        inst.glued_y = y;
        inst.treewidth.reset();
        inst.bound = k + 1;
        break;
      }
      break;
    }
  }
  return inst;
}

}  // namespace smw
