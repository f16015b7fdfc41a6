#include "smw/split_decomposition.hpp"

#include <algorithm>

#include "smw/cut_functions.hpp"
#include "smw/errors.hpp"

namespace smw {

namespace {

void require_decomposable_input(const Graph& g) {
  if (g.order() < 4) throw DomainError("split search needs at least 4 vertices");
  if (!is_connected(g)) throw DomainError("split search needs a connected graph");
}

// Smallest V1 containing x and a with y outside, closed under the split
// forcing rules for the crossing edge xy. Empty result if y gets forced.
VertexSet closure(const Graph& g, Vertex x, Vertex y, Vertex a) {
  VertexSet v1{x, a};
  const VertexSet& nx = g.neighbors(x);
  VertexSet pending = v1;
  while (!pending.empty()) {
    Vertex v = pending.min();
    pending.erase(v);
    VertexSet forced;
    if (g.has_edge(v, y)) {
      VertexSet diff = (g.neighbors(v) - nx) | (nx - g.neighbors(v));
      diff.erase(v);
      diff.erase(x);
      forced = diff;
    } else {
      forced = g.neighbors(v);
    }
    forced -= v1;
    if (forced.contains(y)) return {};
    v1 |= forced;
    pending |= forced;
  }
  return v1;
}

Split normalise(const Graph& g, VertexSet side) {
  VertexSet other = g.vertices() - side;
  if (!side.contains(g.vertices().min())) std::swap(side, other);
  return {side, other};
}

bool better(const Split& a, const Split& b) {
  int ba = std::min(a.v1.size(), a.v2.size());
  int bb = std::min(b.v1.size(), b.v2.size());
  if (ba != bb) return ba > bb;
  return a.v1 < b.v1;
}

}  // namespace

std::optional<Split> find_split(const Graph& g) {
  require_decomposable_input(g);
  std::optional<Split> best;
  for (Vertex x : g.vertices()) {
    for (Vertex y : g.neighbors(x)) {
      for (Vertex a : g.vertices()) {
        if (a == x || a == y) continue;
        VertexSet v1 = closure(g, x, y, a);
        if (v1.empty() || g.order() - v1.size() < 2) continue;
        Split s = normalise(g, v1);
        if (!best || better(s, *best)) best = s;
      }
    }
  }
  return best;
}

std::vector<Split> all_splits_bruteforce(const Graph& g) {
  require_decomposable_input(g);
  if (g.order() > 16) throw RefusalError("exhaustive split scan limited to 16 vertices");
  std::vector<Vertex> vs = g.vertices().to_vector();
  int n = static_cast<int>(vs.size());
  std::vector<Split> out;
  // Vertex vs[0] always on side 1.
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    VertexSet side{vs[0]};
    for (int i = 1; i < n; ++i)
      if (mask >> (i - 1) & 1u) side.insert(vs[i]);
    if (is_split_cut(g, side)) out.push_back({side, g.vertices() - side});
  }
  std::sort(out.begin(), out.end(), [](const Split& a, const Split& b) { return a.v1 < b.v1; });
  return out;
}

std::optional<Split> find_split_bruteforce(const Graph& g) {
  auto all = all_splits_bruteforce(g);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::pair<Graph, Graph> decompose_once(const Graph& g, const Split& split, Vertex marker) {
  if (g.has_vertex(marker) || marker < 0 || marker >= VertexSet::kCapacity) {
    throw DomainError("marker id " + std::to_string(marker) + " is not fresh");
  }
  if ((split.v1 | split.v2) != g.vertices() || split.v1.intersects(split.v2) ||
      !is_split_cut(g, split.v1)) {
    throw DomainError("not a split: " + split.v1.to_string() + " | " + split.v2.to_string());
  }
  auto half = [&](const VertexSet& side, const VertexSet& far) {
    Graph sub = induced_subgraph(g, side);
    std::vector<Edge> es = sub.edges();
    for (Vertex v : neighborhood(g, far)) es.emplace_back(v, marker);
    VertexSet vs = side;
    vs.insert(marker);
    return Graph(vs, std::move(es));
  };
  return {half(split.v1, split.v2), half(split.v2, split.v1)};
}

Graph recompose(const Graph& g1, const Graph& g2, Vertex marker) {
  if (!g1.has_vertex(marker) || !g2.has_vertex(marker)) {
    throw DomainError("marker " + std::to_string(marker) + " missing from a part");
  }
  Graph a = delete_vertex(g1, marker);
  Graph b = delete_vertex(g2, marker);
  if (a.vertices().intersects(b.vertices())) throw DomainError("parts share non-marker vertices");
  std::vector<Edge> es = a.edges();
  es.insert(es.end(), b.edges().begin(), b.edges().end());
  for (Vertex u : g1.neighbors(marker))
    for (Vertex w : g2.neighbors(marker)) es.emplace_back(u, w);
  return Graph(a.vertices() | b.vertices(), std::move(es));
}

SplitDecomposition::SplitDecomposition(Graph original, std::vector<Graph> parts)
    : original_(std::move(original)), primes_(std::move(parts)), adj_(primes_.size()) {
  std::map<Vertex, std::vector<int>> holders;
  for (int i = 0; i < prime_count(); ++i)
    for (Vertex v : primes_[i].vertices() - original_.vertices()) holders[v].push_back(i);
  for (const auto& [m, hs] : holders) {
    if (hs.size() != 2) {
      throw InvariantError("marker " + std::to_string(m) + " occurs in " +
                           std::to_string(hs.size()) + " parts");
    }
    markers_[m] = {hs[0], hs[1]};
    tree_edges_.push_back({hs[0], hs[1], m});
    adj_[hs[0]].emplace_back(hs[1], m);
    adj_[hs[1]].emplace_back(hs[0], m);
  }
  if (static_cast<int>(markers_.size()) != prime_count() - 1) {
    throw InvariantError("marker count must be one less than the part count");
  }
}

int SplitDecomposition::other_side(Vertex marker, int i) const {
  auto it = markers_.find(marker);
  if (it == markers_.end()) throw DomainError("not a marker: " + std::to_string(marker));
  return it->second.first == i ? it->second.second : it->second.first;
}

VertexSet SplitDecomposition::originals_behind(int from, int start) const {
  VertexSet out;
  std::vector<std::pair<int, int>> stack{{start, from}};
  while (!stack.empty()) {
    auto [node, parent] = stack.back();
    stack.pop_back();
    out |= primes_[node].vertices() & original_.vertices();
    for (auto [next, m] : adj_[node])
      if (next != parent) stack.emplace_back(next, node);
  }
  return out;
}

VertexSet SplitDecomposition::tot(Vertex v, int i) const {
  if (i < 0 || i >= prime_count() || !primes_[i].has_vertex(v)) {
    throw DomainError("vertex " + std::to_string(v) + " not in part " + std::to_string(i));
  }
  if (original_.has_vertex(v)) return VertexSet{v};
  return originals_behind(i, other_side(v, i));
}

VertexSet SplitDecomposition::tot(const VertexSet& s, int i) const {
  VertexSet out;
  for (Vertex v : s) out |= tot(v, i);
  return out;
}

VertexSet SplitDecomposition::act(Vertex v, int i) const {
  VertexSet t = tot(v, i);
  return neighborhood(original_, original_.vertices() - t);
}

VertexSet SplitDecomposition::tot_inverse(const VertexSet& s, int i) const {
  VertexSet out;
  for (Vertex v : primes_.at(i).vertices())
    if (tot(v, i).intersects(s)) out.insert(v);
  return out;
}

Graph SplitDecomposition::recompose_all() const {
  std::vector<Graph> parts = primes_;
  std::vector<int> owner(parts.size());
  for (std::size_t i = 0; i < owner.size(); ++i) owner[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (owner[x] != x) x = owner[x] = owner[owner[x]];
    return x;
  };
  for (const auto& [m, ij] : markers_) {
    int a = find(ij.first), b = find(ij.second);
    parts[a] = recompose(parts[a], parts[b], m);
    owner[b] = a;
  }
  return parts[find(0)];
}

SplitDecomposition split_decompose(const Graph& g, Vertex first_marker) {
  if (!is_connected(g)) throw DomainError("split decomposition needs a connected graph");
  std::vector<Graph> parts{g};
  Vertex next_marker = first_marker < 0 ? g.vertices().max() + 1 : first_marker;
  if (next_marker <= g.vertices().max() && g.vertices().max() >= 0) {
    for (Vertex v = next_marker; v <= g.vertices().max(); ++v)
      if (g.has_vertex(v)) throw DomainError("first marker id collides with a vertex");
  }
  for (std::size_t i = 0; i < parts.size();) {
    std::optional<Split> split;
    if (parts[i].order() >= 4) split = find_split(parts[i]);
    if (!split) {
      ++i;
      continue;
    }
    if (next_marker >= VertexSet::kCapacity) throw DomainError("out of marker ids");
    auto [g1, g2] = decompose_once(parts[i], *split, next_marker++);
    parts[i] = std::move(g1);
    parts.insert(parts.begin() + static_cast<std::ptrdiff_t>(i) + 1, std::move(g2));
  }
  return SplitDecomposition(g, std::move(parts));
}

}  // namespace smw
