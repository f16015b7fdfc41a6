#include "smw/eds.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "smw/matching.hpp"

namespace smw {

namespace {

template <class Visit>
void for_each_subset(const VertexSet& s, Visit&& visit) {
  std::vector<Vertex> vs = s.to_vector();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << vs.size()); ++mask) {
    VertexSet sub;
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (mask >> i & 1u) sub.insert(vs[i]);
    visit(sub);
  }
}

std::vector<Edge> sorted_union(std::vector<Edge> a, const std::vector<Edge>& b,
                               const std::vector<Edge>& c = {}) {
  a.insert(a.end(), b.begin(), b.end());
  a.insert(a.end(), c.begin(), c.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

int edge_count(const EdsCertificate& c) { return static_cast<int>(c.edges.size()); }

std::vector<EdsCertificate> sorted_unique(std::vector<EdsCertificate> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

/// Family for child `c` on side `a_own` with cut evaluation `cut`, the
/// sibling certificate `sib` on `a_sib`, and A3 = V \ (a_own ∪ a_sib).
std::vector<VertexSet> nonsplit_family(const Graph& g, const VertexSet& a_own,
                                       const CutEvaluation& cut, const EdsCertificate& c,
                                       const VertexSet& a_sib, const EdsCertificate& sib) {
  const VertexSet& cover = cut.witness_cover;
  const VertexSet a3 = g.vertices() - a_own - a_sib;
  const VertexSet loose = c.isolated() - cover;
  const VertexSet own_free = c.vertices - cover;
  std::set<VertexSet> family;
  for_each_subset(cover & a_own & c.vertices, [&](const VertexSet& r1) {
    for_each_subset(cover & a_sib & sib.vertices, [&](const VertexSet& r2) {
      for_each_subset(cover & a3, [&](const VertexSet& r3) {
        VertexSet across = r2 | r3;
        auto span = min_crossing_span(g, loose | across, own_free, across);
        if (!span) return;
        VertexSet x = r1;
        for (const Edge& e : *span) {
          if (r2.contains(e.u)) x.insert(e.v);
          if (r2.contains(e.v)) x.insert(e.u);
        }
        family.insert(x);
      });
    });
  });
  return {family.begin(), family.end()};
}

/// Prefixes of the boundary vertices of c, isolated ones first.
std::vector<VertexSet> split_family(const Graph& g, const VertexSet& a_own,
                                    const EdsCertificate& c) {
  VertexSet bd = boundary_of(g, a_own) & c.vertices;
  VertexSet iso = c.isolated();
  std::vector<Vertex> order = (bd & iso).to_vector();
  for (Vertex v : bd - iso) order.push_back(v);
  std::vector<VertexSet> family;
  VertexSet prefix;
  family.push_back(prefix);
  for (Vertex v : order) {
    prefix.insert(v);
    family.push_back(prefix);
  }
  return family;
}

}  // namespace

VertexSet EdsCertificate::isolated() const {
  VertexSet covered;
  for (const Edge& e : edges) {
    covered.insert(e.u);
    covered.insert(e.v);
  }
  return vertices - covered;
}

std::vector<Edge> min_spanning_edge_set(const Graph& g, const VertexSet& a) {
  for (Vertex v : a)
    if (g.degree(v) == 0)
      throw DomainError("vertex " + std::to_string(v) + " has no incident edge");
  Matching m = general_max_matching(induced_subgraph(g, a));
  std::vector<Edge> out = m;
  VertexSet matched;
  for (const Edge& e : m) {
    matched.insert(e.u);
    matched.insert(e.v);
  }
  for (Vertex v : a - matched) out.emplace_back(v, g.neighbors(v).min());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<std::vector<Edge>> min_crossing_span(const Graph& g, const VertexSet& required,
                                                   const VertexSet& left,
                                                   const VertexSet& right) {
  for (Vertex v : required) {
    const VertexSet& other = left.contains(v) ? right : left;
    if (!g.neighbors(v).intersects(other)) return std::nullopt;
  }
  std::vector<Edge> out = bipartite_max_matching(g, required & left, required & right);
  VertexSet matched;
  for (const Edge& e : out) {
    matched.insert(e.u);
    matched.insert(e.v);
  }
  for (Vertex v : required - matched) {
    const VertexSet& other = left.contains(v) ? right : left;
    out.emplace_back(v, (g.neighbors(v) & other).min());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool locally_correct(const Graph& g, const VertexSet& a, const EdsCertificate& c) {
  for (Vertex v : a - c.vertices)
    if (g.neighbors(v).intersects(a - c.vertices)) return false;
  VertexSet rest = g.vertices() - a;
  for (Vertex v : c.isolated())
    if (!g.neighbors(v).intersects(rest)) return false;
  return true;
}

std::pair<std::vector<VertexSet>, std::vector<VertexSet>> edsc_families(
    const NodeContext& ctx, const EdsCertificate& c1, const EdsCertificate& c2) {
  const Graph& g = ctx.g();
  std::vector<VertexSet> f1 = ctx.cut1.is_split
                                  ? split_family(g, ctx.a1, c1)
                                  : nonsplit_family(g, ctx.a1, ctx.cut1, c1, ctx.a2, c2);
  std::vector<VertexSet> f2 = ctx.cut2.is_split
                                  ? split_family(g, ctx.a2, c2)
                                  : nonsplit_family(g, ctx.a2, ctx.cut2, c2, ctx.a1, c1);
  return {std::move(f1), std::move(f2)};
}

std::vector<EdsCertificate> trim_eds_split(const NodeContext& ctx,
                                           std::vector<EdsCertificate> s) {
  const Graph& g = ctx.g();
  const VertexSet boundary = ctx.boundary();
  s = sorted_unique(std::move(s));
  std::map<std::pair<int, int>, const EdsCertificate*> best;
  for (const EdsCertificate& c : s) {
    if (!locally_correct(g, ctx.a, c)) continue;
    std::pair<int, int> key{c.isolated().size(), (c.vertices & boundary).size()};
    auto it = best.find(key);
    if (it == best.end() || edge_count(c) < edge_count(*it->second)) best[key] = &c;
  }
  std::vector<EdsCertificate> out;
  for (const auto& [key, c] : best) out.push_back(*c);
  double n1 = ctx.n() + 1.0;
  enforce_ceiling(ctx, out.size(), n1 * n1, "trim_eds_split");
  return sorted_unique(std::move(out));
}

std::vector<EdsCertificate> trim_eds_nonsplit(const NodeContext& ctx,
                                              std::vector<EdsCertificate> s) {
  const Graph& g = ctx.g();
  const VertexSet& cover = ctx.cut.witness_cover;
  const VertexSet outside = ctx.outside();
  s = sorted_unique(std::move(s));
  std::vector<const EdsCertificate*> valid;
  for (const EdsCertificate& c : s)
    if (locally_correct(g, ctx.a, c)) valid.push_back(&c);
  std::set<const EdsCertificate*> marked;
  for_each_subset(cover, [&](const VertexSet& r) {
    const VertexSet r_out = r & outside;
    for_each_subset(r, [&](const VertexSet& q) {
      const EdsCertificate* best = nullptr;
      int best_cost = 0;
      for (const EdsCertificate* c : valid) {
        if ((c->vertices & cover) != (r & ctx.a)) continue;
        bool dominated = true;
        for (Vertex w : (cover & outside) - r)
          if (!(g.neighbors(w) & ctx.a).is_subset_of(c->vertices)) dominated = false;
        if (!dominated) continue;
        auto span = min_crossing_span(g, (c->isolated() | r_out) - q, c->vertices, r_out);
        if (!span) continue;
        int cost = static_cast<int>(span->size()) + edge_count(*c);
        if (!best || cost < best_cost) {
          best = c;
          best_cost = cost;
        }
      }
      if (best) marked.insert(best);
    });
  });
  std::vector<EdsCertificate> out;
  for (const EdsCertificate* c : marked) out.push_back(*c);
  enforce_ceiling(ctx, out.size(), std::pow(3.0, cover.size()), "trim_eds_nonsplit");
  return sorted_unique(std::move(out));
}

std::vector<EdsCertificate> EdsProblem::initialize_leaf(const NodeContext&, Vertex v) const {
  VertexSet single;
  single.insert(v);
  return {{VertexSet{}, {}}, {single, {}}};
}

std::vector<EdsCertificate> EdsProblem::join(const NodeContext& ctx,
                                             const std::vector<EdsCertificate>& s1,
                                             const std::vector<EdsCertificate>& s2) const {
  const Graph& g = ctx.g();
  std::vector<EdsCertificate> raw;
  auto emit = [&](EdsCertificate c) {
    if (within_budget(c) && locally_correct(g, ctx.a, c)) raw.push_back(std::move(c));
  };
  for (const EdsCertificate& c1 : s1) {
    for (const EdsCertificate& c2 : s2) {
      const VertexSet vs = c1.vertices | c2.vertices;
      emit({vs, sorted_union(c1.edges, c2.edges)});
      auto [f1, f2] = edsc_families(ctx, c1, c2);
      for (const VertexSet& x1 : f1) {
        for (const VertexSet& x2 : f2) {
          if (x1.empty() && x2.empty()) continue;
          auto span = min_crossing_span(g, x1 | x2, x1, x2);
          if (!span) continue;
          emit({vs, sorted_union(c1.edges, c2.edges, *span)});
        }
      }
    }
  }
  return ctx.cut.is_split ? trim_eds_split(ctx, std::move(raw))
                          : trim_eds_nonsplit(ctx, std::move(raw));
}

bool EdsProblem::verify(const Graph& g, const EdsCertificate& c) const {
  if (!within_budget(c) || !c.isolated().empty()) return false;
  for (const Edge& e : c.edges)
    if (!g.has_edge(e.u, e.v) || !c.vertices.contains(e.u) || !c.vertices.contains(e.v))
      return false;
  return is_edge_dominating(g, c.edges);
}

std::vector<EdsCertificate> EdsProblem::enumerate(const Graph& g, const VertexSet& x) const {
  std::vector<EdsCertificate> out;
  for_each_subset(x, [&](const VertexSet& vs) {
    std::vector<Edge> inner = induced_subgraph(g, vs).edges();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << inner.size()); ++mask) {
      EdsCertificate c{vs, {}};
      for (std::size_t i = 0; i < inner.size(); ++i)
        if (mask >> i & 1u) c.edges.push_back(inner[i]);
      if (within_budget(c) && locally_correct(g, x, c)) out.push_back(std::move(c));
    }
  });
  return out;
}

std::vector<EdsCertificate> EdsProblem::brute_conc(const Graph& g, const VertexSet&,
                                                   const EdsCertificate& x, const VertexSet&,
                                                   const EdsCertificate& y) const {
  std::vector<Edge> cross = edges_between(g, x.vertices, y.vertices);
  std::vector<EdsCertificate> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cross.size()); ++mask) {
    std::vector<Edge> extra;
    for (std::size_t i = 0; i < cross.size(); ++i)
      if (mask >> i & 1u) extra.push_back(cross[i]);
    EdsCertificate c{x.vertices | y.vertices, sorted_union(x.edges, y.edges, extra)};
    if (within_budget(c)) out.push_back(std::move(c));
  }
  return out;
}

std::optional<long> EdsProblem::conc_score(const Graph& g, const EdsCertificate& x,
                                           const EdsCertificate& z) const {
  const VertexSet vs = x.vertices | z.vertices;
  for (const Edge& e : g.edges())
    if (!vs.contains(e.u) && !vs.contains(e.v)) return std::nullopt;
  auto span = min_crossing_span(g, x.isolated() | z.isolated(), x.vertices, z.vertices);
  if (!span) return std::nullopt;
  long total = static_cast<long>(x.edges.size() + z.edges.size() + span->size());
  if (t_ >= 0 && total > t_) return std::nullopt;
  return -total;
}

bool is_edge_dominating(const Graph& g, const std::vector<Edge>& d) {
  VertexSet touched;
  for (const Edge& e : d) {
    touched.insert(e.u);
    touched.insert(e.v);
  }
  for (const Edge& e : g.edges())
    if (!touched.contains(e.u) && !touched.contains(e.v)) return false;
  return true;
}

bool decide_eds(const Graph& g, const RootedBranchDecomposition& rbd, int t) {
  return recursive_solve(EdsProblem(t), g, rbd).accepted();
}

EdsResult solve_eds(const Graph& g, const RootedBranchDecomposition& rbd) {
  for (int t = 0; t <= g.order() / 2; ++t) {
    auto trace = recursive_solve(EdsProblem(t), g, rbd);
    if (trace.witness) return {t, trace.witness->edges};
  }
  throw InvariantError("no edge dominating set within a maximal matching's size");
}

}  // namespace smw
