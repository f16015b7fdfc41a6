#include "smw/maxcut.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>

namespace smw {

int cut_size_within(const Graph& g, const VertexSet& x, const VertexSet& within) {
  VertexSet inside = x & within;
  VertexSet other = within - x;
  int count = 0;
  for (Vertex v : inside) count += (g.neighbors(v) & other).size();
  return count;
}

int cut_size(const Graph& g, const VertexSet& x) { return cut_size_within(g, x, g.vertices()); }

std::vector<CutCertificate> MaxCutProblem::initialize_leaf(const NodeContext&, Vertex v) const {
  VertexSet single;
  single.insert(v);
  return {{VertexSet{}, 0}, {single, 0}};
}

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

/// Keeps c when it beats the incumbent; ties go to the smaller subset.
void keep_better(std::optional<std::pair<long, CutCertificate>>& best, long score,
                 const CutCertificate& c) {
  if (!best || score > best->first || (score == best->first && c.subset < best->second.subset))
    best = std::make_pair(score, c);
}

}  // namespace

std::vector<CutCertificate> MaxCutProblem::join(const NodeContext& ctx,
                                                const std::vector<CutCertificate>& s1,
                                                const std::vector<CutCertificate>& s2) const {
  const Graph& g = ctx.g();
  std::vector<CutCertificate> all;
  all.reserve(s1.size() * s2.size());
  for (const CutCertificate& c1 : s1) {
    for (const CutCertificate& c2 : s2) {
      CutCertificate c;
      c.subset = c1.subset | c2.subset;
      c.internal = c1.internal + c2.internal +
                   static_cast<int>(edges_between(g, c1.subset, ctx.a2 - c2.subset).size()) +
                   static_cast<int>(edges_between(g, c2.subset, ctx.a1 - c1.subset).size());
      all.push_back(c);
    }
  }
  std::vector<CutCertificate> out;
  const bool split = ctx.cut.is_split;
  if (split) {
    // Crossing edges contribute z times a quantity fixed by the outside.
    const VertexSet boundary = ctx.boundary();
    std::map<int, std::optional<std::pair<long, CutCertificate>>> best;
    for (const CutCertificate& c : all) keep_better(best[(boundary & c.subset).size()], c.internal, c);
    for (auto& [z, b] : best) out.push_back(b->second);
  } else {
    // For each guess S_C of the cover's intersection with the full solution,
    // score c by its internal cut plus the crossing edges it decides.
    const VertexSet& cover = ctx.cut.witness_cover;
    const VertexSet cover_in = cover & ctx.a;
    const VertexSet cover_out = cover - ctx.a;
    const VertexSet free_in = ctx.a - cover;
    for_each_subset(cover, [&](const VertexSet& guess) {
      std::optional<std::pair<long, CutCertificate>> best;
      for (const CutCertificate& c : all) {
        if ((c.subset & cover_in) != (guess & cover_in)) continue;
        long score = c.internal;
        for (Vertex w : cover_out) {
          VertexSet nb = g.neighbors(w) & free_in;
          score += guess.contains(w) ? (nb - c.subset).size() : (nb & c.subset).size();
        }
        keep_better(best, score, c);
      }
      if (best) out.push_back(best->second);
    });
    std::sort(out.begin(), out.end(),
              [](const CutCertificate& a, const CutCertificate& b) { return a.subset < b.subset; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  double bound = split ? ctx.n() + 1 : std::pow(2.0, ctx.cut.mm_value);
  enforce_ceiling(ctx, out.size(), bound, "join_maxcut");
  return out;
}

bool MaxCutProblem::verify(const Graph& g, const CutCertificate& c) const {
  if (c.internal != cut_size(g, c.subset)) return false;
  return t_ < 0 || c.internal >= t_;
}

std::vector<CutCertificate> MaxCutProblem::enumerate(const Graph& g, const VertexSet& x) const {
  std::vector<Vertex> vs = x.to_vector();
  std::vector<CutCertificate> out;
  for (std::uint32_t mask = 0; mask < (1u << vs.size()); ++mask) {
    VertexSet s;
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (mask >> i & 1u) s.insert(vs[i]);
    out.push_back({s, cut_size_within(g, s, x)});
  }
  return out;
}

std::vector<CutCertificate> MaxCutProblem::brute_conc(const Graph& g, const VertexSet& a1,
                                                      const CutCertificate& x, const VertexSet& a2,
                                                      const CutCertificate& y) const {
  VertexSet u = x.subset | y.subset;
  return {{u, cut_size_within(g, u, a1 | a2)}};
}

std::optional<long> MaxCutProblem::conc_score(const Graph& g, const CutCertificate& x,
                                              const CutCertificate& z) const {
  int value = cut_size(g, x.subset | z.subset);
  if (t_ >= 0 && value < t_) return std::nullopt;
  return value;
}

MaxCutResult solve_maxcut(const Graph& g, const RootedBranchDecomposition& rbd) {
  MaxCutProblem p;
  auto trace = recursive_solve(p, g, rbd);
  MaxCutResult r;
  bool found = false;
  for (const CutCertificate& c : trace.root_set) {
    if (!found || c.internal > r.value) {
      r.value = c.internal;
      r.witness = c.subset;
      found = true;
    }
  }
  if (!found || cut_size(g, r.witness) != r.value) {
    throw InvariantError("maxcut root certificate does not verify");
  }
  return r;
}

bool decide_maxcut(const Graph& g, const RootedBranchDecomposition& rbd, int t) {
  MaxCutProblem p(t);
  return recursive_solve(p, g, rbd).accepted();
}

}  // namespace smw
