#include "smw/coloring.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace smw {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

/// Kuhn augmenting-path matching. Left vertices in `order` are processed in
/// turn; an already matched left vertex stays matched.
class Kuhn {
 public:
  Kuhn(int nl, int nr, std::vector<std::vector<int>> adj)
      : adj_(std::move(adj)), match_l_(nl, -1), match_r_(nr, -1) {}

  bool augment(int l) {
    std::vector<bool> seen(match_r_.size(), false);
    return try_augment(l, seen);
  }
  const std::vector<int>& left_match() const { return match_l_; }

 private:
  bool try_augment(int l, std::vector<bool>& seen) {
    for (int r : adj_[l]) {
      if (seen[r]) continue;
      seen[r] = true;
      if (match_r_[r] < 0 || try_augment(match_r_[r], seen)) {
        match_l_[l] = r;
        match_r_[r] = l;
        return true;
      }
    }
    return false;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<int> match_l_;
  std::vector<int> match_r_;
};

struct Combined {
  std::vector<VertexSet> blocks;
  std::vector<int> left_of;   // block index -> left block (or -1)
  std::vector<int> right_of;  // block index -> right block (or -1)
};

/// Unions blocks that share elements; nullopt when a block meets two blocks
/// of the other side.
std::optional<Combined> combine_overlaps(const std::vector<VertexSet>& left,
                                         const std::vector<VertexSet>& right) {
  int nl = static_cast<int>(left.size());
  int nr = static_cast<int>(right.size());
  std::vector<int> parent(nl + nr);
  std::iota(parent.begin(), parent.end(), 0);
  for (int i = 0; i < nl; ++i)
    for (int j = 0; j < nr; ++j)
      if (left[i].intersects(right[j])) parent[find_root(parent, i)] = find_root(parent, nl + j);
  std::vector<int> index(nl + nr, -1);
  Combined out;
  for (int x = 0; x < nl + nr; ++x) {
    int r = find_root(parent, x);
    if (index[r] < 0) {
      index[r] = static_cast<int>(out.blocks.size());
      out.blocks.emplace_back();
      out.left_of.push_back(-1);
      out.right_of.push_back(-1);
    }
    int b = index[r];
    if (x < nl) {
      if (out.left_of[b] >= 0) return std::nullopt;
      out.left_of[b] = x;
      out.blocks[b] = out.blocks[b] | left[x];
    } else {
      if (out.right_of[b] >= 0) return std::nullopt;
      out.right_of[b] = x - nl;
      out.blocks[b] = out.blocks[b] | right[x - nl];
    }
  }
  return out;
}

std::vector<VertexSet> nonempty(const std::vector<VertexSet>& blocks) {
  std::vector<VertexSet> out;
  for (const VertexSet& b : blocks)
    if (!b.empty()) out.push_back(b);
  return out;
}

}  // namespace

VertexSet Partition::ground() const {
  VertexSet s;
  for (const VertexSet& b : blocks) s = s | b;
  return s;
}

Partition canonical(std::vector<VertexSet> blocks) {
  Partition p{nonempty(blocks)};
  std::sort(p.blocks.begin(), p.blocks.end());
  return p;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  for (Vertex v : s)
    if (g.neighbors(v).intersects(s)) return false;
  return true;
}

bool all_independent(const Graph& g, const Partition& p) {
  return std::all_of(p.blocks.begin(), p.blocks.end(),
                     [&](const VertexSet& b) { return is_independent(g, b); });
}

Partition restrict_partition(const Partition& p, const VertexSet& a) {
  std::vector<VertexSet> blocks;
  for (const VertexSet& b : p.blocks) blocks.push_back(b & a);
  return canonical(std::move(blocks));
}

std::optional<Partition> merge_partitions(const Graph& g, const Partition& p, const Partition& q,
                                          int t) {
  auto combined = combine_overlaps(p.blocks, q.blocks);
  if (!combined) return std::nullopt;
  std::vector<int> free_left;
  std::vector<int> free_right;
  for (std::size_t b = 0; b < combined->blocks.size(); ++b) {
    if (!is_independent(g, combined->blocks[b])) return std::nullopt;
    if (combined->right_of[b] < 0) free_left.push_back(static_cast<int>(b));
    if (combined->left_of[b] < 0) free_right.push_back(static_cast<int>(b));
  }
  std::vector<std::vector<int>> adj(free_left.size());
  for (std::size_t i = 0; i < free_left.size(); ++i)
    for (std::size_t j = 0; j < free_right.size(); ++j)
      if (is_independent(g, combined->blocks[free_left[i]] | combined->blocks[free_right[j]]))
        adj[i].push_back(static_cast<int>(j));
  std::vector<int> match = hopcroft_karp(static_cast<int>(free_left.size()),
                                         static_cast<int>(free_right.size()), adj);
  std::vector<VertexSet> blocks = combined->blocks;
  std::vector<bool> absorbed(blocks.size(), false);
  for (std::size_t i = 0; i < free_left.size(); ++i) {
    if (match[i] < 0) continue;
    int r = free_right[match[i]];
    blocks[free_left[i]] = blocks[free_left[i]] | blocks[r];
    absorbed[r] = true;
  }
  std::vector<VertexSet> kept;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    if (!absorbed[b]) kept.push_back(blocks[b]);
  Partition out = canonical(std::move(kept));
  if (static_cast<int>(out.blocks.size()) > t) return std::nullopt;
  return out;
}

void for_each_set_partition(const std::vector<Vertex>& items, int max_blocks,
                            const std::function<void(const Partition&)>& visit) {
  std::vector<VertexSet> blocks;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == items.size()) {
      visit(canonical(blocks));
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].insert(items[i]);
      rec(i + 1);
      blocks[b].erase(items[i]);
    }
    if (static_cast<int>(blocks.size()) < max_blocks) {
      blocks.emplace_back();
      blocks.back().insert(items[i]);
      rec(i + 1);
      blocks.pop_back();
    }
  };
  rec(0);
}

std::vector<Partition> ColoringProblem::initialize_leaf(const NodeContext&, Vertex v) const {
  if (t_ < 1) return {};
  VertexSet s;
  s.insert(v);
  return {Partition{{s}}};
}

std::vector<Partition> ColoringProblem::trim(const NodeContext& ctx, std::vector<Partition> s) const {
  const Graph& g = ctx.g();
  std::vector<Partition> valid;
  for (Partition& p : s)
    if (static_cast<int>(p.blocks.size()) <= t_ && all_independent(g, p))
      valid.push_back(std::move(p));
  std::sort(valid.begin(), valid.end());
  valid.erase(std::unique(valid.begin(), valid.end()), valid.end());
  std::vector<Partition> out;
  if (valid.empty()) return out;
  if (ctx.cut.is_split) {
    VertexSet boundary = ctx.boundary();
    std::size_t best = 0;
    int best_count = -1;
    for (std::size_t i = 0; i < valid.size(); ++i) {
      int count = 0;
      for (const VertexSet& b : valid[i].blocks) count += b.intersects(boundary) ? 1 : 0;
      if (best_count < 0 || count < best_count) {
        best_count = count;
        best = i;
      }
    }
    out.push_back(valid[best]);
  } else {
    std::vector<bool> marked(valid.size(), false);
    for_each_set_partition(ctx.cut.witness_cover.to_vector(), t_, [&](const Partition& pc) {
      for (std::size_t i = 0; i < valid.size(); ++i) {
        if (merge_partitions(g, valid[i], pc, t_)) {
          marked[i] = true;
          return;
        }
      }
    });
    for (std::size_t i = 0; i < valid.size(); ++i)
      if (marked[i]) out.push_back(valid[i]);
  }
  double k = ctx.cut.sm_value;
  enforce_ceiling(ctx, out.size(), k == 0 ? 1.0 : std::pow(k, k), "trim_col");
  return out;
}

std::vector<Partition> ColoringProblem::join(const NodeContext& ctx,
                                             const std::vector<Partition>& s1,
                                             const std::vector<Partition>& s2) const {
  const Graph& g = ctx.g();
  const bool split1 = ctx.cut1.is_split;
  const bool split2 = ctx.cut2.is_split;
  std::vector<Partition> raw;
  if (split1 && split2) {
    const VertexSet bd1 = boundary_of(g, ctx.a1);
    const VertexSet bd2 = boundary_of(g, ctx.a2);
    const bool crossing = !edges_between(g, ctx.a1, ctx.a2).empty();
    for (const Partition& p1 : s1) {
      for (const Partition& p2 : s2) {
        std::vector<VertexSet> f1, n1, f2, n2;
        for (const VertexSet& b : p1.blocks) (b.intersects(bd1) ? f1 : n1).push_back(b);
        for (const VertexSet& b : p2.blocks) (b.intersects(bd2) ? f2 : n2).push_back(b);
        const std::size_t max_c = crossing ? 0 : std::min(f1.size(), f2.size());
        // c frontier blocks of each side share a colour; every other block is
        // absorbed as far as possible.
        for (std::size_t c = 0; c <= max_c; ++c) {
          std::vector<VertexSet> blocks;
          for (std::size_t i = 0; i < c; ++i) blocks.push_back(f1[i] | f2[i]);
          std::vector<VertexSet> only1(f1.begin() + static_cast<std::ptrdiff_t>(c), f1.end());
          std::vector<VertexSet> only2(f2.begin() + static_cast<std::ptrdiff_t>(c), f2.end());
          std::vector<VertexSet> rest1 = n1;
          std::vector<VertexSet> rest2 = n2;
          for (VertexSet& b : only1) {
            if (!rest2.empty()) {
              b = b | rest2.back();
              rest2.pop_back();
            }
          }
          for (VertexSet& b : only2) {
            if (!rest1.empty()) {
              b = b | rest1.back();
              rest1.pop_back();
            }
          }
          while (!rest1.empty() && !rest2.empty()) {
            blocks.push_back(rest1.back() | rest2.back());
            rest1.pop_back();
            rest2.pop_back();
          }
          blocks.insert(blocks.end(), only1.begin(), only1.end());
          blocks.insert(blocks.end(), only2.begin(), only2.end());
          blocks.insert(blocks.end(), rest1.begin(), rest1.end());
          blocks.insert(blocks.end(), rest2.begin(), rest2.end());
          raw.push_back(canonical(std::move(blocks)));
        }
      }
    }
  } else if (!split1 && !split2) {
    std::vector<Vertex> cover = (ctx.cut1.witness_cover | ctx.cut2.witness_cover).to_vector();
    for (const Partition& p1 : s1) {
      for (const Partition& p2 : s2) {
        for_each_set_partition(cover, t_, [&](const Partition& pc) {
          auto m1 = merge_partitions(g, pc, p1, t_);
          if (!m1) return;
          auto m2 = merge_partitions(g, *m1, p2, t_);
          if (!m2) return;
          raw.push_back(restrict_partition(*m2, ctx.a));
        });
      }
    }
  } else {
    const bool s_is_1 = split1;
    const VertexSet& a_s = s_is_1 ? ctx.a1 : ctx.a2;
    const CutEvaluation& cut_r = s_is_1 ? ctx.cut2 : ctx.cut1;
    const std::vector<Partition>& ss = s_is_1 ? s1 : s2;
    const std::vector<Partition>& sr = s_is_1 ? s2 : s1;
    const VertexSet bd_s = boundary_of(g, a_s);
    std::vector<Vertex> cover = cut_r.witness_cover.to_vector();
    for (const Partition& pr : sr) {
      for_each_set_partition(cover, t_, [&](const Partition& pc) {
        auto merged_r = merge_partitions(g, pr, pc, t_);
        if (!merged_r) return;
        const std::vector<VertexSet>& rb = merged_r->blocks;
        // identity[b]: index of the cover block inside R-block b, or -1.
        std::vector<int> identity(rb.size(), -1);
        for (std::size_t b = 0; b < rb.size(); ++b)
          for (std::size_t j = 0; j < pc.blocks.size(); ++j)
            if (pc.blocks[j].is_subset_of(rb[b])) identity[b] = static_cast<int>(j);
        const int nc = static_cast<int>(pc.blocks.size());
        for (const Partition& ps : ss) {
          auto combined = combine_overlaps(rb, ps.blocks);
          if (!combined) continue;
          std::vector<bool> frontier(ps.blocks.size());
          for (std::size_t j = 0; j < ps.blocks.size(); ++j)
            frontier[j] = ps.blocks[j].intersects(bd_s);
          for (std::uint32_t q = 0; q < (1u << nc); ++q) {
            // q: cover blocks that must not share a colour with a frontier block of P_s.
            std::vector<int> mandatory;
            std::vector<int> optional_left;
            std::vector<int> right;
            bool ok = true;
            const auto& cb = combined->blocks;
            for (std::size_t b = 0; b < cb.size() && ok; ++b) {
              if (!is_independent(g, cb[b])) ok = false;
              int l = combined->left_of[b];
              int r = combined->right_of[b];
              int id = l >= 0 ? identity[l] : -1;
              bool in_q = id >= 0 && (q >> id & 1u);
              if (l >= 0 && r >= 0) {
                if (id >= 0 && in_q == frontier[r]) ok = false;
              } else if (l >= 0) {
                if (id >= 0 && !in_q) {
                  mandatory.push_back(static_cast<int>(b));
                } else {
                  optional_left.push_back(static_cast<int>(b));
                }
              } else {
                right.push_back(static_cast<int>(b));
              }
            }
            if (!ok) continue;
            std::vector<int> left = mandatory;
            left.insert(left.end(), optional_left.begin(), optional_left.end());
            std::vector<std::vector<int>> adj(left.size());
            for (std::size_t i = 0; i < left.size(); ++i) {
              int l = combined->left_of[left[i]];
              int id = identity[l];
              bool in_q = id >= 0 && (q >> id & 1u);
              for (std::size_t j = 0; j < right.size(); ++j) {
                bool fr = frontier[combined->right_of[right[j]]];
                if (id >= 0 && in_q == fr) continue;
                if (is_independent(g, cb[left[i]] | cb[right[j]]))
                  adj[i].push_back(static_cast<int>(j));
              }
            }
            Kuhn kuhn(static_cast<int>(left.size()), static_cast<int>(right.size()), adj);
            for (std::size_t i = 0; i < mandatory.size() && ok; ++i) ok = kuhn.augment(static_cast<int>(i));
            if (!ok) continue;
            for (std::size_t i = mandatory.size(); i < left.size(); ++i)
              kuhn.augment(static_cast<int>(i));
            std::vector<VertexSet> blocks = cb;
            std::vector<bool> absorbed(cb.size(), false);
            for (std::size_t i = 0; i < left.size(); ++i) {
              int m = kuhn.left_match()[i];
              if (m < 0) continue;
              blocks[left[i]] = blocks[left[i]] | cb[right[m]];
              absorbed[right[m]] = true;
            }
            std::vector<VertexSet> kept;
            for (std::size_t b = 0; b < blocks.size(); ++b)
              if (!absorbed[b]) kept.push_back(blocks[b]);
            if (static_cast<int>(nonempty(kept).size()) > t_) continue;
            raw.push_back(restrict_partition(canonical(std::move(kept)), ctx.a));
          }
        }
      });
    }
  }
  return trim(ctx, std::move(raw));
}

bool ColoringProblem::verify(const Graph& g, const Partition& c) const {
  return static_cast<int>(c.blocks.size()) <= t_ && c.ground() == g.vertices() &&
         all_independent(g, c);
}

std::vector<Partition> ColoringProblem::enumerate(const Graph& g, const VertexSet& x) const {
  std::vector<Partition> out;
  for_each_set_partition(x.to_vector(), t_, [&](const Partition& p) {
    if (all_independent(g, p)) out.push_back(p);
  });
  return out;
}

std::vector<Partition> ColoringProblem::brute_conc(const Graph& g, const VertexSet&,
                                                   const Partition& x, const VertexSet&,
                                                   const Partition& y) const {
  std::vector<Partition> out;
  std::vector<bool> used(y.blocks.size(), false);
  std::vector<VertexSet> blocks;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == x.blocks.size()) {
      std::vector<VertexSet> all = blocks;
      for (std::size_t j = 0; j < y.blocks.size(); ++j)
        if (!used[j]) all.push_back(y.blocks[j]);
      Partition p = canonical(std::move(all));
      if (static_cast<int>(p.blocks.size()) <= t_ && all_independent(g, p)) out.push_back(p);
      return;
    }
    blocks.push_back(x.blocks[i]);
    rec(i + 1);
    blocks.pop_back();
    for (std::size_t j = 0; j < y.blocks.size(); ++j) {
      if (used[j]) continue;
      used[j] = true;
      blocks.push_back(x.blocks[i] | y.blocks[j]);
      rec(i + 1);
      blocks.pop_back();
      used[j] = false;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<long> ColoringProblem::conc_score(const Graph& g, const Partition& x,
                                                const Partition& z) const {
  if (merge_partitions(g, x, z, t_)) return 0;
  return std::nullopt;
}

bool decide_coloring(const Graph& g, const RootedBranchDecomposition& rbd, int t) {
  return recursive_solve(ColoringProblem(t), g, rbd).accepted();
}

ColoringResult solve_chromatic(const Graph& g, const RootedBranchDecomposition& rbd) {
  for (int t = 1; t <= g.order(); ++t) {
    auto trace = recursive_solve(ColoringProblem(t), g, rbd);
    if (trace.witness) return {t, *trace.witness};
  }
  throw InvariantError("no colouring found with n colours");
}

}  // namespace smw
