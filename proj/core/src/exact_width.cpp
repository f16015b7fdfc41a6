#include "smw/exact_width.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "smw/errors.hpp"

namespace smw {

namespace {

VertexSet from_mask(const std::vector<Vertex>& ids, std::uint32_t mask) {
  VertexSet s;
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (mask >> i & 1u) s.insert(ids[i]);
  return s;
}

// Builds the unrooted tree for a subset DP solution.
class TreeBuilder {
 public:
  TreeBuilder(const std::vector<Vertex>& ids, const std::vector<std::uint32_t>& choice)
      : ids_(ids), choice_(choice) {}

  int build(std::uint32_t mask) {
    if ((mask & (mask - 1)) == 0) {
      int i = std::countr_zero(mask);
      return bd_.add_node(ids_[i]);
    }
    std::uint32_t left = choice_[mask];
    int a = build(left);
    int b = build(mask ^ left);
    int node = bd_.add_node();
    bd_.add_edge(node, a);
    bd_.add_edge(node, b);
    return node;
  }

  BranchDecomposition finish(std::uint32_t full) {
    int top = build(full);
    if (!bd_.is_leaf(top)) bd_.suppress(top);
    return bd_.compacted();
  }

 private:
  const std::vector<Vertex>& ids_;
  const std::vector<std::uint32_t>& choice_;
  BranchDecomposition bd_;
};

}  // namespace

std::vector<int> cut_table(const Graph& g, CutFunction f) {
  std::vector<Vertex> ids = g.vertices().to_vector();
  int n = static_cast<int>(ids.size());
  if (n > 20) throw RefusalError("cut table limited to 20 vertices");
  std::vector<int> table(std::size_t{1} << n, 0);
  std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    std::uint32_t comp = full ^ mask;
    if (comp < mask) {
      table[mask] = table[comp];
    } else {
      table[mask] = cut_value(g, from_mask(ids, mask), f);
    }
    if (mask == full) break;
  }
  return table;
}

DecompositionResult exact_branch_decomposition(const Graph& g, CutFunction f, int n_limit) {
  int n = g.order();
  if (n > n_limit) {
    throw RefusalError("exact decomposition refused: " + std::to_string(n) +
                       " vertices exceed the limit " + std::to_string(n_limit));
  }
  if (n == 0) throw DomainError("empty graph has no branch decomposition");
  if (n > 24) throw RefusalError("exact decomposition limited to 24 vertices");
  std::vector<Vertex> ids = g.vertices().to_vector();
  DecompositionResult out;
  if (n == 1) {
    out.bd = BranchDecomposition::single_leaf(ids[0]);
    out.report = f_width(out.bd, g, f);
    return out;
  }
  std::vector<int> table = cut_table(g, f);
  const std::uint32_t full = (1u << n) - 1;
  std::vector<int> w(std::size_t{1} << n, 0);
  std::vector<std::uint32_t> choice(std::size_t{1} << n, 0);
  // Masks in increasing order: every proper submask is already solved.
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if ((mask & (mask - 1)) == 0) continue;
    std::uint32_t low = mask & (~mask + 1);
    std::uint32_t rest = mask ^ low;
    int best = std::numeric_limits<int>::max();
    std::uint32_t best_left = 0;
    // Left part always holds the lowest bit; rest-submasks enumerate it.
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      std::uint32_t left = sub | low;
      if (left != mask) {
        std::uint32_t right = mask ^ left;
        int value = std::max({table[left], table[right], w[left], w[right]});
        if (value < best || (value == best && left < best_left)) {
          best = value;
          best_left = left;
        }
      }
      if (sub == 0) break;
    }
    w[mask] = best;
    choice[mask] = best_left;
  }
  TreeBuilder builder(ids, choice);
  out.bd = builder.finish(full);
  out.report = f_width(out.bd, g, f);
  if (out.report.width != w[full]) {
    throw InvariantError("subset DP width disagrees with the built tree");
  }
  return out;
}

void for_each_cubic_tree(const Graph& g,
                         const std::function<void(const BranchDecomposition&)>& visit) {
  std::vector<Vertex> ids = g.vertices().to_vector();
  int n = static_cast<int>(ids.size());
  if (n > 9) throw RefusalError("cubic tree enumeration limited to 9 vertices");
  if (n <= 3) {
    visit(BranchDecomposition::star(g.vertices()));
    return;
  }
  // Nodes 0..n-1 are leaves, n.. inner nodes; trees grow by edge subdivision.
  std::vector<std::pair<int, int>> edges{{0, n}, {1, n}, {2, n}};
  int next_inner = n + 1;
  auto emit = [&] {
    BranchDecomposition bd;
    for (int i = 0; i < n; ++i) bd.add_node(ids[i]);
    for (int i = n; i < next_inner; ++i) bd.add_node();
    for (auto [a, b] : edges) bd.add_edge(a, b);
    visit(bd);
  };
  auto grow = [&](auto&& self, int leaf) -> void {
    if (leaf == n) {
      emit();
      return;
    }
    std::size_t count = edges.size();
    for (std::size_t e = 0; e < count; ++e) {
      auto [a, b] = edges[e];
      int m = next_inner++;
      edges[e] = {a, m};
      edges.emplace_back(m, b);
      edges.emplace_back(m, leaf);
      self(self, leaf + 1);
      edges.pop_back();
      edges.pop_back();
      edges[e] = {a, b};
      --next_inner;
    }
  };
  grow(grow, 3);
}

int enumerate_optimal_width(const Graph& g, CutFunction f) {
  std::vector<Vertex> ids = g.vertices().to_vector();
  int n = static_cast<int>(ids.size());
  if (n > 9) throw RefusalError("cubic tree enumeration limited to 9 vertices");
  if (n == 1) return 0;
  std::vector<int> table = cut_table(g, f);
  std::vector<int> index(VertexSet::kCapacity, -1);
  for (int i = 0; i < n; ++i) index[ids[i]] = i;
  int best = std::numeric_limits<int>::max();
  for_each_cubic_tree(g, [&](const BranchDecomposition& bd) {
    int width = 0;
    for (auto [a, b] : bd.edges()) {
      std::uint32_t mask = 0;
      for (Vertex v : bd.side(a, b)) mask |= 1u << index[v];
      width = std::max(width, table[mask]);
      if (width >= best) return;
    }
    best = std::min(best, width);
  });
  return best;
}

DecompositionResult heuristic_branch_decomposition(const Graph& g, CutFunction f) {
  if (g.order() == 0) throw DomainError("empty graph has no branch decomposition");
  BranchDecomposition bd;
  // Returns the subtree root for the vertex set.
  auto build = [&](auto&& self, const VertexSet& s) -> int {
    if (s.size() == 1) return bd.add_node(s.min());
    std::vector<Vertex> vs = s.to_vector();
    VertexSet left = VertexSet::from_range(
        std::vector<Vertex>(vs.begin(), vs.begin() + static_cast<std::ptrdiff_t>(vs.size() / 2)));
    int current = cut_value(g, left, f);
    // Single-vertex moves while they strictly lower f(left).
    for (int round = 0; round < 4 * static_cast<int>(vs.size()); ++round) {
      int best = current;
      Vertex best_v = -1;
      for (Vertex v : vs) {
        VertexSet trial = left;
        if (trial.contains(v)) {
          trial.erase(v);
        } else {
          trial.insert(v);
        }
        if (trial.empty() || trial == s) continue;
        int value = cut_value(g, trial, f);
        if (value < best) {
          best = value;
          best_v = v;
        }
      }
      if (best_v < 0) break;
      if (left.contains(best_v)) {
        left.erase(best_v);
      } else {
        left.insert(best_v);
      }
      current = best;
    }
    int a = self(self, left);
    int b = self(self, s - left);
    int node = bd.add_node();
    bd.add_edge(node, a);
    bd.add_edge(node, b);
    return node;
  };
  int top = build(build, g.vertices());
  if (!bd.is_leaf(top)) bd.suppress(top);
  DecompositionResult out;
  out.bd = bd.compacted();
  out.report = f_width(out.bd, g, f);
  return out;
}

const char* to_string(Backend b) { return b == Backend::exact ? "exact" : "heuristic"; }

PrimeDecomposition approx_mm_branch_decomposition(const Graph& prime, int k, Backend backend,
                                                  int exact_limit) {
  PrimeDecomposition out;
  out.backend = backend;
  if (prime.order() <= 3) {
    out.result.bd = BranchDecomposition::star(prime.vertices());
    out.result.report = f_width(out.result.bd, prime, CutFunction::mm);
    out.backend = Backend::exact;
  } else if (backend == Backend::exact) {
    out.result = exact_branch_decomposition(prime, CutFunction::mm, exact_limit);
  } else {
    out.result = heuristic_branch_decomposition(prime, CutFunction::mm);
  }
  out.too_wide = out.result.report.width > 3 * k + 1;
  return out;
}

int exact_smw(const Graph& g, int n_limit) {
  return exact_branch_decomposition(g, CutFunction::sm, n_limit).report.width;
}

int exact_mmw(const Graph& g, int n_limit) {
  return exact_branch_decomposition(g, CutFunction::mm, n_limit).report.width;
}

}  // namespace smw
