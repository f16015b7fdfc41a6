#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "smw/branch_decomposition.hpp"
#include "smw/errors.hpp"

namespace smw {

/// Everything a join needs about one inner node w with children a, b.
struct NodeContext {
  const Graph* graph = nullptr;
  int node = -1;
  bool root = false;
  VertexSet a1;  // V_a (empty at a leaf)
  VertexSet a2;  // V_b (empty at a leaf)
  VertexSet a;   // V_w
  CutEvaluation cut1;
  CutEvaluation cut2;
  CutEvaluation cut;

  const Graph& g() const { return *graph; }
  /// V(G) \ A
  VertexSet outside() const { return graph->vertices() - a; }
  /// N(Ā) ∩ A: vertices of A with a neighbour outside.
  VertexSet boundary() const;
  int n() const { return graph->order(); }
};

NodeContext make_context(const Graph& g, const RootedBranchDecomposition& rbd, int node);
/// N(V \ s) ∩ s
VertexSet boundary_of(const Graph& g, const VertexSet& s);

/// Throws InvariantError when a join emits more certificates than allowed.
void enforce_ceiling(const NodeContext& ctx, std::size_t size, double bound, const char* what);

/// Per-node certificate counts observed by recursive_solve.
struct JoinStat {
  int node = -1;
  int vertices = 0;
  bool split = false;
  std::size_t size = 0;
};

template <class Cert>
struct SolveTrace {
  std::vector<Cert> root_set;
  std::optional<Cert> witness;
  std::vector<JoinStat> stats;

  bool accepted() const { return witness.has_value(); }
};

/// Bottom-up evaluation: leaves through initialize_leaf, inner nodes
/// through join, acceptance through verify at the root.
///
/// Problem must provide:
///   using Certificate;
///   std::vector<Certificate> initialize_leaf(const NodeContext&, Vertex) const;
///   std::vector<Certificate> join(const NodeContext&, const std::vector<Certificate>&,
///                                 const std::vector<Certificate>&) const;
///   bool verify(const Graph&, const Certificate&) const;
template <class Problem>
SolveTrace<typename Problem::Certificate> recursive_solve(const Problem& p, const Graph& g,
                                                          const RootedBranchDecomposition& rbd) {
  using Cert = typename Problem::Certificate;
  if (rbd.root < 0 || rbd.nodes.at(rbd.root).vertices != g.vertices()) {
    throw DomainError("decomposition leaves differ from V(G)");
  }
  std::vector<std::vector<Cert>> sets(rbd.nodes.size());
  SolveTrace<Cert> trace;
  for (int w : rbd.postorder()) {
    NodeContext ctx = make_context(g, rbd, w);
    const RootedNode& node = rbd.nodes[w];
    if (node.is_leaf()) {
      sets[w] = p.initialize_leaf(ctx, node.leaf);
    } else {
      sets[w] = p.join(ctx, sets[node.left], sets[node.right]);
      std::vector<Cert>().swap(sets[node.left]);
      std::vector<Cert>().swap(sets[node.right]);
    }
    trace.stats.push_back({w, node.vertices.size(), ctx.cut.is_split, sets[w].size()});
  }
  trace.root_set = std::move(sets[rbd.root]);
  for (const Cert& c : trace.root_set) {
    if (p.verify(g, c)) {
      trace.witness = c;
      break;
    }
  }
  return trace;
}

/// Largest graph on which check_preserves enumerates cert(X̄).
inline constexpr int kPreservesLimit = 7;

/// Best witness score reachable from x by combining with z; nullopt when no
/// combination is a witness. Problem must provide
///   std::vector<Certificate> enumerate(const Graph&, const VertexSet&) const;
///   std::optional<long> conc_score(const Graph&, const Certificate&, const Certificate&) const;
template <class Problem, class Cert>
std::optional<long> best_score(const Problem& p, const Graph& g, const std::vector<Cert>& s,
                               const Cert& z) {
  std::optional<long> best;
  for (const Cert& x : s) {
    std::optional<long> v = p.conc_score(g, x, z);
    if (v && (!best || *v > *best)) best = v;
  }
  return best;
}

/// True iff S_small preserves S_big with respect to X: every completion z of
/// X̄ that turns some member of S_big into a witness of a given score does
/// so for some member of S_small at least as well.
template <class Problem, class Cert>
bool check_preserves(const Problem& p, const Graph& g, const VertexSet& x,
                     const std::vector<Cert>& s_small, const std::vector<Cert>& s_big) {
  if (g.order() > kPreservesLimit) {
    throw RefusalError("preservation check limited to " + std::to_string(kPreservesLimit) +
                       " vertices");
  }
  for (const Cert& z : p.enumerate(g, g.vertices() - x)) {
    std::optional<long> big = best_score(p, g, s_big, z);
    if (!big) continue;
    std::optional<long> small = best_score(p, g, s_small, z);
    if (!small || *small < *big) return false;
  }
  return true;
}

/// All combinations brute_conc(s1, s2) for s1 in S1 over A1, s2 in S2 over
/// A2. Problem must provide
///   std::vector<Certificate> brute_conc(const Graph&, const VertexSet& a1, const Certificate&,
///                                       const VertexSet& a2, const Certificate&) const;
template <class Problem, class Cert>
std::vector<Cert> brute_conc_sets(const Problem& p, const Graph& g, const VertexSet& a1,
                                  const std::vector<Cert>& s1, const VertexSet& a2,
                                  const std::vector<Cert>& s2) {
  std::vector<Cert> out;
  for (const Cert& x : s1)
    for (const Cert& y : s2) {
      std::vector<Cert> part = p.brute_conc(g, a1, x, a2, y);
      out.insert(out.end(), part.begin(), part.end());
    }
  return out;
}

}  // namespace smw
