#pragma once

#include <optional>
#include <vector>

#include "smw/dp_framework.hpp"

namespace smw {

/// Subgraph of G[A]: every edge has both endpoints in `vertices`.
struct EdsCertificate {
  VertexSet vertices;
  std::vector<Edge> edges;  // sorted

  /// Vertices not incident to any certificate edge.
  VertexSet isolated() const;

  friend bool operator==(const EdsCertificate&, const EdsCertificate&) = default;
  friend auto operator<=>(const EdsCertificate&, const EdsCertificate&) = default;
};

/// Minimum E ⊆ E(G) with A ⊆ V(E). Throws DomainError when some vertex of A
/// is isolated in G.
std::vector<Edge> min_spanning_edge_set(const Graph& g, const VertexSet& a);

/// Minimum set of G-edges between `left` and `right` (disjoint) whose
/// endpoints include every vertex of `required` (a subset of left ∪ right);
/// nullopt when some required vertex has no such edge.
std::optional<std::vector<Edge>> min_crossing_span(const Graph& g, const VertexSet& required,
                                                   const VertexSet& left, const VertexSet& right);

/// Every edge of G[a] has an endpoint in c.vertices and every isolated
/// certificate vertex has a neighbour outside a.
bool locally_correct(const Graph& g, const VertexSet& a, const EdsCertificate& c);

/// Candidate sets X1 ⊆ V(c1), X2 ⊆ V(c2) for the crossing edges of a join.
std::pair<std::vector<VertexSet>, std::vector<VertexSet>> edsc_families(
    const NodeContext& ctx, const EdsCertificate& c1, const EdsCertificate& c2);

std::vector<EdsCertificate> trim_eds_split(const NodeContext& ctx, std::vector<EdsCertificate> s);
std::vector<EdsCertificate> trim_eds_nonsplit(const NodeContext& ctx,
                                              std::vector<EdsCertificate> s);

/// Edge dominating set with at most t edges (t < 0: no bound).
class EdsProblem {
 public:
  using Certificate = EdsCertificate;

  explicit EdsProblem(int t = -1) : t_(t) {}

  int t() const { return t_; }

  std::vector<Certificate> initialize_leaf(const NodeContext& ctx, Vertex v) const;
  std::vector<Certificate> join(const NodeContext& ctx, const std::vector<Certificate>& s1,
                                const std::vector<Certificate>& s2) const;
  bool verify(const Graph& g, const Certificate& c) const;

  std::vector<Certificate> enumerate(const Graph& g, const VertexSet& x) const;
  std::vector<Certificate> brute_conc(const Graph& g, const VertexSet& a1, const Certificate& x,
                                      const VertexSet& a2, const Certificate& y) const;
  std::optional<long> conc_score(const Graph& g, const Certificate& x,
                                 const Certificate& z) const;

 private:
  bool within_budget(const Certificate& c) const {
    return t_ < 0 || static_cast<int>(c.edges.size()) <= t_;
  }

  int t_;
};

struct EdsResult {
  int size = 0;
  std::vector<Edge> edges;
};

/// Every edge of G shares an endpoint with some edge of `d`.
bool is_edge_dominating(const Graph& g, const std::vector<Edge>& d);

EdsResult solve_eds(const Graph& g, const RootedBranchDecomposition& rbd);
bool decide_eds(const Graph& g, const RootedBranchDecomposition& rbd, int t);

}  // namespace smw
