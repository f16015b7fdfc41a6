#pragma once

#include <optional>
#include <vector>

#include "smw/dp_framework.hpp"

namespace smw {

struct CutCertificate {
  VertexSet subset;
  int internal = 0;  // δ_{G[A]}(subset)

  bool operator==(const CutCertificate&) const = default;
};

/// Number of G-edges with exactly one endpoint in x ∩ within, restricted to G[within].
int cut_size_within(const Graph& g, const VertexSet& x, const VertexSet& within);
/// δ_G(x)
int cut_size(const Graph& g, const VertexSet& x);

/// t-MaxCut (or max tracking when t < 0).
class MaxCutProblem {
 public:
  using Certificate = CutCertificate;

  explicit MaxCutProblem(int t = -1) : t_(t) {}

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
  int t_;
};

struct MaxCutResult {
  int value = 0;
  VertexSet witness;
};

MaxCutResult solve_maxcut(const Graph& g, const RootedBranchDecomposition& rbd);
/// Decision version; true iff some cut has at least t edges.
bool decide_maxcut(const Graph& g, const RootedBranchDecomposition& rbd, int t);

}  // namespace smw
