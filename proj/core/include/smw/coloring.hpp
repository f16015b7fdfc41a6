#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "smw/dp_framework.hpp"

namespace smw {

/// Partition into at most t colour classes; stored canonically as the
/// sorted list of non-empty blocks.
struct Partition {
  std::vector<VertexSet> blocks;

  VertexSet ground() const;
  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;
};

Partition canonical(std::vector<VertexSet> blocks);
bool is_independent(const Graph& g, const VertexSet& s);
bool all_independent(const Graph& g, const Partition& p);
/// p ∩ a with empty blocks dropped.
Partition restrict_partition(const Partition& p, const VertexSet& a);

/// Merges p and q into at most t independent blocks. Blocks sharing
/// elements are combined first (a block meeting two blocks of the other side
/// fails); the rest are paired by maximum bipartite matching.
std::optional<Partition> merge_partitions(const Graph& g, const Partition& p, const Partition& q,
                                          int t);

/// Every set partition of items into at most max_blocks blocks.
void for_each_set_partition(const std::vector<Vertex>& items, int max_blocks,
                            const std::function<void(const Partition&)>& visit);

class ColoringProblem {
 public:
  using Certificate = Partition;

  explicit ColoringProblem(int t) : t_(t) {}
  int t() const { return t_; }

  std::vector<Certificate> initialize_leaf(const NodeContext& ctx, Vertex v) const;
  std::vector<Certificate> join(const NodeContext& ctx, const std::vector<Certificate>& s1,
                                const std::vector<Certificate>& s2) const;
  std::vector<Certificate> trim(const NodeContext& ctx, std::vector<Certificate> s) const;
  bool verify(const Graph& g, const Certificate& c) const;

  std::vector<Certificate> enumerate(const Graph& g, const VertexSet& x) const;
  std::vector<Certificate> brute_conc(const Graph& g, const VertexSet& a1, const Certificate& x,
                                      const VertexSet& a2, const Certificate& y) const;
  std::optional<long> conc_score(const Graph& g, const Certificate& x,
                                 const Certificate& z) const;

 private:
  int t_;
};

struct ColoringResult {
  int colors = 0;
  Partition witness;
};

ColoringResult solve_chromatic(const Graph& g, const RootedBranchDecomposition& rbd);
bool decide_coloring(const Graph& g, const RootedBranchDecomposition& rbd, int t);

}  // namespace smw
