#pragma once

#include <map>
#include <vector>

#include "smw/exact_width.hpp"
#include "smw/split_decomposition.hpp"

namespace smw {

struct HeavyPair {
  Vertex a = 0;
  Vertex b = 0;
  int k = 0;

  bool operator==(const HeavyPair&) const = default;
};

/// Adjacent pairs of prime i whose act sets both reach 3k. Trivial primes
/// (at most 3 vertices) have none.
std::vector<HeavyPair> heavy_pairs(const SplitDecomposition& sd, int i, int k);

bool is_matching(const std::vector<HeavyPair>& pairs);

/// Makes every heavy pair a pair of sibling leaves. Throws InvariantError
/// when the pairs do not form a matching.
BranchDecomposition restructure_heavy(const BranchDecomposition& bd,
                                      const std::vector<HeavyPair>& heavy);

/// Glues per-prime decompositions along their shared markers.
BranchDecomposition merge_decompositions(const SplitDecomposition& sd,
                                         const std::vector<BranchDecomposition>& per_prime);

/// Joins decompositions of disjoint vertex sets into one tree.
BranchDecomposition join_components(const std::vector<BranchDecomposition>& parts);

struct PipelineOptions {
  int exact_limit = 12;
  /// Use the heuristic for primes above exact_limit instead of refusing.
  bool heuristic = false;
};

struct PrimeRecord {
  int component = 0;
  int index = 0;
  Graph prime;
  Backend backend = Backend::exact;
  int mm_width = 0;
  BranchDecomposition bd;  // after restructuring
};

struct PipelineResult {
  BranchDecomposition bd;
  WidthReport report;
  int k_used = 0;
  std::vector<PrimeRecord> primes;
  std::vector<HeavyPair> heavy;
  std::vector<SplitDecomposition> split_decompositions;  // one per component

  /// True when every prime was decomposed by the exact backend.
  bool certified() const;
};

/// Split decomposition, per-prime mm-width decompositions, heavy-pair
/// restructuring and marker merging, per connected component.
PipelineResult compute_sm_decomposition(const Graph& g, const PipelineOptions& opts = {});

}  // namespace smw
