#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "smw/branch_decomposition.hpp"

namespace smw {

struct DecompositionResult {
  BranchDecomposition bd;
  WidthReport report;
};

/// Values of f on every cut side of g, indexed by bitmask over the ascending
/// vertex list. n <= 20.
std::vector<int> cut_table(const Graph& g, CutFunction f);

/// Optimal f-width decomposition by subset dynamic programming.
/// Refuses when |V(G)| > n_limit. One vertex gives a single leaf of width 0.
DecompositionResult exact_branch_decomposition(const Graph& g, CutFunction f, int n_limit = 8);

/// Optimal width found by walking all (2n-5)!! leaf-labelled cubic trees.
/// Independent of the subset DP; refuses beyond n = 9.
int enumerate_optimal_width(const Graph& g, CutFunction f);

/// Calls `visit` once per leaf-labelled cubic tree on V(G) (n <= 9).
void for_each_cubic_tree(const Graph& g,
                         const std::function<void(const BranchDecomposition&)>& visit);

/// Greedy recursive bisection; no optimality guarantee.
DecompositionResult heuristic_branch_decomposition(const Graph& g, CutFunction f);

enum class Backend { exact, heuristic };
const char* to_string(Backend b);

struct PrimeDecomposition {
  DecompositionResult result;
  Backend backend = Backend::exact;
  bool too_wide = false;  // width > 3k + 1
};

/// mm-width decomposition of a prime graph measured against 3k + 1.
/// Primes with at most 3 vertices get a star. The exact backend refuses
/// primes above exact_limit.
PrimeDecomposition approx_mm_branch_decomposition(const Graph& prime, int k, Backend backend,
                                                  int exact_limit = 12);

/// min over decompositions of sm-width; n <= 8 by default.
int exact_smw(const Graph& g, int n_limit = 8);
int exact_mmw(const Graph& g, int n_limit = 8);

}  // namespace smw
