#pragma once

#include <string>
#include <vector>

#include "smw/graph.hpp"

namespace smw {

enum class Problem { maxcut, hc, chromatic, eds };

const char* to_string(Problem p);
/// Throws DomainError on unknown names.
Problem parse_problem(const std::string& name);

/// Largest order the exhaustive oracles accept.
inline constexpr int kOracleLimit = 8;
inline constexpr int kEdsOracleLimit = 7;

/// Maximum δ(S) over all subsets S.
int oracle_maxcut(const Graph& g);
/// Hamiltonian cycle by subset dynamic programming; needs n >= 3.
bool oracle_hamiltonian(const Graph& g);
/// Chromatic number by subset dynamic programming over independent sets.
int oracle_chromatic(const Graph& g);
/// Minimum edge dominating set by exhaustive search over edge subsets.
int oracle_eds(const Graph& g);

/// Exact answer (hc: 1 for yes, 0 for no). Throws RefusalError above the
/// size limits.
int brute_force_solve(Problem p, const Graph& g);

}  // namespace smw
