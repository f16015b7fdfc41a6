#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace smw {

/// Outcome of one property suite.
struct CheckResult {
  std::string suite;
  long cases = 0;
  long violations = 0;
  /// First violating graph and what went wrong; empty when passed.
  std::string counterexample;
  /// One-line summary of what was measured.
  std::string detail;
  double seconds = 0;

  bool passed() const { return violations == 0; }
};

/// mm(A) + mm(B) >= mm(A ∪ B) + mm(A ∩ B) on random (G, A, B).
CheckResult check_submodularity(std::uint64_t seed, int trials = 10000, int n_max = 10);

/// Matching size equals cover size and the cover is valid, over every cut
/// of every connected graph up to n_max.
CheckResult check_koenig(int n_max = 6);

/// Full recomposition round trip and split-freeness of primes with at
/// least 4 vertices.
CheckResult check_split_roundtrip(std::uint64_t seed, int n_all = 7, int random = 500,
                                  int n_random_max = 12);

/// Pipeline sm-width against 54 (smw + 1)^2 on every connected graph up to
/// n_all and on random graphs up to n_random_max; width exactly 1 on
/// distance-hereditary instances; at most tc on twin-cover instances.
CheckResult check_widths(std::uint64_t seed, int n_all = 8, int random = 200,
                         int n_random_max = 10);

/// Exhaustive width values of C5, K4 and P4.
CheckResult check_exact_spots();

/// Every solver over pipeline decompositions against the exhaustive oracles.
CheckResult check_solvers(std::uint64_t seed, int n_all = 6, int n_all_no_eds = 7,
                          int eds_random = 200);

/// Certificate-set sizes at every join stay within the proven ceilings.
CheckResult check_ceilings(std::uint64_t seed, int n_all = 6, int random = 100);

/// Join output preserves brute-force concatenation at every inner node.
CheckResult check_preservation(std::uint64_t seed, int per_problem = 100, int n_max = 6);

/// (tw + 1) / 3 <= mmw <= tw + 1 and smw <= tw + 1 on known-treewidth families.
CheckResult check_sandwich(std::uint64_t seed, int n_max = 7);

/// Names accepted by run_check: submodularity, koenig, split, widths,
/// spots, solvers, ceilings, preserves, sandwich.
std::vector<std::string> check_names();
/// Runs a suite with its default sizes. Throws DomainError for unknown names.
CheckResult run_check(const std::string& name, std::uint64_t seed);

}  // namespace smw
