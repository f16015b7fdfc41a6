#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "smw/checks.hpp"

using namespace smw;

namespace {

constexpr std::uint64_t kSeed = 20240611;

struct Criterion {
  const char* label;
  std::function<CheckResult()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"submodularity of mm", [] { return check_submodularity(kSeed); }},
      {"koenig matching = cover", [] { return check_koenig(); }},
      {"split decomposition round trip", [] { return check_split_roundtrip(kSeed); }},
      {"pipeline width bound", [] { return check_widths(kSeed); }},
      {"exact width spot values", [] { return check_exact_spots(); }},
      {"solver correctness", [] { return check_solvers(kSeed); }},
      {"join preservation", [] { return check_preservation(kSeed); }},
      {"certificate set ceilings", [] { return check_ceilings(kSeed); }},
      {"treewidth sandwich", [] { return check_sandwich(kSeed); }},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    try {
      CheckResult r = c.run();
      std::printf("%s %-32s cases=%ld violations=%ld %.1fs  %s\n", r.passed() ? "PASS" : "FAIL",
                  c.label, r.cases, r.violations, r.seconds, r.detail.c_str());
      if (!r.passed()) {
        ++failures;
        std::printf("     counterexample: %s\n", r.counterexample.c_str());
      }
    } catch (const std::exception& e) {
      ++failures;
      std::printf("FAIL %-32s error: %s\n", c.label, e.what());
    }
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
