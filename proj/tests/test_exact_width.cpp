#include <gtest/gtest.h>

#include "smw/corpus.hpp"
#include "smw/errors.hpp"
#include "smw/exact_width.hpp"
#include "smw/graph_enumeration.hpp"

using namespace smw;

TEST(ExactWidth, SpotValues) {
  EXPECT_EQ(exact_smw(corpus::c5()), 2);
  EXPECT_EQ(exact_smw(corpus::k4()), 1);
  EXPECT_EQ(exact_smw(corpus::p4()), 1);
  EXPECT_EQ(exact_mmw(corpus::k4()), 2);
}

TEST(ExactWidth, DecompositionAchievesReportedWidth) {
  for (const Graph& g : connected_graphs(6)) {
    DecompositionResult r = exact_branch_decomposition(g, CutFunction::sm);
    r.bd.validate(g.vertices());
    EXPECT_EQ(f_width(r.bd, g, CutFunction::sm).width, r.report.width);
  }
}

TEST(ExactWidth, SubsetDpAgreesWithTreeEnumeration) {
  for (const Graph& g : connected_graphs_up_to(6)) {
    if (g.order() < 2) continue;
    EXPECT_EQ(exact_smw(g), enumerate_optimal_width(g, CutFunction::sm)) << g.to_string();
    EXPECT_EQ(exact_mmw(g), enumerate_optimal_width(g, CutFunction::mm)) << g.to_string();
  }
}

TEST(ExactWidth, CubicTreeCount) {
  long count = 0;
  for_each_cubic_tree(corpus::complete(6), [&](const BranchDecomposition&) { ++count; });
  EXPECT_EQ(count, 105);  // (2*6-5)!!
}

TEST(ExactWidth, RefusesAboveLimit) {
  EXPECT_THROW(exact_smw(corpus::cycle(9)), RefusalError);
  EXPECT_NO_THROW(exact_smw(corpus::cycle(9), 9));
}

TEST(ApproxMm, CycleAgainstThreshold) {
  PrimeDecomposition ok = approx_mm_branch_decomposition(corpus::c5(), 2, Backend::exact);
  EXPECT_EQ(ok.result.report.width, 2);
  EXPECT_FALSE(ok.too_wide);
  PrimeDecomposition wide = approx_mm_branch_decomposition(corpus::c5(), 0, Backend::exact);
  EXPECT_TRUE(wide.too_wide);
}

TEST(ApproxMm, TrivialPrimeGetsStar) {
  Graph triangle = corpus::complete(3);
  for (int k : {0, 1, 5}) {
    PrimeDecomposition p = approx_mm_branch_decomposition(triangle, k, Backend::exact);
    EXPECT_LE(p.result.report.width, 1);
    p.result.bd.validate(triangle.vertices());
  }
}

TEST(ApproxMm, ExactBackendRefusesLargePrimes) {
  EXPECT_THROW(approx_mm_branch_decomposition(corpus::cycle(14), 1, Backend::exact, 12),
               RefusalError);
  PrimeDecomposition h = approx_mm_branch_decomposition(corpus::cycle(14), 1, Backend::heuristic, 12);
  h.result.bd.validate(corpus::cycle(14).vertices());
  EXPECT_EQ(h.backend, Backend::heuristic);
}
