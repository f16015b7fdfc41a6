#include <gtest/gtest.h>

#include "smw/errors.hpp"
#include "smw/coloring.hpp"
#include "smw/corpus.hpp"
#include "smw/pipeline.hpp"
#include "test_support.hpp"

using namespace smw;

namespace {

ColoringResult solve(const Graph& g) {
  return solve_chromatic(g, root_decomposition(compute_sm_decomposition(g).bd));
}

}  // namespace

TEST(Partitions, MergeAcrossSides) {
  Graph p4 = corpus::p4();
  auto merged = merge_partitions(p4, canonical({{0}, {1}}), canonical({{2}, {3}}), 2);
  ASSERT_TRUE(merged);
  EXPECT_EQ(*merged, canonical({{0, 2}, {1, 3}}));
}

TEST(Partitions, MergeRespectsColourBound) {
  Graph k2 = corpus::k2();
  EXPECT_FALSE(merge_partitions(k2, canonical({{0}}), canonical({{1}}), 1));
  EXPECT_TRUE(merge_partitions(k2, canonical({{0}}), canonical({{1}}), 2));
}

TEST(Partitions, SharedElementsCombine) {
  Graph g = Graph::from_edges(4, {{0, 3}});
  auto merged = merge_partitions(g, canonical({{0, 1}}), canonical({{1, 2}, {3}}), 2);
  ASSERT_TRUE(merged);
  EXPECT_EQ(*merged, canonical({{0, 1, 2}, {3}}));
  EXPECT_FALSE(merge_partitions(g, canonical({{1, 2}}), canonical({{1}, {2}}), 3));
}

TEST(Partitions, CountOfSetPartitions) {
  int bell = 0;
  for_each_set_partition({0, 1, 2, 3}, 4, [&](const Partition&) { ++bell; });
  EXPECT_EQ(bell, 15);
  int two = 0;
  for_each_set_partition({0, 1, 2, 3}, 2, [&](const Partition&) { ++two; });
  EXPECT_EQ(two, 8);
}

TEST(Partitions, RestrictDropsEmptyBlocks) {
  EXPECT_EQ(restrict_partition(canonical({{0, 1}, {2}}), {0, 1}), canonical({{0, 1}}));
}

TEST(JoinColoring, AdjacentLeavesStayApart) {
  Graph k2 = corpus::k2();
  ColoringProblem p(2);
  auto s0 = p.initialize_leaf(fixture::leaf_context(k2, 0), 0);
  auto s1 = p.initialize_leaf(fixture::leaf_context(k2, 1), 1);
  auto out = p.join(fixture::join_context(k2, {0}, {1}), s0, s1);
  EXPECT_TRUE(fixture::contains(out, canonical({{0}, {1}})));
  EXPECT_FALSE(fixture::contains(out, canonical({{0, 1}})));
}

TEST(JoinColoring, PreservesOnC4) {
  Graph c4 = corpus::c4();
  ColoringProblem p(2);
  NodeContext ctx = fixture::join_context(c4, {0, 1}, {2});
  auto left = p.enumerate(c4, ctx.a1);
  auto right = p.enumerate(c4, ctx.a2);
  auto out = p.join(ctx, left, right);
  auto big = brute_conc_sets(p, c4, ctx.a1, left, ctx.a2, right);
  EXPECT_TRUE(check_preserves(p, c4, ctx.a, out, big));
}

TEST(SolveColoring, KnownValues) {
  EXPECT_EQ(solve(corpus::c5()).colors, 3);
  EXPECT_EQ(solve(corpus::k4()).colors, 4);
  EXPECT_EQ(solve(corpus::p4()).colors, 2);
  EXPECT_EQ(solve(corpus::tt()).colors, 3);
  ColoringResult c5 = solve(corpus::c5());
  EXPECT_TRUE(all_independent(corpus::c5(), c5.witness));
  EXPECT_EQ(c5.witness.ground(), corpus::c5().vertices());
}

TEST(SolveColoring, DecisionVersion) {
  Graph c4 = corpus::c4();
  RootedBranchDecomposition rbd = root_decomposition(compute_sm_decomposition(c4).bd);
  EXPECT_TRUE(decide_coloring(c4, rbd, 2));
  EXPECT_FALSE(decide_coloring(c4, rbd, 1));
}
