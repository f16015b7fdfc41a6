#include <gtest/gtest.h>

#include "smw/errors.hpp"
#include "smw/corpus.hpp"
#include "smw/maxcut.hpp"
#include "smw/pipeline.hpp"
#include "test_support.hpp"

using namespace smw;

namespace {

MaxCutResult solve(const Graph& g) {
  return solve_maxcut(g, root_decomposition(compute_sm_decomposition(g).bd));
}

}  // namespace

TEST(JoinMaxCut, RootOfSingleEdge) {
  Graph k2 = corpus::k2();
  MaxCutProblem p(1);
  auto s0 = p.initialize_leaf(fixture::leaf_context(k2, 0), 0);
  auto s1 = p.initialize_leaf(fixture::leaf_context(k2, 1), 1);
  auto out = p.join(fixture::join_context(k2, {0}, {1}), s0, s1);
  EXPECT_TRUE(fixture::contains(out, CutCertificate{{0}, 1}));
}

TEST(JoinMaxCut, NoCrossingEdgesKeepsOneCertificate) {
  // The whole graph as A: empty cover, one argmax.
  Graph p4 = corpus::p4();
  MaxCutProblem p;
  auto left = p.enumerate(p4, {0, 1});
  auto right = p.enumerate(p4, {2, 3});
  auto out = p.join(fixture::join_context(p4, {0, 1}, {2, 3}), left, right);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].internal, 3);
}

TEST(JoinMaxCut, NonSplitCutOfC4) {
  Graph c4 = corpus::c4();
  MaxCutProblem p;
  auto s0 = p.initialize_leaf(fixture::leaf_context(c4, 0), 0);
  auto s1 = p.initialize_leaf(fixture::leaf_context(c4, 1), 1);
  NodeContext ctx = fixture::join_context(c4, {0}, {1});
  auto out = p.join(ctx, s0, s1);
  EXPECT_LE(out.size(), 4u);
  auto big = brute_conc_sets(p, c4, ctx.a1, s0, ctx.a2, s1);
  EXPECT_TRUE(check_preserves(p, c4, ctx.a, out, big));
}

TEST(JoinMaxCut, CoverOutsideTheSide) {
  // Cut {1,2,3} of a spider: the cover is the outside vertex 0.
  Graph g = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 3}});
  MaxCutProblem p;
  NodeContext ctx = fixture::join_context(g, {1, 3}, {2});
  auto left = p.enumerate(g, {1, 3});
  auto right = p.enumerate(g, {2});
  auto out = p.join(ctx, left, right);
  auto big = brute_conc_sets(p, g, ctx.a1, left, ctx.a2, right);
  EXPECT_TRUE(check_preserves(p, g, ctx.a, out, big));
}

TEST(SolveMaxCut, KnownValues) {
  EXPECT_EQ(solve(corpus::c5()).value, 4);
  EXPECT_EQ(solve(corpus::k4()).value, 4);
  EXPECT_EQ(solve(corpus::k2()).value, 1);
  EXPECT_EQ(solve(corpus::tt()).value, 5);
  MaxCutResult r = solve(corpus::c5());
  EXPECT_EQ(cut_size(corpus::c5(), r.witness), 4);
}

TEST(SolveMaxCut, DecisionVersion) {
  Graph c5 = corpus::c5();
  RootedBranchDecomposition rbd = root_decomposition(compute_sm_decomposition(c5).bd);
  EXPECT_TRUE(decide_maxcut(c5, rbd, 4));
  EXPECT_FALSE(decide_maxcut(c5, rbd, 5));
}
