#include <gtest/gtest.h>

#include "smw/errors.hpp"
#include "smw/corpus.hpp"
#include "smw/eds.hpp"
#include "smw/families.hpp"
#include "smw/oracles.hpp"
#include "smw/pipeline.hpp"
#include "test_support.hpp"

using namespace smw;

namespace {

EdsResult solve(const Graph& g) {
  return solve_eds(g, root_decomposition(compute_sm_decomposition(g).bd));
}

}  // namespace

TEST(SpanningEdges, Examples) {
  EXPECT_EQ(min_spanning_edge_set(corpus::k13(), {1, 2, 3}).size(), 3u);
  EXPECT_EQ(min_spanning_edge_set(corpus::path(3), {0, 1, 2}).size(), 2u);
  EXPECT_EQ(min_spanning_edge_set(corpus::p4(), {0, 1, 2, 3}).size(), 2u);
  EXPECT_TRUE(min_spanning_edge_set(corpus::p4(), {}).empty());
  Graph isolated = Graph::from_edges(3, {{0, 1}});
  EXPECT_THROW(min_spanning_edge_set(isolated, {2}), DomainError);
}

TEST(SpanningEdges, CrossingSpan) {
  Graph c4 = corpus::c4();
  auto span = min_crossing_span(c4, {0, 1}, {0}, {1});
  ASSERT_TRUE(span);
  EXPECT_EQ(*span, (std::vector<Edge>{Edge(0, 1)}));
  EXPECT_FALSE(min_crossing_span(c4, {0}, {0}, {2}));
  EXPECT_EQ(min_crossing_span(corpus::k13(), {1, 2, 3}, {0}, {1, 2, 3})->size(), 3u);
}

TEST(SpanningEdges, AgreesWithExhaustiveSearch) {
  Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_connected_graph(6, 0.4, rng);
    VertexSet a;
    for (Vertex v = 0; v < 6; ++v)
      if (rng() % 2) a.insert(v);
    std::size_t best = g.edges().size() + 1;
    for (std::uint64_t mask = 0; mask < (1ull << g.edges().size()); ++mask) {
      VertexSet covered;
      std::size_t count = 0;
      for (std::size_t i = 0; i < g.edges().size(); ++i)
        if (mask >> i & 1) {
          covered.insert(g.edges()[i].u);
          covered.insert(g.edges()[i].v);
          ++count;
        }
      if (a.is_subset_of(covered)) best = std::min(best, count);
    }
    EXPECT_EQ(min_spanning_edge_set(g, a).size(), best);
  }
}

TEST(JoinEds, AdjacentLeavesIncludeTheEdge) {
  Graph c4 = corpus::c4();
  EdsProblem p;
  auto s0 = p.initialize_leaf(fixture::leaf_context(c4, 0), 0);
  auto s1 = p.initialize_leaf(fixture::leaf_context(c4, 1), 1);
  NodeContext ctx = fixture::join_context(c4, {0}, {1});
  auto out = p.join(ctx, s0, s1);
  EXPECT_TRUE(fixture::contains(out, EdsCertificate{{0, 1}, {Edge(0, 1)}}));
  auto big = brute_conc_sets(p, c4, ctx.a1, s0, ctx.a2, s1);
  EXPECT_TRUE(check_preserves(p, c4, ctx.a, out, big));
}

TEST(JoinEds, LocalCorrectness) {
  Graph p4 = corpus::p4();
  EXPECT_TRUE(locally_correct(p4, {0, 1}, EdsCertificate{{1}, {}}));
  EXPECT_FALSE(locally_correct(p4, {0, 1}, EdsCertificate{{0}, {}}));
  EXPECT_TRUE(locally_correct(p4, {0, 1}, EdsCertificate{{0, 1}, {Edge(0, 1)}}));
}

TEST(SolveEds, KnownValues) {
  EXPECT_EQ(solve(corpus::k13()).size, 1);
  EXPECT_EQ(solve(corpus::c4()).size, 2);
  EXPECT_EQ(solve(corpus::c5()).size, 2);
  EXPECT_EQ(solve(corpus::p4()).size, 1);
  EXPECT_EQ(solve(corpus::cycle(6)).size, 2);
  EdsResult tt = solve(corpus::tt());
  EXPECT_EQ(tt.size, oracle_eds(corpus::tt()));
  EXPECT_TRUE(is_edge_dominating(corpus::tt(), tt.edges));
}

TEST(SolveEds, DecisionVersion) {
  Graph c5 = corpus::c5();
  RootedBranchDecomposition rbd = root_decomposition(compute_sm_decomposition(c5).bd);
  EXPECT_TRUE(decide_eds(c5, rbd, 2));
  EXPECT_FALSE(decide_eds(c5, rbd, 1));
}
