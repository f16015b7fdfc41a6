#include <gtest/gtest.h>

#include "smw/errors.hpp"
#include "smw/corpus.hpp"
#include "smw/hamiltonian.hpp"
#include "smw/pipeline.hpp"
#include "test_support.hpp"

using namespace smw;

namespace {

HamiltonianResult solve(const Graph& g) {
  return solve_hamiltonian(g, root_decomposition(compute_sm_decomposition(g).bd));
}

bool is_cycle(const Graph& g, const std::vector<Vertex>& order) {
  if (static_cast<int>(order.size()) != g.order()) return false;
  for (std::size_t i = 0; i < order.size(); ++i)
    if (!g.has_edge(order[i], order[(i + 1) % order.size()])) return false;
  return true;
}

}  // namespace

TEST(PathSystem, Structure) {
  PathSystem ps{{0, 1, 2, 3}, {Edge(0, 1), Edge(1, 2)}};
  auto s = analyse_path_system(ps);
  ASSERT_TRUE(s);
  EXPECT_FALSE(s->cycle);
  ASSERT_EQ(s->paths.size(), 2u);
  EXPECT_EQ(s->paths[0].first, 0);
  EXPECT_EQ(s->paths[0].second, 2);
  EXPECT_EQ(s->paths[1].first, 3);
  EXPECT_EQ(s->paths[1].second, 3);
}

TEST(PathSystem, RejectsBranchingAndShortCycles) {
  EXPECT_FALSE(analyse_path_system({{0, 1, 2, 3}, {Edge(0, 1), Edge(0, 2), Edge(0, 3)}}));
  EXPECT_FALSE(analyse_path_system({{0, 1, 2, 3}, {Edge(0, 1), Edge(1, 2), Edge(0, 2)}}));
  EXPECT_TRUE(analyse_path_system({{0, 1, 2}, {Edge(0, 1), Edge(1, 2), Edge(0, 2)}})->cycle);
}

TEST(PathClasses, SingleVertexOnC4) {
  Graph c4 = corpus::c4();
  auto classes = path_classes(c4, {0}, PathSystem{{0}, {}});
  ASSERT_EQ(classes.size(), 1u);
  EXPECT_EQ(classes[0].first, (VertexSet{1, 3}));
  EXPECT_EQ(classes[0].second, (VertexSet{1, 3}));
}

TEST(JoinHamiltonian, AdjacentLeavesGainTheEdge) {
  Graph c4 = corpus::c4();
  HamiltonianProblem p;
  auto s0 = p.initialize_leaf(fixture::leaf_context(c4, 0), 0);
  auto s1 = p.initialize_leaf(fixture::leaf_context(c4, 1), 1);
  NodeContext ctx = fixture::join_context(c4, {0}, {1});
  auto out = p.join(ctx, s0, s1);
  EXPECT_TRUE(fixture::contains(out, PathSystem{{0, 1}, {Edge(0, 1)}}));
  auto big = brute_conc_sets(p, c4, ctx.a1, s0, ctx.a2, s1);
  EXPECT_TRUE(check_preserves(p, c4, ctx.a, out, big));
}

TEST(SolveHamiltonian, KnownAnswers) {
  HamiltonianResult c5 = solve(corpus::c5());
  EXPECT_TRUE(c5.hamiltonian);
  EXPECT_TRUE(is_cycle(corpus::c5(), c5.cycle));
  EXPECT_FALSE(solve(corpus::p4()).hamiltonian);
  EXPECT_FALSE(solve(corpus::tt()).hamiltonian);
  EXPECT_FALSE(solve(corpus::k2()).hamiltonian);
  HamiltonianResult k4 = solve(corpus::k4());
  EXPECT_TRUE(k4.hamiltonian);
  EXPECT_TRUE(is_cycle(corpus::k4(), k4.cycle));
}
