#include <gtest/gtest.h>

#include "smw/errors.hpp"
#include "smw/coloring.hpp"
#include "smw/corpus.hpp"
#include "smw/hamiltonian.hpp"
#include "smw/maxcut.hpp"
#include "test_support.hpp"

using namespace smw;

namespace {

RootedBranchDecomposition caterpillar_of(const Graph& g) {
  return root_decomposition(BranchDecomposition::caterpillar(g.vertices().to_vector()));
}

}  // namespace

TEST(Recursive, MaxCutOnSingleEdge) {
  Graph k2 = corpus::k2();
  auto trace = recursive_solve(MaxCutProblem(1), k2, caterpillar_of(k2));
  ASSERT_TRUE(trace.accepted());
  EXPECT_EQ(trace.witness->subset, (VertexSet{0}));
  EXPECT_EQ(trace.witness->internal, 1);
}

TEST(Recursive, NoCycleOnTwoVertices) {
  Graph k2 = corpus::k2();
  EXPECT_FALSE(recursive_solve(HamiltonianProblem(), k2, caterpillar_of(k2)).accepted());
}

TEST(Recursive, TwoColouringOfEvenCycle) {
  Graph c4 = corpus::c4();
  EXPECT_TRUE(recursive_solve(ColoringProblem(2), c4, caterpillar_of(c4)).accepted());
  EXPECT_FALSE(recursive_solve(ColoringProblem(1), c4, caterpillar_of(c4)).accepted());
}

TEST(Recursive, RejectsForeignDecomposition) {
  Graph c5 = corpus::c5();
  EXPECT_THROW(recursive_solve(MaxCutProblem(), c5, caterpillar_of(corpus::p4())), DomainError);
}

TEST(Recursive, RecordsOneStatPerNode) {
  Graph c5 = corpus::c5();
  RootedBranchDecomposition rbd = caterpillar_of(c5);
  auto trace = recursive_solve(MaxCutProblem(), c5, rbd);
  EXPECT_EQ(trace.stats.size(), rbd.nodes.size());
}

TEST(Preserves, ReflexiveAndEmpty) {
  Graph c4 = corpus::c4();
  MaxCutProblem p;
  VertexSet a{0, 1};
  std::vector<CutCertificate> all = p.enumerate(c4, a);
  EXPECT_TRUE(check_preserves(p, c4, a, all, all));
  EXPECT_FALSE(check_preserves(p, c4, a, std::vector<CutCertificate>{}, all));
}

TEST(Preserves, RefusesLargeGraphs) {
  Graph c8 = corpus::cycle(8);
  MaxCutProblem p;
  EXPECT_THROW(check_preserves(p, c8, VertexSet{0}, std::vector<CutCertificate>{},
                               std::vector<CutCertificate>{}),
               RefusalError);
}

TEST(Ceiling, ThrowsWhenExceeded) {
  Graph c4 = corpus::c4();
  NodeContext ctx = fixture::join_context(c4, {0}, {1});
  EXPECT_NO_THROW(enforce_ceiling(ctx, 4, 4.0, "test"));
  EXPECT_THROW(enforce_ceiling(ctx, 5, 4.0, "test"), InvariantError);
}

TEST(Boundary, VerticesWithOutsideNeighbours) {
  EXPECT_EQ(boundary_of(corpus::tt(), {0, 1, 2}), (VertexSet{2}));
  EXPECT_EQ(boundary_of(corpus::p4(), {0, 1}), (VertexSet{1}));
}
