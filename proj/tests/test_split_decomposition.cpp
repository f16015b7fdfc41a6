#include <gtest/gtest.h>

#include "smw/errors.hpp"
#include "smw/corpus.hpp"
#include "smw/graph_enumeration.hpp"
#include "smw/cut_functions.hpp"
#include "smw/split_decomposition.hpp"

using namespace smw;

TEST(FindSplit, PrimeAndSplitExamples) {
  EXPECT_FALSE(find_split(corpus::c5()).has_value());
  auto p4 = find_split(corpus::p4());
  ASSERT_TRUE(p4.has_value());
  EXPECT_EQ(p4->v1, (VertexSet{0, 1}));
  EXPECT_EQ(p4->v2, (VertexSet{2, 3}));
  auto tt = find_split(corpus::tt());
  ASSERT_TRUE(tt.has_value());
  EXPECT_EQ(tt->v1, (VertexSet{0, 1, 2}));
  EXPECT_EQ(tt->v2, (VertexSet{3, 4, 5}));
}

TEST(FindSplit, AgreesWithBruteForceOnExistence) {
  for (const Graph& g : connected_graphs_up_to(7)) {
    if (g.order() < 4) continue;
    auto fast = find_split(g);
    auto slow = find_split_bruteforce(g);
    ASSERT_EQ(fast.has_value(), slow.has_value()) << g.to_string();
    if (fast) {
      EXPECT_TRUE(is_split_cut(g, fast->v1)) << g.to_string();
    }
  }
}

TEST(DecomposeOnce, TwoTriangles) {
  auto [g1, g2] = decompose_once(corpus::tt(), {{0, 1, 2}, {3, 4, 5}}, 6);
  EXPECT_EQ(g1, Graph({0, 1, 2, 6}, {{0, 1}, {0, 2}, {1, 2}, {2, 6}}));
  EXPECT_EQ(g2, Graph({3, 4, 5, 6}, {{3, 4}, {3, 5}, {4, 5}, {3, 6}}));
  EXPECT_EQ(recompose(g1, g2, 6), corpus::tt());
}

TEST(DecomposeOnce, PathOfFour) {
  auto [g1, g2] = decompose_once(corpus::p4(), {{0, 1}, {2, 3}}, 4);
  EXPECT_EQ(g1, Graph({0, 1, 4}, {{0, 1}, {1, 4}}));
  EXPECT_EQ(g2, Graph({2, 3, 4}, {{2, 4}, {2, 3}}));
  EXPECT_EQ(recompose(g1, g2, 4), corpus::p4());
}

TEST(SplitDecompose, PrimeCycleStaysWhole) {
  SplitDecomposition sd = split_decompose(corpus::c5());
  ASSERT_EQ(sd.prime_count(), 1);
  EXPECT_EQ(sd.primes()[0], corpus::c5());
}

TEST(SplitDecompose, TotallyDecomposableGraphs) {
  for (const Graph& g : {corpus::tt(), corpus::k4(), corpus::p4()}) {
    SplitDecomposition sd = split_decompose(g);
    EXPECT_GT(sd.prime_count(), 1);
    for (const Graph& prime : sd.primes()) EXPECT_LE(prime.order(), 3) << g.to_string();
    EXPECT_EQ(sd.recompose_all(), g);
  }
}

TEST(SplitDecompose, MarkersStartWhereAsked) {
  SplitDecomposition sd = split_decompose(corpus::p4(), 10);
  ASSERT_EQ(sd.markers().size(), 1u);
  EXPECT_EQ(sd.markers().begin()->first, 10);
}

TEST(SplitDecompose, TotActAndInverseOnOneStep) {
  auto [g1, g2] = decompose_once(corpus::tt(), {{0, 1, 2}, {3, 4, 5}}, 6);
  SplitDecomposition sd(corpus::tt(), {g1, g2});
  int i = sd.primes()[0].has_vertex(0) ? 0 : 1;
  EXPECT_EQ(sd.tot(0, i), (VertexSet{0}));
  EXPECT_EQ(sd.tot(6, i), (VertexSet{3, 4, 5}));
  EXPECT_EQ(sd.act(6, i), (VertexSet{3}));
  EXPECT_EQ(sd.act(2, i), (VertexSet{2}));
  EXPECT_EQ(sd.act(0, i), (VertexSet{0}));
  EXPECT_EQ(sd.tot_inverse({3, 4}, i), (VertexSet{6}));
  EXPECT_EQ(sd.tot_inverse({0}, i), (VertexSet{0}));
  EXPECT_EQ(sd.tot_inverse(corpus::tt().vertices(), i), sd.primes()[i].vertices());
}

TEST(SplitDecompose, TotPartitionsTheVertexSet) {
  for (const Graph& g : connected_graphs(6)) {
    SplitDecomposition sd = split_decompose(g);
    for (int i = 0; i < sd.prime_count(); ++i) {
      VertexSet all;
      for (Vertex v : sd.primes()[i].vertices()) {
        VertexSet t = sd.tot(v, i);
        EXPECT_FALSE(all.intersects(t));
        EXPECT_TRUE(sd.act(v, i).is_subset_of(t));
        all |= t;
      }
      EXPECT_EQ(all, g.vertices());
    }
  }
}
