#include <gtest/gtest.h>

#include "smw/corpus.hpp"
#include "smw/errors.hpp"
#include "smw/families.hpp"
#include "smw/pipeline.hpp"

using namespace smw;

namespace {

/// C5 with vertices 0 and 1 each blown up into three false twins.
Graph blown_up_cycle() {
  std::vector<std::pair<Vertex, Vertex>> edges;
  const std::vector<Vertex> t0{0, 5, 6};
  const std::vector<Vertex> t1{1, 7, 8};
  for (Vertex a : t0)
    for (Vertex b : t1) edges.emplace_back(a, b);
  for (Vertex b : t1) edges.emplace_back(b, 2);
  edges.emplace_back(2, 3);
  edges.emplace_back(3, 4);
  for (Vertex a : t0) edges.emplace_back(4, a);
  return Graph::from_edges(9, edges);
}

bool siblings(const BranchDecomposition& bd, Vertex a, Vertex b) {
  int la = bd.leaf_of(a);
  int lb = bd.leaf_of(b);
  if (bd.neighbors(la).front() == lb) return true;
  return bd.neighbors(la).front() == bd.neighbors(lb).front();
}

}  // namespace

TEST(HeavyPairs, NoneOnCycleAtSmallK) {
  SplitDecomposition sd = split_decompose(corpus::c5());
  EXPECT_TRUE(heavy_pairs(sd, 0, 1).empty());
  EXPECT_TRUE(heavy_pairs(sd, 0, 3).empty());
}

TEST(HeavyPairs, AdjacentBlownUpMarkers) {
  Graph g = blown_up_cycle();
  SplitDecomposition sd = split_decompose(g);
  int core = -1;
  for (int i = 0; i < sd.prime_count(); ++i)
    if (sd.primes()[i].order() == 5) core = i;
  ASSERT_GE(core, 0);
  std::vector<HeavyPair> heavy = heavy_pairs(sd, core, 1);
  ASSERT_EQ(heavy.size(), 1u);
  EXPECT_TRUE(sd.is_marker(heavy[0].a));
  EXPECT_TRUE(sd.is_marker(heavy[0].b));
  EXPECT_TRUE(is_matching(heavy));
  EXPECT_TRUE(heavy_pairs(sd, core, 2).empty());
}

TEST(Restructure, IdentityWithoutHeavyPairs) {
  BranchDecomposition bd = BranchDecomposition::caterpillar({0, 1, 2, 3, 4});
  EXPECT_EQ(induced_cuts(restructure_heavy(bd, {})), induced_cuts(bd));
}

TEST(Restructure, SiblingsUnchanged) {
  BranchDecomposition bd = BranchDecomposition::caterpillar({0, 1, 2, 3, 4});
  EXPECT_EQ(induced_cuts(restructure_heavy(bd, {{0, 1, 1}})), induced_cuts(bd));
}

TEST(Restructure, MovesFarEndNextToPartner) {
  BranchDecomposition bd = BranchDecomposition::caterpillar({0, 1, 2, 3, 4, 5});
  ASSERT_FALSE(siblings(bd, 0, 5));
  BranchDecomposition out = restructure_heavy(bd, {{0, 5, 1}});
  out.validate(bd.vertices());
  EXPECT_TRUE(siblings(out, 0, 5));
}

TEST(Restructure, RejectsNonMatching) {
  BranchDecomposition bd = BranchDecomposition::caterpillar({0, 1, 2, 3});
  EXPECT_THROW(restructure_heavy(bd, {{0, 1, 1}, {1, 2, 1}}), InvariantError);
}

TEST(Merge, SinglePrimeIsIdentity) {
  SplitDecomposition sd = split_decompose(corpus::c5());
  BranchDecomposition bd = BranchDecomposition::caterpillar({0, 1, 2, 3, 4});
  EXPECT_EQ(induced_cuts(merge_decompositions(sd, {bd})), induced_cuts(bd));
}

TEST(Merge, TrianglesOfTwoTriangles) {
  SplitDecomposition sd = split_decompose(corpus::tt());
  std::vector<BranchDecomposition> stars;
  for (const Graph& p : sd.primes()) stars.push_back(BranchDecomposition::star(p.vertices()));
  BranchDecomposition merged = merge_decompositions(sd, stars);
  merged.validate(corpus::tt().vertices());
  EXPECT_EQ(f_width(merged, corpus::tt(), CutFunction::sm).width, 1);
}

TEST(Pipeline, SmallGraphs) {
  EXPECT_EQ(compute_sm_decomposition(corpus::c5()).report.width, 2);
  EXPECT_EQ(compute_sm_decomposition(corpus::p4()).report.width, 1);
  EXPECT_EQ(compute_sm_decomposition(corpus::k4()).report.width, 1);
  EXPECT_EQ(compute_sm_decomposition(corpus::tt()).report.width, 1);
  EXPECT_EQ(compute_sm_decomposition(corpus::k13()).report.width, 1);
}

TEST(Pipeline, TreesStayWithinTreewidthBound) {
  Rng rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    Graph tree = random_tree(10, rng);
    PipelineResult r = compute_sm_decomposition(tree);
    EXPECT_LE(r.report.width, 2) << tree.to_string();
    EXPECT_TRUE(r.certified());
  }
}

TEST(Pipeline, BlownUpCycleRestructures) {
  Graph g = blown_up_cycle();
  PipelineResult r = compute_sm_decomposition(g);
  r.bd.validate(g.vertices());
  EXPECT_EQ(r.report.width, f_width(r.bd, g, CutFunction::sm).width);
  EXPECT_LE(r.report.width, 2);
}

TEST(Pipeline, DisconnectedGraphs) {
  Graph g = Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 6}});
  PipelineResult r = compute_sm_decomposition(g);
  r.bd.validate(g.vertices());
  EXPECT_EQ(r.report.width, 2);
}

TEST(Pipeline, RefusesLargePrimeWithoutHeuristic) {
  try {
    compute_sm_decomposition(corpus::cycle(14));
    FAIL() << "expected a refusal";
  } catch (const RefusalError& e) {
    EXPECT_NE(std::string(e.what()).find("prime"), std::string::npos);
  }
  PipelineOptions opts;
  opts.heuristic = true;
  PipelineResult r = compute_sm_decomposition(corpus::cycle(14), opts);
  EXPECT_FALSE(r.certified());
  r.bd.validate(corpus::cycle(14).vertices());
}
