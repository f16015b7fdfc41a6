#include <gtest/gtest.h>

#include <algorithm>

#include "smw/errors.hpp"
#include "smw/branch_decomposition.hpp"
#include "smw/corpus.hpp"

using namespace smw;

TEST(InducedCuts, CaterpillarOfK4) {
  BranchDecomposition bd = BranchDecomposition::caterpillar({0, 1, 2, 3});
  std::vector<VertexSet> cuts = induced_cuts(bd);
  std::vector<VertexSet> expected{{0}, {1}, {2}, {3}, {0, 1}};
  EXPECT_EQ(cuts, expected);
  EXPECT_EQ(cuts.size(), bd.edges().size());
}

TEST(InducedCuts, TwoLeaves) {
  BranchDecomposition bd = BranchDecomposition::star({0, 1});
  EXPECT_EQ(induced_cuts(bd), (std::vector<VertexSet>{{0}}));
}

TEST(FWidth, CaterpillarOfK4) {
  BranchDecomposition bd = BranchDecomposition::caterpillar({0, 1, 2, 3});
  EXPECT_EQ(f_width(bd, corpus::k4(), CutFunction::sm).width, 1);
  EXPECT_EQ(f_width(bd, corpus::k4(), CutFunction::mm).width, 2);
  BranchDecomposition k2 = BranchDecomposition::star({0, 1});
  EXPECT_EQ(f_width(k2, corpus::k2(), CutFunction::sm).width, 1);
  EXPECT_EQ(f_width(k2, corpus::k2(), CutFunction::mm).width, 1);
}

TEST(Validate, RejectsUnlabelledLeaves) {
  BranchDecomposition bd = BranchDecomposition::caterpillar({0, 1, 2});
  int dangling = bd.add_node();
  bd.add_edge(dangling, bd.leaf_of(0) == 0 ? 1 : 0);
  EXPECT_THROW(bd.validate(), InvariantError);
}

TEST(Rooting, PreservesCuts) {
  BranchDecomposition bd = BranchDecomposition::caterpillar({0, 1, 2, 3, 4});
  RootedBranchDecomposition r = root_decomposition(bd);
  std::vector<VertexSet> rooted;
  for (const VertexSet& s : r.cuts()) rooted.push_back(normalise_cut(s, bd.vertices()));
  std::sort(rooted.begin(), rooted.end());
  rooted.erase(std::unique(rooted.begin(), rooted.end()), rooted.end());
  std::vector<VertexSet> unrooted = induced_cuts(bd);
  std::sort(unrooted.begin(), unrooted.end());
  EXPECT_EQ(rooted, unrooted);
}

TEST(Rooting, TwoLeavesAndCaterpillarOfC4) {
  RootedBranchDecomposition k2 = root_decomposition(BranchDecomposition::star({0, 1}));
  const RootedNode& root = k2.nodes[k2.root];
  ASSERT_FALSE(root.is_leaf());
  EXPECT_TRUE(k2.nodes[root.left].is_leaf());
  EXPECT_TRUE(k2.nodes[root.right].is_leaf());

  RootedBranchDecomposition c4 = root_decomposition(BranchDecomposition::caterpillar({0, 1, 2, 3}));
  EXPECT_EQ(c4.nodes[c4.root].vertices, corpus::c4().vertices());
  for (const RootedNode& n : c4.nodes) {
    if (!n.is_leaf()) {
      EXPECT_EQ(n.vertices, c4.nodes[n.left].vertices | c4.nodes[n.right].vertices);
    }
  }
}

TEST(Rooting, SingleLeaf) {
  RootedBranchDecomposition r = root_decomposition(BranchDecomposition::single_leaf(3));
  ASSERT_EQ(r.nodes.size(), 1u);
  EXPECT_TRUE(r.nodes[r.root].is_leaf());
  EXPECT_EQ(r.nodes[r.root].leaf, 3);
}
