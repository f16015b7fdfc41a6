#include <gtest/gtest.h>

#include "smw/errors.hpp"
#include "smw/corpus.hpp"
#include "smw/cut_functions.hpp"
#include "smw/graph_enumeration.hpp"
#include "smw/matching.hpp"

using namespace smw;

TEST(Matching, CutMatchingSizes) {
  EXPECT_EQ(max_matching_cut(corpus::c4(), {0, 1}).size(), 2u);
  EXPECT_TRUE(max_matching_cut(corpus::c4(), {}).empty());
  EXPECT_EQ(max_matching_cut(corpus::k4(), {0, 1}).size(), 2u);
}

TEST(Matching, KoenigCovers) {
  Graph c4 = corpus::c4();
  VertexSet cover = koenig_cover(c4, {0, 1}, max_matching_cut(c4, {0, 1}));
  EXPECT_EQ(cover.size(), 2);
  for (const Edge& e : crossing_edges(c4, {0, 1}))
    EXPECT_TRUE(cover.contains(e.u) || cover.contains(e.v));

  Graph star = corpus::k13();
  EXPECT_EQ(koenig_cover(star, {1, 2, 3}, max_matching_cut(star, {1, 2, 3})), (VertexSet{0}));
  EXPECT_TRUE(koenig_cover(c4, {}, {}).empty());
}

TEST(Matching, KoenigRejectsNonMaximumMatching) {
  Graph c4 = corpus::c4();
  EXPECT_THROW(koenig_cover(c4, {0, 1}, {Edge(0, 3)}), DomainError);
}

TEST(Matching, GeneralMatching) {
  EXPECT_EQ(general_max_matching(corpus::c5()).size(), 2u);
  EXPECT_EQ(general_max_matching(corpus::complete(6)).size(), 3u);
}

TEST(Cuts, SplitExamples) {
  EXPECT_TRUE(is_split(corpus::p4(), {0, 1}));
  EXPECT_FALSE(is_split(corpus::c4(), {0, 1}));
  EXPECT_TRUE(is_split(corpus::k4(), {0, 1}));
}

TEST(Cuts, SmValues) {
  EXPECT_EQ(sm_value(corpus::k4(), {0, 1}).sm_value, 1);
  EXPECT_EQ(sm_value(corpus::c4(), {0, 1}).sm_value, 2);
  EXPECT_EQ(sm_value(corpus::c5(), {0}).sm_value, 1);
  EXPECT_EQ(cut_value(corpus::k4(), {0, 1}, CutFunction::mm), 2);
}

TEST(Cuts, SmNeverExceedsMm) {
  for (const Graph& g : connected_graphs_up_to(5)) {
    std::vector<Vertex> vs = g.vertices().to_vector();
    for (std::uint32_t mask = 0; mask < (1u << vs.size()); ++mask) {
      VertexSet a;
      for (std::size_t i = 0; i < vs.size(); ++i)
        if (mask >> i & 1u) a.insert(vs[i]);
      CutEvaluation ev = sm_value(g, a);
      EXPECT_LE(ev.sm_value, std::max(1, ev.mm_value));
      EXPECT_EQ(ev.sm_value, sm_value(g, g.vertices() - a).sm_value) << g.to_string();
    }
  }
}
