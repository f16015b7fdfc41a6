#include <gtest/gtest.h>

#include "smw/corpus.hpp"
#include "smw/errors.hpp"
#include "smw/graph.hpp"
#include "smw/graph_io.hpp"

using namespace smw;

TEST(VertexSet, OrderingIsLexicographicOnElements) {
  EXPECT_LT((VertexSet{0, 1}), (VertexSet{0, 1, 2}));
  EXPECT_LT((VertexSet{0, 1, 2}), (VertexSet{0, 2}));
  EXPECT_LT((VertexSet{0, 2}), (VertexSet{1}));
}

TEST(VertexSet, SetAlgebra) {
  VertexSet a{1, 2, 3};
  VertexSet b{3, 4};
  EXPECT_EQ(a | b, (VertexSet{1, 2, 3, 4}));
  EXPECT_EQ(a & b, (VertexSet{3}));
  EXPECT_EQ(a - b, (VertexSet{1, 2}));
  EXPECT_TRUE((VertexSet{1, 2}).is_subset_of(a));
  EXPECT_EQ(a.min(), 1);
  EXPECT_EQ(a.max(), 3);
  EXPECT_EQ(VertexSet{}.max(), -1);
  EXPECT_EQ(a.to_string(), "{1,2,3}");
  VertexSet high{200};
  EXPECT_TRUE(high.contains(200));
  EXPECT_EQ(high.size(), 1);
}

TEST(GraphIo, ParsesEdgeLists) {
  Graph k2 = parse_edge_list("2 1\n0 1");
  EXPECT_EQ(k2, corpus::k2());
  Graph c4 = parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0");
  EXPECT_EQ(c4, corpus::c4());
}

TEST(GraphIo, RejectsDuplicateEdgeWithLine) {
  try {
    parse_edge_list("3 3\n0 1\n1 2\n1 2");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
  }
}

TEST(GraphIo, ParsesDimacs) {
  Graph g = parse_graph("c five-cycle\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");
  EXPECT_EQ(g, corpus::c5());
}

TEST(GraphIo, EdgeListRoundTrip) {
  Graph tt = corpus::tt();
  EXPECT_EQ(parse_edge_list(to_edge_list(tt)), tt);
}

TEST(GraphOps, InducedSubgraph) {
  Graph p = induced_subgraph(corpus::c5(), {0, 1, 2});
  EXPECT_EQ(p.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
  EXPECT_EQ(induced_subgraph(corpus::c5(), {}).order(), 0);
  Graph e = induced_subgraph(corpus::k4(), {1, 3});
  EXPECT_EQ(e.edges(), (std::vector<Edge>{{1, 3}}));
}

TEST(GraphOps, BipartiteCutGraph) {
  Graph b = bipartite_cut_graph(corpus::c4(), {0, 1});
  EXPECT_EQ(b.edges(), (std::vector<Edge>{{0, 3}, {1, 2}}));
  EXPECT_EQ(bipartite_cut_graph(corpus::k4(), {0, 1}).size(), 4);
  EXPECT_EQ(bipartite_cut_graph(corpus::c5(), corpus::c5().vertices()).size(), 0);
}

TEST(GraphOps, Neighborhood) {
  EXPECT_EQ(neighborhood(corpus::k13(), {1}), (VertexSet{0}));
  EXPECT_EQ(neighborhood(corpus::tt(), {0, 1, 2}), (VertexSet{3}));
  Graph tt = corpus::tt();
  EXPECT_TRUE(neighborhood(tt, tt.vertices()).empty());
}

TEST(GraphOps, GraphSum) {
  Graph p4 = corpus::p4();
  EXPECT_EQ(graph_sum(p4, Graph()), p4);
  Graph k2 = graph_sum(graph_from_vertices({0, 1}), graph_from_edges({{0, 1}}));
  EXPECT_EQ(k2, corpus::k2());
  Graph path = graph_sum(graph_from_edges({{0, 1}}), graph_from_edges({{1, 2}}));
  EXPECT_EQ(path, corpus::path(3));
}

TEST(GraphOps, RejectsSelfLoops) {
  EXPECT_THROW(Graph::from_edges(2, {{1, 1}}), DomainError);
}

TEST(GraphOps, Components) {
  Graph g = Graph::from_edges(5, {{0, 1}, {2, 3}});
  EXPECT_FALSE(is_connected(g));
  EXPECT_EQ(connected_components(g).size(), 3u);
  EXPECT_TRUE(is_connected(corpus::c5()));
}
