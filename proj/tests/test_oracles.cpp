#include <gtest/gtest.h>

#include <array>

#include "smw/errors.hpp"
#include "smw/corpus.hpp"
#include "smw/graph_enumeration.hpp"
#include "smw/oracles.hpp"

using namespace smw;

namespace {

// Connected-graph tallies computed with an independent graph atlas.
struct Tally {
  int count;
  int maxcut;
  int hamiltonian;
  int chromatic;
  int eds;  // -1: not tabulated
};

constexpr std::array<Tally, 8> kTallies = {{
    {0, 0, 0, 0, 0},
    {1, 0, 0, 1, 0},
    {1, 1, 0, 2, 1},
    {2, 4, 1, 5, 2},
    {6, 21, 3, 16, 8},
    {21, 104, 8, 63, 36},
    {112, 760, 48, 356, 217},
    {853, 7502, 383, 2908, -1},
}};

}  // namespace

TEST(Enumeration, ConnectedGraphCounts) {
  const std::array<std::size_t, 9> counts = {0, 1, 1, 2, 6, 21, 112, 853, 11117};
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(connected_graphs(n).size(), counts[n]) << "n=" << n;
  EXPECT_EQ(connected_graphs_up_to(4).size(), 10u);
}

TEST(Enumeration, CanonicalCodeIgnoresLabels) {
  Graph a = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  Graph b = Graph::from_edges(4, {{2, 0}, {0, 3}, {3, 1}});
  Graph star = corpus::k13();
  EXPECT_EQ(canonical_code(a), canonical_code(b));
  EXPECT_NE(canonical_code(a), canonical_code(star));
}

TEST(Oracles, AtlasTallies) {
  for (int n = 1; n <= 7; ++n) {
    int maxcut = 0, ham = 0, chrom = 0, eds = 0;
    std::vector<Graph> graphs = connected_graphs(n);
    for (const Graph& g : graphs) {
      maxcut += oracle_maxcut(g);
      ham += oracle_hamiltonian(g) ? 1 : 0;
      chrom += oracle_chromatic(g);
      if (kTallies[n].eds >= 0) eds += oracle_eds(g);
    }
    EXPECT_EQ(static_cast<int>(graphs.size()), kTallies[n].count) << "n=" << n;
    EXPECT_EQ(maxcut, kTallies[n].maxcut) << "n=" << n;
    EXPECT_EQ(ham, kTallies[n].hamiltonian) << "n=" << n;
    EXPECT_EQ(chrom, kTallies[n].chromatic) << "n=" << n;
    if (kTallies[n].eds >= 0) {
      EXPECT_EQ(eds, kTallies[n].eds) << "n=" << n;
    }
  }
}

TEST(Oracles, SmallExamples) {
  EXPECT_EQ(oracle_maxcut(corpus::c5()), 4);
  EXPECT_EQ(oracle_maxcut(corpus::k4()), 4);
  EXPECT_TRUE(oracle_hamiltonian(corpus::c5()));
  EXPECT_FALSE(oracle_hamiltonian(corpus::p4()));
  EXPECT_FALSE(oracle_hamiltonian(corpus::k2()));
  EXPECT_EQ(oracle_chromatic(corpus::c5()), 3);
  EXPECT_EQ(oracle_chromatic(corpus::k4()), 4);
  EXPECT_EQ(oracle_eds(corpus::k13()), 1);
  EXPECT_EQ(oracle_eds(corpus::c5()), 2);
}

TEST(Oracles, Refusals) {
  EXPECT_THROW(brute_force_solve(Problem::maxcut, corpus::cycle(9)), RefusalError);
  EXPECT_THROW(brute_force_solve(Problem::eds, corpus::cycle(8)), RefusalError);
  EXPECT_EQ(brute_force_solve(Problem::hc, corpus::cycle(8)), 1);
}

TEST(Oracles, ProblemNames) {
  for (Problem p : {Problem::maxcut, Problem::hc, Problem::chromatic, Problem::eds})
    EXPECT_EQ(parse_problem(to_string(p)), p);
  EXPECT_THROW(parse_problem("clique"), DomainError);
}
