#include <gtest/gtest.h>

#include "smw/errors.hpp"
#include "smw/exact_width.hpp"
#include "smw/families.hpp"
#include "smw/split_decomposition.hpp"

using namespace smw;

TEST(Families, DistanceHereditaryPrimesAreSmall) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    FamilyInstance inst = generate_family({FamilyKind::distance_hereditary, 12, 1}, seed);
    SplitDecomposition sd = split_decompose(inst.graph);
    for (const Graph& prime : sd.primes()) EXPECT_LE(prime.order(), 3);
  }
}

TEST(Families, DistanceHereditaryCertificate) {
  FamilyInstance inst = generate_family({FamilyKind::distance_hereditary, 12, 1}, 3);
  ASSERT_TRUE(inst.certificate);
  EXPECT_EQ(f_width(*inst.certificate, inst.graph, CutFunction::sm).width, 1);
  EXPECT_EQ(inst.bound, 1);
}

TEST(Families, TwinCoverCertificate) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    FamilyInstance inst = generate_family({FamilyKind::twin_cover, 10, 2}, seed);
    ASSERT_TRUE(inst.certificate);
    EXPECT_LE(inst.twin_cover.size(), 2);
    EXPECT_LE(f_width(*inst.certificate, inst.graph, CutFunction::sm).width, 2);
  }
}

TEST(Families, GluedWidth) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    FamilyInstance inst = generate_family({FamilyKind::glued, 8, 2}, seed);
    EXPECT_EQ(inst.graph.order(), 8);
    EXPECT_LE(exact_smw(inst.graph), 3);
  }
}

TEST(Families, DeterministicBySeed) {
  FamilySpec spec{FamilyKind::series_parallel, 9, 1};
  EXPECT_EQ(generate_family(spec, 42).graph, generate_family(spec, 42).graph);
}

TEST(Families, BasicShapes) {
  EXPECT_EQ(generate_family({FamilyKind::tree, 7, 1}, 1).graph.size(), 6);
  EXPECT_EQ(generate_family({FamilyKind::cycle, 7, 1}, 1).graph.size(), 7);
  EXPECT_EQ(generate_family({FamilyKind::clique, 5, 1}, 1).graph.size(), 10);
}

TEST(Families, Names) {
  EXPECT_EQ(parse_family("twin-cover"), FamilyKind::twin_cover);
  EXPECT_EQ(parse_family(to_string(FamilyKind::distance_hereditary)),
            FamilyKind::distance_hereditary);
  EXPECT_THROW(parse_family("planar"), DomainError);
  EXPECT_THROW(generate_family({FamilyKind::glued, 5, 2}, 1), DomainError);
}
