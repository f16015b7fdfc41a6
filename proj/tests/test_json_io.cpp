#include <gtest/gtest.h>

#include <json.hpp>

#include "smw/errors.hpp"
#include "smw/corpus.hpp"
#include "smw/json_io.hpp"

using namespace smw;

TEST(Json, DecompositionRoundTrip) {
  Graph c5 = corpus::c5();
  PipelineResult r = compute_sm_decomposition(c5);
  BranchDecomposition back = parse_decomposition_json(decomposition_json(r.bd));
  EXPECT_EQ(f_width(back, c5, CutFunction::sm).width, f_width(r.bd, c5, CutFunction::sm).width);
  EXPECT_EQ(back.edges().size(), r.bd.edges().size());
}

TEST(Json, DocumentEmbedsDecomposition) {
  Graph p4 = corpus::p4();
  PipelineResult r = compute_sm_decomposition(p4);
  std::string doc = decomposition_document(p4, r);
  auto j = nlohmann::json::parse(doc);
  EXPECT_EQ(j["format"], kJsonFormat);
  EXPECT_EQ(j["n"], 4);
  EXPECT_NO_THROW(parse_decomposition_json(doc));
}

TEST(Json, SolveAndOracleDocuments) {
  Graph c5 = corpus::c5();
  auto s = nlohmann::json::parse(solve_document(c5, solve_problem(Problem::maxcut, c5)));
  EXPECT_EQ(s["value"], 4);
  auto h = nlohmann::json::parse(solve_document(c5, solve_problem(Problem::hc, c5)));
  EXPECT_EQ(h["value"], true);
  auto o = nlohmann::json::parse(oracle_document(c5, Problem::chromatic, 3));
  EXPECT_EQ(o["value"], 3);
}

TEST(Json, Malformed) {
  EXPECT_THROW(parse_decomposition_json("{"), ParseError);
  EXPECT_THROW(parse_decomposition_json("{\"nodes\": 3}"), ParseError);
  EXPECT_THROW(parse_decomposition_json("[]"), ParseError);
}
