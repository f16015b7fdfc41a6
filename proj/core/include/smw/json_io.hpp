#pragma once

#include <string>

#include "smw/pipeline.hpp"
#include "smw/solve.hpp"

namespace smw {

/// Every document carries "format": kJsonFormat.
inline constexpr int kJsonFormat = 1;

/// {"nodes": [{"id", "leaf"}...], "edges": [[a, b]...]}; leaf is null for inner nodes.
std::string decomposition_json(const BranchDecomposition& bd);
/// Accepts either a bare decomposition object or a document holding one
/// under "decomposition". Throws ParseError on malformed input.
BranchDecomposition parse_decomposition_json(const std::string& text);

/// Output of `decompose`: width, per-prime records, cuts and the tree.
std::string decomposition_document(const Graph& g, const PipelineResult& r);
/// Output of `solve`.
std::string solve_document(const Graph& g, const SolveOutcome& s);
/// Output of `oracle`.
std::string oracle_document(const Graph& g, Problem p, int value);

}  // namespace smw
