#pragma once

#include "smw/graph.hpp"
#include "smw/matching.hpp"

namespace smw {

enum class CutFunction { mm, sm };

const char* to_string(CutFunction f);

struct CutEvaluation {
  VertexSet side;
  bool is_split = false;
  int mm_value = 0;
  int sm_value = 0;
  Matching witness_matching;
  VertexSet witness_cover;
};

/// Split test of the definition; requires a connected graph.
bool is_split(const Graph& g, const VertexSet& a);

/// Split test without the connectivity precondition. A cut with no crossing
/// edge is never a split.
bool is_split_cut(const Graph& g, const VertexSet& a);

/// mm(A) = size of a maximum matching of G[A, V \ A].
int mm_value(const Graph& g, const VertexSet& a);

/// Full evaluation: split flag, mm, sm, matching and Koenig cover.
CutEvaluation sm_value(const Graph& g, const VertexSet& a);

int cut_value(const Graph& g, const VertexSet& a, CutFunction f);

}  // namespace smw
