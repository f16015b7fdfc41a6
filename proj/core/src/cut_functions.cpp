#include "smw/cut_functions.hpp"

#include "smw/errors.hpp"

namespace smw {

const char* to_string(CutFunction f) { return f == CutFunction::mm ? "mm" : "sm"; }

bool is_split_cut(const Graph& g, const VertexSet& a) {
  if (!a.is_subset_of(g.vertices())) throw DomainError("cut side not a subset of V(G)");
  VertexSet b = g.vertices() - a;
  if (a.size() < 2 || b.size() < 2) return false;
  const VertexSet* common = nullptr;
  VertexSet first;
  for (Vertex v : a) {
    VertexSet cross = g.neighbors(v) & b;
    if (cross.empty()) continue;
    if (!common) {
      first = cross;
      common = &first;
    } else if (cross != first) {
      return false;
    }
  }
  return common != nullptr;
}

bool is_split(const Graph& g, const VertexSet& a) {
  if (!is_connected(g)) throw DomainError("split test needs a connected graph");
  return is_split_cut(g, a);
}

int mm_value(const Graph& g, const VertexSet& a) {
  return static_cast<int>(max_matching_cut(g, a).size());
}

CutEvaluation sm_value(const Graph& g, const VertexSet& a) {
  CutEvaluation ev;
  ev.side = a;
  ev.witness_matching = max_matching_cut(g, a);
  ev.witness_cover = koenig_cover(g, a, ev.witness_matching);
  ev.mm_value = static_cast<int>(ev.witness_matching.size());
  ev.is_split = is_split_cut(g, a);
  ev.sm_value = ev.is_split ? 1 : ev.mm_value;
  return ev;
}

int cut_value(const Graph& g, const VertexSet& a, CutFunction f) {
  if (f == CutFunction::mm) return mm_value(g, a);
  return is_split_cut(g, a) ? 1 : mm_value(g, a);
}

}  // namespace smw
