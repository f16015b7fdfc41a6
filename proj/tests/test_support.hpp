#pragma once

#include <algorithm>

#include "smw/dp_framework.hpp"

namespace smw::fixture {

/// Context of the join of a1 and a2 inside g.
inline NodeContext join_context(const Graph& g, const VertexSet& a1, const VertexSet& a2) {
  NodeContext ctx;
  ctx.graph = &g;
  ctx.a1 = a1;
  ctx.a2 = a2;
  ctx.a = a1 | a2;
  ctx.root = ctx.a == g.vertices();
  ctx.cut1 = sm_value(g, a1);
  ctx.cut2 = sm_value(g, a2);
  ctx.cut = sm_value(g, ctx.a);
  return ctx;
}

/// Context of a leaf holding v.
inline NodeContext leaf_context(const Graph& g, Vertex v) {
  NodeContext ctx;
  ctx.graph = &g;
  ctx.a = VertexSet{v};
  ctx.cut = sm_value(g, ctx.a);
  return ctx;
}

template <class Cert>
bool contains(const std::vector<Cert>& s, const Cert& c) {
  return std::find(s.begin(), s.end(), c) != s.end();
}

}  // namespace smw::fixture
