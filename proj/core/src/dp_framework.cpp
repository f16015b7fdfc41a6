#include "smw/dp_framework.hpp"

namespace smw {

VertexSet boundary_of(const Graph& g, const VertexSet& s) {
  VertexSet out;
  VertexSet rest = g.vertices() - s;
  for (Vertex v : s)
    if (g.neighbors(v).intersects(rest)) out.insert(v);
  return out;
}

VertexSet NodeContext::boundary() const { return boundary_of(*graph, a); }

NodeContext make_context(const Graph& g, const RootedBranchDecomposition& rbd, int node) {
  NodeContext ctx;
  ctx.graph = &g;
  ctx.node = node;
  ctx.root = node == rbd.root;
  const RootedNode& w = rbd.nodes.at(node);
  ctx.a = w.vertices;
  ctx.cut = sm_value(g, ctx.a);
  if (!w.is_leaf()) {
    ctx.a1 = rbd.nodes.at(w.left).vertices;
    ctx.a2 = rbd.nodes.at(w.right).vertices;
    ctx.cut1 = sm_value(g, ctx.a1);
    ctx.cut2 = sm_value(g, ctx.a2);
  }
  return ctx;
}

void enforce_ceiling(const NodeContext& ctx, std::size_t size, double bound, const char* what) {
  if (static_cast<double>(size) > bound) {
    throw InvariantError(std::string(what) + ": " + std::to_string(size) +
                         " certificates exceed the ceiling " + std::to_string(bound) +
                         " at node " + std::to_string(ctx.node));
  }
}

}  // namespace smw
