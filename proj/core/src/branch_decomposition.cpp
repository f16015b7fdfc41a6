#include "smw/branch_decomposition.hpp"

#include <algorithm>
#include <sstream>

#include "smw/errors.hpp"

namespace smw {

BranchDecomposition BranchDecomposition::single_leaf(Vertex v) {
  BranchDecomposition bd;
  bd.add_node(v);
  return bd;
}

BranchDecomposition BranchDecomposition::star(const VertexSet& vs) {
  if (vs.size() > 3) throw DomainError("star decompositions hold at most 3 vertices");
  BranchDecomposition bd;
  if (vs.empty()) return bd;
  if (vs.size() == 1) return single_leaf(vs.min());
  if (vs.size() == 2) {
    int a = bd.add_node(vs.min());
    int b = bd.add_node(vs.max());
    bd.add_edge(a, b);
    return bd;
  }
  int c = bd.add_node();
  for (Vertex v : vs) bd.add_edge(c, bd.add_node(v));
  return bd;
}

BranchDecomposition BranchDecomposition::caterpillar(const std::vector<Vertex>& order) {
  int n = static_cast<int>(order.size());
  if (n <= 3) return star(VertexSet::from_range(order));
  BranchDecomposition bd;
  std::vector<int> spine;
  for (int i = 0; i < n - 2; ++i) {
    spine.push_back(bd.add_node());
    if (i) bd.add_edge(spine[i - 1], spine[i]);
  }
  bd.add_edge(spine.front(), bd.add_node(order[0]));
  bd.add_edge(spine.front(), bd.add_node(order[1]));
  for (int i = 2; i < n - 2; ++i) bd.add_edge(spine[i - 1], bd.add_node(order[i]));
  bd.add_edge(spine.back(), bd.add_node(order[n - 2]));
  bd.add_edge(spine.back(), bd.add_node(order[n - 1]));
  return bd;
}

int BranchDecomposition::add_node(Vertex leaf) {
  adj_.emplace_back();
  leaf_.push_back(leaf);
  alive_.push_back(true);
  return static_cast<int>(adj_.size()) - 1;
}

void BranchDecomposition::add_edge(int a, int b) {
  if (a == b || !alive_.at(a) || !alive_.at(b)) throw DomainError("bad tree edge");
  if (std::find(adj_[a].begin(), adj_[a].end(), b) != adj_[a].end()) {
    throw DomainError("duplicate tree edge");
  }
  adj_[a].push_back(b);
  adj_[b].push_back(a);
}

void BranchDecomposition::remove_edge(int a, int b) {
  auto drop = [](std::vector<int>& xs, int x) {
    auto it = std::find(xs.begin(), xs.end(), x);
    if (it == xs.end()) throw DomainError("tree edge not present");
    xs.erase(it);
  };
  drop(adj_.at(a), b);
  drop(adj_.at(b), a);
}

void BranchDecomposition::remove_node(int node) {
  while (!adj_.at(node).empty()) remove_edge(node, adj_[node].front());
  alive_[node] = false;
  leaf_[node] = -1;
}

void BranchDecomposition::suppress(int node) {
  if (degree(node) != 2 || is_leaf(node)) throw DomainError("only degree-2 inner nodes suppress");
  int a = adj_[node][0], b = adj_[node][1];
  remove_node(node);
  add_edge(a, b);
}

int BranchDecomposition::subdivide(int a, int b) {
  remove_edge(a, b);
  int m = add_node();
  add_edge(a, m);
  add_edge(m, b);
  return m;
}

int BranchDecomposition::node_count() const {
  return static_cast<int>(std::count(alive_.begin(), alive_.end(), true));
}

int BranchDecomposition::leaf_of(Vertex v) const {
  for (int i = 0; i < slot_count(); ++i)
    if (alive_[i] && leaf_[i] == v) return i;
  throw DomainError("no leaf carries vertex " + std::to_string(v));
}

std::vector<std::pair<int, int>> BranchDecomposition::edges() const {
  std::vector<std::pair<int, int>> es;
  for (int a = 0; a < slot_count(); ++a)
    for (int b : adj_[a])
      if (a < b) es.emplace_back(a, b);
  std::sort(es.begin(), es.end());
  return es;
}

VertexSet BranchDecomposition::vertices() const {
  VertexSet vs;
  for (int i = 0; i < slot_count(); ++i)
    if (alive_[i] && leaf_[i] >= 0) vs.insert(leaf_[i]);
  return vs;
}

void BranchDecomposition::validate() const {
  int n = node_count();
  if (n == 0) return;
  int edge_count = 0;
  int first = -1;
  VertexSet labels;
  for (int i = 0; i < slot_count(); ++i) {
    if (!alive_[i]) {
      if (!adj_[i].empty()) throw InvariantError("dead node with edges");
      continue;
    }
    if (first < 0) first = i;
    edge_count += degree(i);
    if (degree(i) > 3) throw InvariantError("node of degree > 3");
    bool labelled = leaf_[i] >= 0;
    if (labelled && degree(i) > 1) throw InvariantError("labelled inner node");
    if (!labelled && degree(i) <= 1) throw InvariantError("unlabelled leaf");
    if (labelled) {
      if (labels.contains(leaf_[i])) throw InvariantError("vertex on two leaves");
      labels.insert(leaf_[i]);
    }
  }
  if (edge_count / 2 != n - 1) throw InvariantError("not a tree: wrong edge count");
  std::vector<bool> seen(slot_count(), false);
  std::vector<int> stack{first};
  seen[first] = true;
  int reached = 0;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    ++reached;
    for (int y : adj_[x])
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
  }
  if (reached != n) throw InvariantError("not a tree: disconnected");
}

void BranchDecomposition::validate(const VertexSet& vs) const {
  validate();
  if (vertices() != vs) {
    throw InvariantError("leaf labels " + vertices().to_string() + " differ from " +
                         vs.to_string());
  }
}

BranchDecomposition BranchDecomposition::compacted() const {
  std::vector<int> index(slot_count(), -1);
  BranchDecomposition out;
  for (int i = 0; i < slot_count(); ++i)
    if (alive_[i]) index[i] = out.add_node(leaf_[i]);
  for (auto [a, b] : edges()) out.add_edge(index[a], index[b]);
  return out;
}

VertexSet BranchDecomposition::side(int start, int avoid) const {
  VertexSet out;
  std::vector<std::pair<int, int>> stack{{start, avoid}};
  while (!stack.empty()) {
    auto [x, from] = stack.back();
    stack.pop_back();
    if (leaf_[x] >= 0) out.insert(leaf_[x]);
    for (int y : adj_[x])
      if (y != from) stack.emplace_back(y, x);
  }
  return out;
}

std::string BranchDecomposition::to_string() const {
  std::ostringstream os;
  os << "nodes=" << node_count() << " edges=[";
  bool first = true;
  for (auto [a, b] : edges()) {
    if (!first) os << ' ';
    first = false;
    os << a << '-' << b;
  }
  os << "] leaves={";
  first = true;
  for (int i = 0; i < slot_count(); ++i) {
    if (!alive_[i] || leaf_[i] < 0) continue;
    if (!first) os << ',';
    first = false;
    os << i << ':' << leaf_[i];
  }
  os << '}';
  return os.str();
}

VertexSet normalise_cut(const VertexSet& side, const VertexSet& all) {
  VertexSet other = all - side;
  if (side.size() != other.size()) return side.size() < other.size() ? side : other;
  return side.contains(all.min()) ? side : other;
}

std::vector<EdgeCut> edge_cuts(const BranchDecomposition& bd) {
  VertexSet all = bd.vertices();
  std::vector<EdgeCut> cuts;
  for (auto [a, b] : bd.edges()) cuts.push_back({a, b, normalise_cut(bd.side(a, b), all)});
  return cuts;
}

std::vector<VertexSet> induced_cuts(const BranchDecomposition& bd) {
  std::vector<VertexSet> out;
  for (const EdgeCut& c : edge_cuts(bd)) out.push_back(c.side);
  std::sort(out.begin(), out.end(), [](const VertexSet& x, const VertexSet& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return out;
}

WidthReport f_width(const BranchDecomposition& bd, const Graph& g, CutFunction f) {
  if (bd.vertices() != g.vertices()) {
    throw DomainError("decomposition leaves " + bd.vertices().to_string() +
                      " do not match V(G) " + g.vertices().to_string());
  }
  WidthReport report;
  report.function = f;
  report.cuts = edge_cuts(bd);
  for (const EdgeCut& c : report.cuts) {
    CutEvaluation ev = sm_value(g, c.side);
    int value = f == CutFunction::mm ? ev.mm_value : ev.sm_value;
    report.width = std::max(report.width, value);
    report.evaluations.push_back(std::move(ev));
  }
  return report;
}

std::vector<int> RootedBranchDecomposition::postorder() const {
  std::vector<int> order;
  if (root < 0) return order;
  std::vector<std::pair<int, bool>> stack{{root, false}};
  while (!stack.empty()) {
    auto [x, expanded] = stack.back();
    stack.pop_back();
    if (expanded || nodes[x].is_leaf()) {
      order.push_back(x);
      continue;
    }
    stack.emplace_back(x, true);
    stack.emplace_back(nodes[x].right, false);
    stack.emplace_back(nodes[x].left, false);
  }
  return order;
}

std::vector<VertexSet> RootedBranchDecomposition::cuts() const {
  std::vector<VertexSet> out;
  for (int x : postorder())
    if (x != root) out.push_back(nodes[x].vertices);
  return out;
}

RootedBranchDecomposition root_decomposition(const BranchDecomposition& input) {
  input.validate();
  BranchDecomposition bd = input.compacted();
  // Contract degree-2 inner nodes so that every inner node is ternary.
  for (int i = 0; i < bd.slot_count(); ++i)
    if (bd.alive(i) && !bd.is_leaf(i) && bd.degree(i) == 2) bd.suppress(i);
  bd = bd.compacted();
  auto edges = bd.edges();
  RootedBranchDecomposition r;
  if (edges.empty()) {
    // A single leaf is its own root.
    RootedNode leaf;
    leaf.leaf = bd.leaf_vertex(0);
    leaf.vertices.insert(leaf.leaf);
    r.nodes.push_back(leaf);
    r.root = 0;
    return r;
  }
  auto [ea, eb] = edges.front();

  r.nodes.resize(bd.slot_count() + 1);
  r.root = bd.slot_count();
  // Iterative DFS from the subdivision node.
  struct Item {
    int node;
    int parent;
  };
  std::vector<Item> order;
  std::vector<Item> stack{{eb, r.root}, {ea, r.root}};
  r.nodes[r.root].left = ea;
  r.nodes[r.root].right = eb;
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    order.push_back(it);
    RootedNode& node = r.nodes[it.node];
    node.parent = it.parent;
    node.leaf = bd.leaf_vertex(it.node);
    std::vector<int> kids;
    for (int y : bd.neighbors(it.node)) {
      bool root_edge = (it.node == ea && y == eb) || (it.node == eb && y == ea);
      if (y != it.parent && !root_edge) kids.push_back(y);
    }
    std::sort(kids.begin(), kids.end());
    if (kids.size() == 2) {
      node.left = kids[0];
      node.right = kids[1];
      stack.push_back({kids[1], it.node});
      stack.push_back({kids[0], it.node});
    } else if (!kids.empty()) {
      throw InvariantError("inner node with one child after contraction");
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    RootedNode& node = r.nodes[it->node];
    if (node.is_leaf()) {
      node.vertices = VertexSet{node.leaf};
    } else {
      node.vertices = r.nodes[node.left].vertices | r.nodes[node.right].vertices;
    }
  }
  r.nodes[r.root].vertices = r.nodes[ea].vertices | r.nodes[eb].vertices;
  return r;
}

}  // namespace smw
