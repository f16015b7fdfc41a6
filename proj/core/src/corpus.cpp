#include "smw/corpus.hpp"

#include "smw/errors.hpp"

namespace smw::corpus {

Graph path(int n) {
  std::vector<std::pair<Vertex, Vertex>> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph::from_edges(n, es);
}

Graph cycle(int n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices");
  std::vector<std::pair<Vertex, Vertex>> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, es);
}

Graph complete(int n) {
  std::vector<std::pair<Vertex, Vertex>> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return Graph::from_edges(n, es);
}

Graph star(int leaves) {
  std::vector<std::pair<Vertex, Vertex>> es;
  for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, es);
}

Graph p4() { return path(4); }
Graph c4() { return cycle(4); }
Graph c5() { return cycle(5); }
Graph k4() { return complete(4); }
Graph k13() { return star(3); }
Graph k2() { return complete(2); }

Graph tt() {
  return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
}

std::vector<std::string> names() { return {"P4", "C4", "C5", "K4", "K13", "TT", "K2"}; }

Graph by_name(const std::string& name) {
  if (name == "P4") return p4();
  if (name == "C4") return c4();
  if (name == "C5") return c5();
  if (name == "K4") return k4();
  if (name == "K13") return k13();
  if (name == "TT") return tt();
  if (name == "K2") return k2();
  throw DomainError("unknown corpus graph " + name);
}

}  // namespace smw::corpus
