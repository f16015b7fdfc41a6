#include "smw/graph_io.hpp"

#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "smw/errors.hpp"

namespace smw {

namespace {

bool significant(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos != std::string::npos && line[pos] != '#';
}

// Reads exactly `count` integers from the line; anything else is malformed.
std::vector<long long> read_ints(const std::string& line, int lineno, std::size_t count,
                                 std::size_t skip_tokens = 0) {
  std::istringstream in(line);
  std::string tok;
  for (std::size_t i = 0; i < skip_tokens; ++i) in >> tok;
  std::vector<long long> out;
  while (in >> tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw ParseError(lineno, "expected an integer, got '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError(lineno, "expected an integer, got '" + tok + "'");
    out.push_back(v);
  }
  if (out.size() != count) {
    throw ParseError(lineno, "expected " + std::to_string(count) + " integers, got " +
                                 std::to_string(out.size()));
  }
  return out;
}

class EdgeCollector {
 public:
  explicit EdgeCollector(long long n) : n_(n) {
    if (n < 0 || n > VertexSet::kCapacity / 2) {
      throw DomainError("vertex count " + std::to_string(n) + " outside [0, " +
                        std::to_string(VertexSet::kCapacity / 2) + "]");
    }
  }

  void add(long long u, long long v, int lineno) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) {
      throw ParseError(lineno, "vertex id out of range");
    }
    if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
    Edge e(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (!seen_.insert({e.u, e.v}).second) {
      throw ParseError(lineno, "duplicate edge " + std::to_string(e.u) + " " +
                                   std::to_string(e.v));
    }
    edges_.push_back(e);
  }

  Graph build() const { return Graph(VertexSet::prefix(static_cast<int>(n_)), edges_); }
  std::size_t count() const { return edges_.size(); }

 private:
  long long n_;
  std::set<std::pair<Vertex, Vertex>> seen_;
  std::vector<Edge> edges_;
};

}  // namespace

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  long long m = -1;
  std::optional<EdgeCollector> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (!significant(line)) continue;
    if (!edges) {
      auto header = read_ints(line, lineno, 2);
      if (header[1] < 0) throw ParseError(lineno, "negative edge count");
      try {
        edges.emplace(header[0]);
      } catch (const DomainError& e) {
        throw ParseError(lineno, e.what());
      }
      m = header[1];
      continue;
    }
    auto uv = read_ints(line, lineno, 2);
    if (static_cast<long long>(edges->count()) == m) {
      throw ParseError(lineno, "more edge lines than declared");
    }
    edges->add(uv[0], uv[1], lineno);
  }
  if (!edges) throw ParseError(lineno, "missing header line 'n m'");
  if (static_cast<long long>(edges->count()) != m) {
    throw ParseError(lineno, "expected " + std::to_string(m) + " edges, found " +
                                 std::to_string(edges->count()));
  }
  return edges->build();
}

Graph parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  long long m = -1;
  std::optional<EdgeCollector> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (!significant(line)) continue;
    std::istringstream tokens(line);
    std::string kind;
    tokens >> kind;
    if (kind == "c") continue;
    if (kind == "p") {
      if (edges) throw ParseError(lineno, "second problem line");
      std::string fmt;
      tokens >> fmt;
      if (fmt != "edge" && fmt != "col") throw ParseError(lineno, "unsupported format " + fmt);
      auto nm = read_ints(line, lineno, 2, 2);
      try {
        edges.emplace(nm[0]);
      } catch (const DomainError& e) {
        throw ParseError(lineno, e.what());
      }
      m = nm[1];
    } else if (kind == "e") {
      if (!edges) throw ParseError(lineno, "edge before problem line");
      auto uv = read_ints(line, lineno, 2, 1);
      edges->add(uv[0] - 1, uv[1] - 1, lineno);
    } else {
      throw ParseError(lineno, "unknown line type '" + kind + "'");
    }
  }
  if (!edges) throw ParseError(lineno, "missing problem line");
  if (static_cast<long long>(edges->count()) != m) {
    throw ParseError(lineno, "expected " + std::to_string(m) + " edges, found " +
                                 std::to_string(edges->count()));
  }
  return edges->build();
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    if (line[pos] == 'p' || line[pos] == 'c') return parse_dimacs(text);
    break;
  }
  return parse_edge_list(text);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

}  // namespace smw
