#include "smw/json_io.hpp"

#include <map>

#include <json.hpp>

#include "smw/errors.hpp"

namespace smw {

namespace {

using nlohmann::json;

json vertex_list(const VertexSet& s) { return s.to_vector(); }

json edge_list(const std::vector<Edge>& es) {
  json out = json::array();
  for (const Edge& e : es) out.push_back({e.u, e.v});
  return out;
}

json decomposition_object(const BranchDecomposition& input) {
  BranchDecomposition bd = input.compacted();
  json nodes = json::array();
  for (int i = 0; i < bd.slot_count(); ++i) {
    json node = {{"id", i}};
    node["leaf"] = bd.is_leaf(i) ? json(bd.leaf_vertex(i)) : json(nullptr);
    nodes.push_back(node);
  }
  json edges = json::array();
  for (auto [a, b] : bd.edges()) edges.push_back({a, b});
  return {{"nodes", nodes}, {"edges", edges}};
}

json header(const Graph& g, const char* command) {
  return {{"format", kJsonFormat}, {"command", command}, {"n", g.order()}, {"m", g.size()}};
}

}  // namespace

std::string decomposition_json(const BranchDecomposition& bd) {
  return decomposition_object(bd).dump(2);
}

BranchDecomposition parse_decomposition_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(1, std::string("invalid JSON: ") + e.what());
  }
  if (doc.contains("decomposition")) doc = doc["decomposition"];
  if (!doc.is_object() || !doc.contains("nodes") || !doc.contains("edges"))
    throw ParseError(1, "decomposition needs \"nodes\" and \"edges\"");
  try {
    BranchDecomposition bd;
    std::vector<int> index;
    std::map<int, int> by_id;
    for (const json& node : doc["nodes"]) {
      int id = node.at("id").get<int>();
      Vertex leaf = node.contains("leaf") && !node["leaf"].is_null() ? node["leaf"].get<int>() : -1;
      if (by_id.count(id)) throw ParseError(1, "duplicate node id " + std::to_string(id));
      by_id[id] = bd.add_node(leaf);
    }
    for (const json& edge : doc["edges"]) {
      int a = edge.at(0).get<int>();
      int b = edge.at(1).get<int>();
      if (!by_id.count(a) || !by_id.count(b)) throw ParseError(1, "edge names an unknown node");
      bd.add_edge(by_id[a], by_id[b]);
    }
    bd.validate();
    return bd;
  } catch (const json::exception& e) {
    throw ParseError(1, std::string("malformed decomposition: ") + e.what());
  } catch (const InvariantError& e) {
    throw ParseError(1, std::string("not a branch decomposition: ") + e.what());
  }
}

std::string decomposition_document(const Graph& g, const PipelineResult& r) {
  json doc = header(g, "decompose");
  doc["function"] = to_string(r.report.function);
  doc["width"] = r.report.width;
  doc["k"] = r.k_used;
  doc["certified"] = r.certified();
  json primes = json::array();
  for (const PrimeRecord& p : r.primes) {
    primes.push_back({{"component", p.component},
                      {"index", p.index},
                      {"vertices", vertex_list(p.prime.vertices())},
                      {"backend", to_string(p.backend)},
                      {"mm_width", p.mm_width}});
  }
  doc["primes"] = primes;
  json heavy = json::array();
  for (const HeavyPair& h : r.heavy) heavy.push_back({h.a, h.b});
  doc["heavy_pairs"] = heavy;
  json cuts = json::array();
  for (std::size_t i = 0; i < r.report.cuts.size(); ++i) {
    const CutEvaluation& ev = r.report.evaluations[i];
    cuts.push_back({{"side", vertex_list(r.report.cuts[i].side)},
                    {"split", ev.is_split},
                    {"mm", ev.mm_value},
                    {"sm", ev.sm_value}});
  }
  doc["cuts"] = cuts;
  doc["decomposition"] = decomposition_object(r.bd);
  return doc.dump(2);
}

std::string solve_document(const Graph& g, const SolveOutcome& s) {
  json doc = header(g, "solve");
  doc["problem"] = to_string(s.problem);
  switch (s.problem) {
    case Problem::maxcut:
      doc["value"] = s.value;
      doc["witness"] = vertex_list(s.cut_side);
      break;
    case Problem::hc:
      doc["value"] = s.value == 1;
      doc["witness"] = s.cycle;
      break;
    case Problem::chromatic: {
      doc["value"] = s.value;
      json classes = json::array();
      for (const VertexSet& c : s.color_classes) classes.push_back(vertex_list(c));
      doc["witness"] = classes;
      break;
    }
    case Problem::eds:
      doc["value"] = s.value;
      doc["witness"] = edge_list(s.dominating_edges);
      break;
  }
  doc["verified"] = s.verified;
  return doc.dump(2);
}

std::string oracle_document(const Graph& g, Problem p, int value) {
  json doc = header(g, "oracle");
  doc["problem"] = to_string(p);
  if (p == Problem::hc) {
    doc["value"] = value == 1;
  } else {
    doc["value"] = value;
  }
  return doc.dump(2);
}

}  // namespace smw
