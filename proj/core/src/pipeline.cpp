#include "smw/pipeline.hpp"

#include <algorithm>
#include <set>

#include "smw/errors.hpp"

namespace smw {

std::vector<HeavyPair> heavy_pairs(const SplitDecomposition& sd, int i, int k) {
  const Graph& p = sd.primes().at(i);
  std::vector<HeavyPair> out;
  if (p.order() <= 3) return out;
  std::vector<int> act_size(VertexSet::kCapacity, 0);
  for (Vertex v : p.vertices()) act_size[v] = sd.act(v, i).size();
  for (const Edge& e : p.edges()) {
    if (act_size[e.u] >= 3 * k && act_size[e.v] >= 3 * k) out.push_back({e.u, e.v, k});
  }
  return out;
}

bool is_matching(const std::vector<HeavyPair>& pairs) {
  VertexSet seen;
  for (const HeavyPair& h : pairs) {
    if (h.a == h.b || seen.contains(h.a) || seen.contains(h.b)) return false;
    seen.insert(h.a);
    seen.insert(h.b);
  }
  return true;
}

namespace {

bool siblings(const BranchDecomposition& bd, int la, int lb) {
  return bd.degree(la) == 1 && bd.degree(lb) == 1 &&
         bd.neighbors(la).front() == bd.neighbors(lb).front();
}

}  // namespace

BranchDecomposition restructure_heavy(const BranchDecomposition& bd,
                                      const std::vector<HeavyPair>& heavy) {
  if (!is_matching(heavy)) throw InvariantError("heavy edges do not form a matching");
  BranchDecomposition out = bd;
  for (const HeavyPair& h : heavy) {
    Vertex a = std::min(h.a, h.b);
    Vertex b = std::max(h.a, h.b);
    int la = out.leaf_of(a);
    int lb = out.leaf_of(b);
    // Two leaves joined directly cross only leaf cuts.
    if (out.degree(la) == 1 && out.neighbors(la).front() == lb) continue;
    if (siblings(out, la, lb)) continue;
    int parent = out.neighbors(lb).front();
    out.remove_node(lb);
    if (!out.is_leaf(parent) && out.degree(parent) == 2) out.suppress(parent);
    la = out.leaf_of(a);
    int top = out.subdivide(la, out.neighbors(la).front());
    int nb = out.add_node(b);
    out.add_edge(top, nb);
  }
  out = out.compacted();
  for (const HeavyPair& h : heavy) {
    int la = out.leaf_of(h.a);
    int lb = out.leaf_of(h.b);
    bool direct = out.neighbors(la).front() == lb;
    if (!direct && !siblings(out, la, lb)) {
      throw InvariantError("heavy edge still crosses a non-leaf cut");
    }
  }
  out.validate(bd.vertices());
  return out;
}

BranchDecomposition merge_decompositions(const SplitDecomposition& sd,
                                         const std::vector<BranchDecomposition>& per_prime) {
  if (static_cast<int>(per_prime.size()) != sd.prime_count()) {
    throw DomainError("one decomposition per prime required");
  }
  BranchDecomposition merged;
  std::vector<int> offset;
  for (const BranchDecomposition& bd : per_prime) {
    BranchDecomposition c = bd.compacted();
    offset.push_back(merged.slot_count());
    for (int x = 0; x < c.slot_count(); ++x) merged.add_node(c.leaf_vertex(x));
    for (auto [x, y] : c.edges()) merged.add_edge(offset.back() + x, offset.back() + y);
  }
  for (const auto& [marker, ij] : sd.markers()) {
    auto leaf_in = [&](int i) {
      BranchDecomposition c = per_prime[i].compacted();
      VertexSet labels = c.vertices();
      if (!labels.contains(marker)) {
        throw DomainError("decomposition of prime " + std::to_string(i) + " lacks marker leaf " +
                          std::to_string(marker));
      }
      return offset[i] + c.leaf_of(marker);
    };
    int li = leaf_in(ij.first);
    int lj = leaf_in(ij.second);
    if (merged.degree(li) != 1 || merged.degree(lj) != 1) {
      throw InvariantError("marker leaf is not a leaf");
    }
    int x = merged.neighbors(li).front();
    int y = merged.neighbors(lj).front();
    merged.remove_node(li);
    merged.remove_node(lj);
    merged.add_edge(x, y);
  }
  BranchDecomposition out = merged.compacted();
  out.validate(sd.original().vertices());
  return out;
}

BranchDecomposition join_components(const std::vector<BranchDecomposition>& parts) {
  if (parts.empty()) throw DomainError("no decompositions to join");
  BranchDecomposition out = parts.front().compacted();
  auto anchor = [](BranchDecomposition& bd) {
    auto es = bd.edges();
    if (es.empty()) return 0;
    return bd.subdivide(es.front().first, es.front().second);
  };
  for (std::size_t i = 1; i < parts.size(); ++i) {
    BranchDecomposition next = parts[i].compacted();
    int a = anchor(out);
    int b = anchor(next);
    int offset = out.slot_count();
    for (int x = 0; x < next.slot_count(); ++x) out.add_node(next.leaf_vertex(x));
    for (auto [x, y] : next.edges()) out.add_edge(offset + x, offset + y);
    out.add_edge(a, offset + b);
    out = out.compacted();
  }
  return out;
}

bool PipelineResult::certified() const {
  return std::all_of(primes.begin(), primes.end(),
                     [](const PrimeRecord& r) { return r.backend == Backend::exact; });
}

PipelineResult compute_sm_decomposition(const Graph& g, const PipelineOptions& opts) {
  if (g.order() == 0) throw DomainError("empty graph has no branch decomposition");
  PipelineResult result;
  Vertex first_marker = g.vertices().max() + 1;
  std::vector<VertexSet> components = connected_components(g);
  std::vector<std::vector<PrimeRecord>> records(components.size());

  // Per-prime decompositions do not depend on k; only the threshold does.
  for (std::size_t c = 0; c < components.size(); ++c) {
    Graph comp = induced_subgraph(g, components[c]);
    result.split_decompositions.push_back(split_decompose(comp, first_marker));
    const SplitDecomposition& sd = result.split_decompositions.back();
    for (int i = 0; i < sd.prime_count(); ++i) {
      const Graph& p = sd.primes()[i];
      Backend backend = Backend::exact;
      if (p.order() > 3 && p.order() > opts.exact_limit) {
        if (!opts.heuristic) {
          throw RefusalError("prime " + std::to_string(i) + " of component " +
                             std::to_string(c) + " has " + std::to_string(p.order()) +
                             " vertices, above the exact limit " +
                             std::to_string(opts.exact_limit) + ": " + p.to_string());
        }
        backend = Backend::heuristic;
      }
      PrimeDecomposition pd = approx_mm_branch_decomposition(p, 1, backend, opts.exact_limit);
      PrimeRecord rec;
      rec.component = static_cast<int>(c);
      rec.index = i;
      rec.prime = p;
      rec.backend = pd.backend;
      rec.mm_width = pd.result.report.width;
      rec.bd = pd.result.bd;
      records[c].push_back(std::move(rec));
    }
  }

  for (int k = 1;; ++k) {
    bool ok = true;
    for (const auto& rs : records)
      for (const PrimeRecord& r : rs) ok = ok && r.mm_width <= 3 * k + 1;
    if (!ok) continue;
    std::vector<HeavyPair> heavy_all;
    std::vector<std::vector<BranchDecomposition>> restructured(components.size());
    for (std::size_t c = 0; c < components.size() && ok; ++c) {
      const SplitDecomposition& sd = result.split_decompositions[c];
      for (int i = 0; i < sd.prime_count(); ++i) {
        std::vector<HeavyPair> heavy = heavy_pairs(sd, i, k);
        // A non-matching means smw(G) >= k, so this k cannot succeed.
        if (!is_matching(heavy)) {
          ok = false;
          break;
        }
        restructured[c].push_back(restructure_heavy(records[c][i].bd, heavy));
        heavy_all.insert(heavy_all.end(), heavy.begin(), heavy.end());
      }
    }
    if (!ok) continue;
    std::vector<BranchDecomposition> merged;
    for (std::size_t c = 0; c < components.size(); ++c) {
      merged.push_back(merge_decompositions(result.split_decompositions[c], restructured[c]));
      for (std::size_t i = 0; i < restructured[c].size(); ++i) {
        records[c][i].bd = restructured[c][i];
      }
    }
    result.bd = join_components(merged);
    result.report = f_width(result.bd, g, CutFunction::sm);
    result.k_used = k;
    result.heavy = std::move(heavy_all);
    for (auto& rs : records)
      for (PrimeRecord& r : rs) result.primes.push_back(std::move(r));
    return result;
  }
}

}  // namespace smw
