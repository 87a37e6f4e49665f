#include "midk/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "midk/errors.hpp"

namespace midk {

namespace {

VertexSet normalized(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

VertexSet set_intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

bool subset_of(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string set_to_string(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

void check_vertices(int n, const VertexSet& s, const char* what) {
  for (int v : s) {
    if (v < 1 || v > n) {
      throw std::invalid_argument(std::string(what) + ": vertex " +
                                  std::to_string(v) + " out of range 1.." +
                                  std::to_string(n));
    }
  }
}

}  // namespace

WeightedHypergraph WeightedHypergraph::create(int vertex_count,
                                              std::vector<WeightedEdge> edges) {
  if (vertex_count < 0) {
    throw std::invalid_argument("hypergraph: negative vertex count");
  }
  for (WeightedEdge& e : edges) {
    e.vertices = normalized(std::move(e.vertices));
    if (e.vertices.empty()) {
      throw std::invalid_argument("hypergraph: edges must be non-empty");
    }
    check_vertices(vertex_count, e.vertices, "hypergraph edge");
    if (e.weight < 1) {
      throw std::invalid_argument("hypergraph: weights must be >= 1");
    }
  }
  WeightedHypergraph h;
  h.n_ = vertex_count;
  h.edges_ = std::move(edges);
  return h;
}

MonomialIdeal kcover_ideal(const WeightedHypergraph& h, int k,
                           const Bounds& bounds, Exec exec) {
  if (k < 1) throw std::invalid_argument("kcover_ideal: k must be >= 1");
  if (h.edges().empty()) {
    // no constraints: every vector covers, so the ideal is the unit ideal
    return MonomialIdeal::unit(h.vertex_count());
  }
  MonomialIdeal result = MonomialIdeal::unit(h.vertex_count());
  bool first = true;
  for (const WeightedEdge& e : h.edges()) {
    const MonomialIdeal factor =
        veronese(e.vertices, static_cast<Exponent>(k) * e.weight,
                 h.vertex_count());
    result = first ? factor : intersect(result, factor, bounds, exec);
    first = false;
  }
  return result;
}

std::vector<CoverVector> minimal_kcovers(const WeightedHypergraph& h, int k,
                                         const Bounds& bounds, Exec exec) {
  if (k < 1) throw std::invalid_argument("minimal_kcovers: k must be >= 1");
  const int n = h.vertex_count();
  // per-variable box: a minimal cover never needs c_i beyond the largest
  // single-edge demand involving i
  std::vector<Exponent> box(static_cast<std::size_t>(n), 0);
  for (const WeightedEdge& e : h.edges()) {
    const Exponent demand = static_cast<Exponent>(k) * e.weight;
    for (int v : e.vertices) {
      std::size_t i = static_cast<std::size_t>(v - 1);
      box[i] = std::max(box[i], demand);
    }
  }
  std::uint64_t volume = 1;
  for (Exponent b : box) {
    volume *= static_cast<std::uint64_t>(b) + 1;
    if (volume > bounds.cover_box) {
      throw bound_error("minimal_kcovers: enumeration box exceeds cover_box " +
                        std::to_string(bounds.cover_box));
    }
  }

  struct EdgeDemand {
    std::vector<int> vertices;  // 0-based
    Exponent demand;
  };
  std::vector<EdgeDemand> eds;
  eds.reserve(h.edges().size());
  for (const WeightedEdge& e : h.edges()) {
    EdgeDemand ed;
    ed.demand = static_cast<Exponent>(k) * e.weight;
    for (int v : e.vertices) ed.vertices.push_back(v - 1);
    eds.push_back(std::move(ed));
  }
  // slack[e] at depth t: best still reachable for edge e from variables >= t
  const auto search = [&](std::vector<Exponent> prefix, std::size_t from,
                          std::vector<CoverVector>& found) {
    std::vector<Exponent> c = std::move(prefix);
    c.resize(static_cast<std::size_t>(n), 0);
    const auto feasible = [&](std::size_t depth) {
      for (const EdgeDemand& e : eds) {
        Exponent have = 0;
        Exponent reachable = 0;
        for (int v : e.vertices) {
          if (static_cast<std::size_t>(v) < depth) {
            have += c[static_cast<std::size_t>(v)];
          } else {
            reachable += box[static_cast<std::size_t>(v)];
          }
        }
        if (have + reachable < e.demand) return false;
      }
      return true;
    };
    // a prefix whose every completion would dominate a cover found earlier
    // (one that is zero beyond the prefix) cannot yield new minimal covers
    const auto dominated = [&](std::size_t depth) {
      for (const CoverVector& m : found) {
        bool dom = true;
        for (std::size_t i = 0; i < static_cast<std::size_t>(n) && dom; ++i) {
          dom = i < depth ? m[i] <= c[i] : m[i] == 0;
        }
        if (dom) return true;
      }
      return false;
    };
    const auto rec = [&](auto&& self, std::size_t t) -> void {
      if (t == static_cast<std::size_t>(n)) {
        for (const EdgeDemand& e : eds) {
          Exponent have = 0;
          for (int v : e.vertices) have += c[static_cast<std::size_t>(v)];
          if (have < e.demand) return;
        }
        found.push_back(c);
        return;
      }
      if (dominated(t)) return;
      for (Exponent e = 0; e <= box[t]; ++e) {
        c[t] = e;
        if (feasible(t + 1)) self(self, t + 1);
      }
      c[t] = 0;
    };
    rec(rec, from);
  };

  std::vector<CoverVector> all;
  if (n == 0) {
    if (eds.empty()) all.push_back({});
  } else if (exec == Exec::parallel && n >= 1) {
    // parallelize over the first coordinate; concatenation keeps the
    // deterministic enumeration order
    const std::size_t lanes = static_cast<std::size_t>(box[0]) + 1;
    std::vector<std::vector<CoverVector>> lane_found(lanes);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t e = 0; e < lanes; ++e) {
      std::vector<Exponent> prefix(1, static_cast<Exponent>(e));
      search(std::move(prefix), 1, lane_found[e]);
    }
    for (auto& lf : lane_found) {
      all.insert(all.end(), lf.begin(), lf.end());
    }
  } else {
    search({}, 0, all);
  }

  // keep the componentwise-minimal covers; reuse the monomial machinery
  std::vector<Monomial> as_monomials;
  as_monomials.reserve(all.size());
  for (CoverVector& c : all) as_monomials.emplace_back(std::move(c));
  std::vector<CoverVector> out;
  for (Monomial& m : minimalize(std::move(as_monomials), exec)) {
    out.push_back(m.exponents());
  }
  return out;
}

namespace {

struct CycleSearch {
  const std::vector<WeightedEdge>* edges;
  int n;
  std::vector<int> verts;                // v_1..v_t (1-based vertices)
  std::vector<std::size_t> used_edges;   // J_1..J_{t-1} (indices)
  std::vector<char> vertex_used;
  std::vector<char> edge_used;
  std::optional<SpecialCycle> found;

  bool edge_hits_earlier_vertex(const VertexSet& e, int allowed_a,
                                int allowed_b) const {
    for (int v : verts) {
      if (v == allowed_a || v == allowed_b) continue;
      if (std::binary_search(e.begin(), e.end(), v)) return true;
    }
    return false;
  }

  // extend from current tail vertex verts.back()
  void dfs() {
    if (found) return;
    const int tail = verts.back();
    for (std::size_t ei = 0; ei < edges->size() && !found; ++ei) {
      if (edge_used[ei]) continue;
      const VertexSet& e = (*edges)[ei].vertices;
      if (!std::binary_search(e.begin(), e.end(), tail)) continue;
      // closing edge: contains tail and v_1 and no other cycle vertex
      if (verts.size() >= 4 &&
          std::binary_search(e.begin(), e.end(), verts.front()) &&
          !edge_hits_earlier_vertex(e, tail, verts.front())) {
        SpecialCycle cycle;
        cycle.vertices = verts;
        cycle.edge_indices = used_edges;
        cycle.edge_indices.push_back(ei);
        found = cycle;
        return;
      }
      // extending edge: contains no earlier cycle vertex besides tail
      if (edge_hits_earlier_vertex(e, tail, tail)) continue;
      for (int w : e) {
        if (vertex_used[static_cast<std::size_t>(w)]) continue;
        // w may not lie in any earlier chosen edge
        bool clean = true;
        for (std::size_t prev : used_edges) {
          const VertexSet& pe = (*edges)[prev].vertices;
          if (std::binary_search(pe.begin(), pe.end(), w)) {
            clean = false;
            break;
          }
        }
        if (!clean) continue;
        verts.push_back(w);
        used_edges.push_back(ei);
        vertex_used[static_cast<std::size_t>(w)] = 1;
        edge_used[ei] = 1;
        dfs();
        edge_used[ei] = 0;
        vertex_used[static_cast<std::size_t>(w)] = 0;
        used_edges.pop_back();
        verts.pop_back();
        if (found) return;
      }
    }
  }
};

}  // namespace

BalanceResult is_totally_balanced(const WeightedHypergraph& h,
                                  const Bounds& bounds) {
  if (h.edges().size() > bounds.tb_edges) {
    throw bound_error("is_totally_balanced: " +
                      std::to_string(h.edges().size()) +
                      " edges exceed tb_edges " +
                      std::to_string(bounds.tb_edges));
  }
  if (static_cast<std::size_t>(h.vertex_count()) > bounds.tb_vertices) {
    throw bound_error("is_totally_balanced: " +
                      std::to_string(h.vertex_count()) +
                      " vertices exceed tb_vertices " +
                      std::to_string(bounds.tb_vertices));
  }
  CycleSearch search;
  search.edges = &h.edges();
  search.n = h.vertex_count();
  search.vertex_used.assign(static_cast<std::size_t>(h.vertex_count()) + 1, 0);
  search.edge_used.assign(h.edges().size(), 0);
  for (int v = 1; v <= h.vertex_count() && !search.found; ++v) {
    search.verts = {v};
    search.used_edges.clear();
    search.vertex_used[static_cast<std::size_t>(v)] = 1;
    search.dfs();
    search.vertex_used[static_cast<std::size_t>(v)] = 0;
  }
  return {search.found};
}

const VertexSet& EdgePartition::block(const std::string& label) const {
  for (const auto& [name, verts] : blocks) {
    if (name == label) return verts;
  }
  throw std::invalid_argument("no block labelled '" + label + "'");
}

EdgePartition validate_sunflower(const std::vector<VertexSet>& petals,
                                 const VertexSet& disjoint_edge, int nvars) {
  if (petals.empty()) {
    throw std::invalid_argument("sunflower: need at least one edge");
  }
  std::vector<VertexSet> js;
  js.reserve(petals.size());
  for (const VertexSet& p : petals) {
    VertexSet s = normalized(p);
    if (s.empty()) {
      throw std::invalid_argument("sunflower: edges must be non-empty");
    }
    check_vertices(nvars, s, "sunflower edge");
    js.push_back(std::move(s));
  }
  const VertexSet k = normalized(disjoint_edge);
  check_vertices(nvars, k, "sunflower K");

  VertexSet core = js[0];
  for (std::size_t t = 1; t < js.size(); ++t) core = set_intersect(core, js[t]);
  for (std::size_t i = 0; i < js.size(); ++i) {
    for (std::size_t j = i + 1; j < js.size(); ++j) {
      if (set_intersect(js[i], js[j]) != core) {
        throw std::invalid_argument(
            "sunflower: J" + std::to_string(i + 1) + " ∩ J" +
            std::to_string(j + 1) + " = " +
            set_to_string(set_intersect(js[i], js[j])) +
            " differs from the common core " + set_to_string(core));
      }
    }
  }
  for (std::size_t t = 0; t < js.size(); ++t) {
    const VertexSet hit = set_intersect(k, js[t]);
    if (!hit.empty()) {
      throw std::invalid_argument("sunflower: K meets J" +
                                  std::to_string(t + 1) + " in " +
                                  set_to_string(hit));
    }
  }

  EdgePartition part;
  part.kind = EdgePartition::Kind::sunflower;
  part.nvars = nvars;
  part.blocks.emplace_back("B", core);
  for (std::size_t t = 0; t < js.size(); ++t) {
    part.blocks.emplace_back("A" + std::to_string(t + 1),
                             set_minus(js[t], core));
  }
  part.blocks.emplace_back("K", k);
  return part;
}

EdgePartition validate_path_family(const std::vector<VertexSet>& edges,
                                   int nvars) {
  if (edges.size() != 3 && edges.size() != 4) {
    throw std::invalid_argument("path family: expected 3 or 4 edges, got " +
                                std::to_string(edges.size()));
  }
  std::vector<VertexSet> js;
  for (const VertexSet& e : edges) {
    VertexSet s = normalized(e);
    if (s.empty()) {
      throw std::invalid_argument("path family: edges must be non-empty");
    }
    check_vertices(nvars, s, "path edge");
    js.push_back(std::move(s));
  }

  const auto require_disjoint = [&](std::size_t a, std::size_t b) {
    const VertexSet hit = set_intersect(js[a], js[b]);
    if (!hit.empty()) {
      throw std::invalid_argument("path family: J" + std::to_string(a + 1) +
                                  " ∩ J" + std::to_string(b + 1) + " = " +
                                  set_to_string(hit) + " must be empty");
    }
  };
  const auto require_subset = [&](std::size_t a, const VertexSet& cover,
                                  const std::string& cover_name) {
    const VertexSet extra = set_minus(js[a], cover);
    if (!extra.empty()) {
      throw std::invalid_argument("path family: J" + std::to_string(a + 1) +
                                  " ⊄ " + cover_name + ", offending vertices " +
                                  set_to_string(extra));
    }
  };

  EdgePartition part;
  part.kind = EdgePartition::Kind::path;
  part.nvars = nvars;
  if (js.size() == 4) {
    require_disjoint(0, 2);
    require_disjoint(0, 3);
    require_disjoint(1, 3);
    require_subset(1, set_union(js[0], js[2]), "J1 ∪ J3");
    require_subset(2, set_union(js[1], js[3]), "J2 ∪ J4");
    part.blocks.emplace_back("J1'", set_intersect(js[0], js[1]));
    part.blocks.emplace_back("J2'", set_intersect(js[1], js[2]));
    part.blocks.emplace_back("J3'", set_intersect(js[2], js[3]));
    part.blocks.emplace_back("J1''", set_minus(js[0], js[1]));
    part.blocks.emplace_back("J4''", set_minus(js[3], js[2]));
  } else {
    require_disjoint(0, 2);
    require_subset(1, set_union(js[0], js[2]), "J1 ∪ J3");
    part.blocks.emplace_back("J1'", set_intersect(js[0], js[1]));
    part.blocks.emplace_back("J2'", set_intersect(js[1], js[2]));
    part.blocks.emplace_back("J1''", set_minus(js[0], js[1]));
    part.blocks.emplace_back("J3''", set_minus(js[2], js[1]));
  }
  return part;
}

EdgePartition three_edge_partition(const VertexSet& j1, const VertexSet& j2,
                                   const VertexSet& j3, int nvars) {
  const VertexSet a = normalized(j1);
  const VertexSet b = normalized(j2);
  const VertexSet c = normalized(j3);
  check_vertices(nvars, a, "J1");
  check_vertices(nvars, b, "J2");
  check_vertices(nvars, c, "J3");
  const VertexSet hit = set_intersect(a, c);
  if (!hit.empty()) {
    throw std::invalid_argument("three_edge: J1 ∩ J3 = " + set_to_string(hit) +
                                " must be empty");
  }
  EdgePartition part;
  part.kind = EdgePartition::Kind::three_edge;
  part.nvars = nvars;
  // listing order used for the variable order
  part.blocks.emplace_back("J1'", set_intersect(a, b));
  part.blocks.emplace_back("J1''", set_minus(a, b));
  part.blocks.emplace_back("J2'", set_intersect(b, c));
  part.blocks.emplace_back("J3''", set_minus(c, b));
  part.blocks.emplace_back("J2''", set_minus(b, set_union(a, c)));
  VertexSet rest;
  const VertexSet all = set_union(set_union(a, b), c);
  for (int v = 1; v <= nvars; ++v) {
    if (!std::binary_search(all.begin(), all.end(), v)) rest.push_back(v);
  }
  part.blocks.emplace_back("K", std::move(rest));
  return part;
}

VariableOrder three_edge_order(const VertexSet& j1, const VertexSet& j2,
                               const VertexSet& j3, int nvars) {
  const EdgePartition part = three_edge_partition(j1, j2, j3, nvars);
  std::vector<int> seq;
  seq.reserve(static_cast<std::size_t>(nvars));
  for (const auto& [label, verts] : part.blocks) {
    seq.insert(seq.end(), verts.begin(), verts.end());
  }
  return VariableOrder::descending(std::move(seq));
}

Exponent BlockDegrees::of(const std::string& label) const {
  for (const auto& [name, deg] : by_block) {
    if (name == label) return deg;
  }
  throw std::invalid_argument("no block labelled '" + label + "'");
}

BlockDegrees factor_degrees(const EdgePartition& partition, const Monomial& m) {
  if (m.vars() != partition.nvars) {
    throw std::invalid_argument(
        "factor_degrees: monomial has wrong variable count");
  }
  BlockDegrees out;
  Exponent assigned = 0;
  for (const auto& [label, verts] : partition.blocks) {
    Exponent d = 0;
    for (int v : verts) d += m.exponent(v);
    assigned += d;
    out.by_block.emplace_back(label, d);
  }
  out.rest = m.degree() - assigned;
  return out;
}

}  // namespace midk
