#include "midk/json_io.hpp"

#include <fstream>

#include "midk/errors.hpp"

namespace midk {

namespace {

json monomial_to_json(const Monomial& m) { return json(m.exponents()); }

Monomial monomial_from_json(const json& j, int nvars, const char* what) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(nvars)) {
    throw parse_error(std::string(what) +
                      ": expected an exponent array of length " +
                      std::to_string(nvars));
  }
  std::vector<Exponent> exps;
  exps.reserve(j.size());
  for (const json& e : j) {
    if (!e.is_number_integer() || e.get<Exponent>() < 0) {
      throw parse_error(std::string(what) +
                        ": exponents must be non-negative integers");
    }
    exps.push_back(e.get<Exponent>());
  }
  return Monomial(std::move(exps));
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw parse_error("'" + path + "': " + e.what());
  }
  return j;
}

}  // namespace

json to_json(const MonomialIdeal& ideal) {
  json gens = json::array();
  for (const Monomial& g : ideal.generators()) {
    gens.push_back(monomial_to_json(g));
  }
  return json{{"n", ideal.vars()}, {"generators", std::move(gens)}};
}

MonomialIdeal ideal_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("generators")) {
    throw parse_error("ideal: expected {\"n\": ..., \"generators\": [...]}");
  }
  if (!j["n"].is_number_integer() || j["n"].get<int>() < 0) {
    throw parse_error("ideal: field 'n' must be a non-negative integer");
  }
  const int n = j["n"].get<int>();
  if (!j["generators"].is_array()) {
    throw parse_error("ideal: field 'generators' must be an array");
  }
  std::vector<Monomial> gens;
  for (const json& g : j["generators"]) {
    gens.push_back(monomial_from_json(g, n, "ideal generator"));
  }
  return MonomialIdeal::from_generators(n, std::move(gens));
}

MonomialIdeal load_ideal(const std::string& path) {
  return ideal_from_json(load_file(path));
}

json to_json(const WeightedHypergraph& h) {
  json edges = json::array();
  for (const WeightedEdge& e : h.edges()) {
    edges.push_back(json{{"vertices", e.vertices}, {"weight", e.weight}});
  }
  return json{{"n", h.vertex_count()}, {"edges", std::move(edges)}};
}

WeightedHypergraph hypergraph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw parse_error("hypergraph: expected {\"n\": ..., \"edges\": [...]}");
  }
  if (!j["n"].is_number_integer() || j["n"].get<int>() < 0) {
    throw parse_error("hypergraph: field 'n' must be a non-negative integer");
  }
  const int n = j["n"].get<int>();
  if (!j["edges"].is_array()) {
    throw parse_error("hypergraph: field 'edges' must be an array");
  }
  std::vector<WeightedEdge> edges;
  for (const json& e : j["edges"]) {
    if (!e.is_object() || !e.contains("vertices")) {
      throw parse_error("hypergraph edge: expected {\"vertices\": [...]}");
    }
    WeightedEdge edge;
    if (!e["vertices"].is_array()) {
      throw parse_error("hypergraph edge: field 'vertices' must be an array");
    }
    for (const json& v : e["vertices"]) {
      if (!v.is_number_integer()) {
        throw parse_error("hypergraph edge: vertices must be integers");
      }
      edge.vertices.push_back(v.get<int>());
    }
    if (e.contains("weight")) {
      if (!e["weight"].is_number_integer() || e["weight"].get<Exponent>() < 1) {
        throw parse_error("hypergraph edge: field 'weight' must be >= 1");
      }
      edge.weight = e["weight"].get<Exponent>();
    }
    edges.push_back(std::move(edge));
  }
  try {
    return WeightedHypergraph::create(n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what());
  }
}

WeightedHypergraph load_hypergraph(const std::string& path) {
  return hypergraph_from_json(load_file(path));
}

json to_json(const ExchangeCertificate& cert) {
  if (cert.holds()) return json{{"verdict", "holds"}};
  const ExchangeViolation& w = *cert.violation;
  json tried = json::array();
  for (const TriedExchange& t : w.tried) {
    tried.push_back(
        json{{"j", t.index}, {"monomial", monomial_to_json(t.candidate)}});
  }
  return json{{"verdict", "violated"},
              {"u", monomial_to_json(w.u)},
              {"v", monomial_to_json(w.v)},
              {"pivot", w.pivot},
              {"tried", std::move(tried)}};
}

json to_json(const AdmissibleCertificate& cert) {
  if (cert.holds()) return json{{"verdict", "holds"}};
  return json{{"verdict", "violated"},
              {"position", cert.violation->position},
              {"colon_generator",
               monomial_to_json(cert.violation->colon_generator)}};
}

json to_json(const VariableOrder& ord) { return json(ord.sequence()); }

json order_to_json(const std::vector<Monomial>& ord) {
  json out = json::array();
  for (const Monomial& m : ord) out.push_back(monomial_to_json(m));
  return out;
}

std::vector<Monomial> order_from_json(const json& j, int nvars) {
  if (!j.is_array()) {
    throw parse_error("order: expected an array of exponent vectors");
  }
  std::vector<Monomial> out;
  for (const json& m : j) {
    out.push_back(monomial_from_json(m, nvars, "order element"));
  }
  return out;
}

std::vector<Monomial> load_order(const std::string& path, int nvars) {
  return order_from_json(load_file(path), nvars);
}

json to_json(const BettiTable& table) {
  json entries = json::array();
  for (const auto& [key, rank] : table.entries) {
    if (rank == 0) continue;
    entries.push_back(json{{"i", key.first}, {"j", key.second}, {"rank", rank}});
  }
  return json{{"prime", table.prime}, {"entries", std::move(entries)}};
}

json to_json(const ComponentwiseResult& result) {
  json comps = json::array();
  for (const ComponentReport& c : result.components) {
    comps.push_back(json{{"degree", c.degree},
                         {"linear", c.linear},
                         {"generators", c.generator_count}});
  }
  return json{{"componentwise_linear", result.linear},
              {"components", std::move(comps)}};
}

json to_json(const std::vector<CoverVector>& covers) {
  json out = json::array();
  for (const CoverVector& c : covers) out.push_back(c);
  return out;
}

}  // namespace midk
