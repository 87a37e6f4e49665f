#pragma once

#include <string>

#include <json.hpp>

#include "midk/exchange.hpp"
#include "midk/hypergraph.hpp"
#include "midk/ideal.hpp"
#include "midk/linear_quotients.hpp"
#include "midk/resolution.hpp"

namespace midk {

using json = nlohmann::json;

// Ideal files: {"n": int, "generators": [[e1,...,en], ...]}.
json to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const json& j);
MonomialIdeal load_ideal(const std::string& path);

// Hypergraph files: {"n": int, "edges": [{"vertices": [...], "weight": w}]}.
json to_json(const WeightedHypergraph& h);
WeightedHypergraph hypergraph_from_json(const json& j);
WeightedHypergraph load_hypergraph(const std::string& path);

// Certificates: {"verdict": ..., "u": ..., "v": ..., "pivot": ..., "tried":
// [{"j": ..., "monomial": ...}]}.
json to_json(const ExchangeCertificate& cert);
json to_json(const AdmissibleCertificate& cert);

// Orders serialize as arrays: variable orders as index lists, generator
// orders as arrays of exponent vectors.
json to_json(const VariableOrder& ord);
json order_to_json(const std::vector<Monomial>& ord);
std::vector<Monomial> order_from_json(const json& j, int nvars);
std::vector<Monomial> load_order(const std::string& path, int nvars);

json to_json(const BettiTable& table);
json to_json(const ComponentwiseResult& result);
json to_json(const std::vector<CoverVector>& covers);

}  // namespace midk
