#pragma once

// Seeded random instance generation shared by the property tests and the
// acceptance suite.

#include <cstdint>
#include <random>
#include <vector>

#include "midk/hypergraph.hpp"
#include "midk/ideal.hpp"

namespace midk::test {

using Rng = std::mt19937_64;

inline int pick(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Monomial random_monomial(Rng& rng, int nvars, Exponent degree);

/// Up to max_gens random generators of degree 1..max_degree, minimalized.
MonomialIdeal random_ideal(Rng& rng, int nvars, int max_gens,
                           Exponent max_degree);

/// Random equigenerated ideal in one degree.
MonomialIdeal random_equigenerated(Rng& rng, int nvars, Exponent degree,
                                   int max_gens);

/// Relabel variables of an ideal by a permutation (perm[i] = image of i+1).
MonomialIdeal relabel(const MonomialIdeal& ideal, const std::vector<int>& perm);

struct SunflowerInstance {
  std::vector<VertexSet> petals;  // J_1..J_s, ascending exponents
  VertexSet disjoint_edge;        // K, possibly empty
  std::vector<Exponent> petal_exponents;
  Exponent disjoint_exponent = 0;
  int nvars = 0;
  MonomialIdeal ideal;
};

/// s <= 4, block sizes <= 3, 1 <= a_1 <= ... <= a_s <= 3, b <= 2.
/// Instances whose minimal generating set exceeds max_generators are
/// resampled to keep the exchange scans at desk scale.
SunflowerInstance random_sunflower(Rng& rng, std::size_t max_generators = 220);

struct ThreeEdgeInstance {
  VertexSet j1, j2, j3;  // J1 ∩ J3 = ∅
  Exponent a1 = 0, a2 = 0, a3 = 0;  // a1 >= a2 >= a3
  int nvars = 0;
  MonomialIdeal ideal;
};

ThreeEdgeInstance random_three_edge(Rng& rng, std::size_t max_generators = 220);

struct PathFamilyInstance {
  std::vector<VertexSet> edges;  // 3 (corollary) or 4 edges
  Exponent exponent = 0;         // the single exponent a
  int nvars = 0;
  MonomialIdeal ideal;
};

PathFamilyInstance random_path_family(Rng& rng, bool four_edges,
                                      std::size_t max_generators = 220);

struct RandomHypergraphInstance {
  WeightedHypergraph hypergraph;
  int k = 1;
};

/// n <= 8, at most 4 edges, weights <= 2, k <= 2.
RandomHypergraphInstance random_cover_instance(Rng& rng);

}  // namespace midk::test
