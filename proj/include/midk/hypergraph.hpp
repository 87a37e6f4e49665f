#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "midk/bounds.hpp"
#include "midk/exchange.hpp"
#include "midk/ideal.hpp"

namespace midk {

/// Sorted, duplicate-free, 1-indexed vertex list.
using VertexSet = std::vector<int>;

struct WeightedEdge {
  VertexSet vertices;
  Exponent weight = 1;
};

/// A hypergraph on [n] with positive integer edge weights. Edges must be
/// non-empty.
class WeightedHypergraph {
 public:
  static WeightedHypergraph create(int vertex_count,
                                   std::vector<WeightedEdge> edges);
  int vertex_count() const { return n_; }
  const std::vector<WeightedEdge>& edges() const { return edges_; }

 private:
  int n_ = 0;
  std::vector<WeightedEdge> edges_;
};

using CoverVector = std::vector<Exponent>;

/// I_k(H,w): intersection over edges J of the Veronese m_J^{k w(J)}.
MonomialIdeal kcover_ideal(const WeightedHypergraph& h, int k,
                           const Bounds& bounds = {},
                           Exec exec = default_execution());

/// Componentwise-minimal vectors c with sum_{i in J} c_i >= k w(J) for every
/// edge, by direct bounded enumeration, independent of the intersection
/// route. Sorted canonically (as exponent vectors).
std::vector<CoverVector> minimal_kcovers(const WeightedHypergraph& h, int k,
                                         const Bounds& bounds = {},
                                         Exec exec = default_execution());

/// An alternating vertex/edge cycle v_1, J_1, ..., v_s, J_s, v_1 with
/// distinct vertices and edges where no edge of the cycle contains more than
/// two cycle vertices.
struct SpecialCycle {
  std::vector<int> vertices;
  std::vector<std::size_t> edge_indices;  // 0-based into edges()
  std::size_t length() const { return vertices.size(); }
};

struct BalanceResult {
  std::optional<SpecialCycle> special_cycle;  // length >= 4 when present
  bool balanced() const { return !special_cycle.has_value(); }
};

/// Totally balanced = no special cycle of length greater than three.
BalanceResult is_totally_balanced(const WeightedHypergraph& h,
                                  const Bounds& bounds = {});

/// Disjoint named blocks of [n] derived from a validated edge family.
struct EdgePartition {
  enum class Kind { sunflower, three_edge, path };
  Kind kind;
  int nvars;
  /// Blocks in their listing order; empty blocks are kept.
  std::vector<std::pair<std::string, VertexSet>> blocks;
  const VertexSet& block(const std::string& label) const;
};

/// Validates J_i ∩ J_j = ∩_t J_t for all i<j and K ∩ J_t = ∅, and returns
/// the blocks B (the common core), A1..As (the private parts) and K.
/// Throws std::invalid_argument naming the offending pair.
EdgePartition validate_sunflower(const std::vector<VertexSet>& petals,
                                 const VertexSet& disjoint_edge, int nvars);

/// Validates the path conditions: for four edges, J1∩J3 = J1∩J4 = J2∩J4 = ∅
/// with J2 ⊆ J1∪J3 and J3 ⊆ J2∪J4; for three edges, J1∩J3 = ∅ with
/// J2 ⊆ J1∪J3. Returns the primed/double-primed blocks.
EdgePartition validate_path_family(const std::vector<VertexSet>& edges,
                                   int nvars);

/// Blocks for a three-edge family with J1 ∩ J3 = ∅, in the listing order
/// used by three_edge_order.
EdgePartition three_edge_partition(const VertexSet& j1, const VertexSet& j2,
                                   const VertexSet& j3, int nvars);

/// The descending variable order that lists the blocks
/// J1∩J2, J1\J2, J2∩J3, J3\J2, J2\(J1∪J3), rest -- first-listed blocks are
/// the greatest variables, ascending index inside each block. Requires
/// J1 ∩ J3 = ∅.
VariableOrder three_edge_order(const VertexSet& j1, const VertexSet& j2,
                               const VertexSet& j3, int nvars);

struct BlockDegrees {
  std::vector<std::pair<std::string, Exponent>> by_block;
  Exponent rest = 0;  // degree outside all blocks
  Exponent of(const std::string& label) const;
};

/// Degree of m restricted to each block of the partition plus the
/// complement; the entries sum to deg(m).
BlockDegrees factor_degrees(const EdgePartition& partition, const Monomial& m);

}  // namespace midk
