#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "midk/bounds.hpp"
#include "midk/ideal.hpp"

namespace midk {

/// Graded Betti numbers of the ideal (as a module): beta_{i,j} with i the
/// homological index and j the internal degree. Only nonzero entries are
/// stored.
struct BettiTable {
  std::int64_t prime = 0;
  std::map<std::pair<int, Exponent>, std::int64_t> entries;

  std::int64_t rank(int i, Exponent j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
  /// Largest homological index with a nonzero entry, -1 when empty.
  int max_index() const;
};

/// Multigraded Betti numbers over GF(p), computed as reduced simplicial
/// homology of the Koszul complexes {sigma : m / x^sigma in I} over the lcm
/// closure of G(I), aggregated by total degree. Throws bound_error when
/// |G(I)| exceeds bounds.betti_generators and when p is not prime.
BettiTable betti_table(const MonomialIdeal& ideal, std::int64_t p,
                       const Bounds& bounds = {},
                       Exec exec = default_execution());

inline constexpr std::int64_t kBettiPrimary = 32003;
inline constexpr std::int64_t kBettiCrossCheck = 101;

/// betti_table at the primary prime, cross-checked against the second one.
/// Throws characteristic_dependence_error if the two tables differ.
BettiTable betti_table_checked(const MonomialIdeal& ideal,
                               const Bounds& bounds = {},
                               Exec exec = default_execution());

/// For an ideal generated in one degree d: beta_{i,j} = 0 unless j = i + d.
bool has_linear_resolution(const MonomialIdeal& ideal,
                           const Bounds& bounds = {},
                           Exec exec = default_execution());

struct ComponentReport {
  Exponent degree;
  bool linear;
  std::size_t generator_count;
};

struct ComponentwiseResult {
  bool linear = false;
  std::vector<ComponentReport> components;
};

/// Checks has_linear_resolution(I_<d>) for every d from the minimum to the
/// maximum generator degree.
ComponentwiseResult is_componentwise_linear(const MonomialIdeal& ideal,
                                            const Bounds& bounds = {},
                                            Exec exec = default_execution());

}  // namespace midk
