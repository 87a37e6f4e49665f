#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "midk/bounds.hpp"
#include "midk/ideal.hpp"

namespace midk {

/// Violation of the linear-quotients condition: at the 1-indexed position
/// in the order, the prefix colon ideal has the given generator of
/// degree >= 2.
struct AdmissibleViolation {
  std::size_t position;
  Monomial colon_generator;
};

struct AdmissibleCertificate {
  std::optional<AdmissibleViolation> violation;
  bool holds() const { return !violation.has_value(); }
};

/// Checks that every prefix colon (u_1,...,u_{l-1}) : u_l is generated by
/// variables. ord must be a permutation of G(I).
AdmissibleCertificate is_admissible_order(const MonomialIdeal& ideal,
                                          const std::vector<Monomial>& ord);

struct NdepOrderResult {
  /// Permutation of G(I) with linear quotients (valid when ok()).
  std::vector<Monomial> order;
  /// When the split check fails: a generator of the x_p-free part that is
  /// not contained in the divisible part, witnessing that the ideal lacks
  /// the dual exchange property.
  std::optional<Monomial> obstruction;
  bool ok() const { return !obstruction.has_value(); }
};

/// Builds an admissible order by the recursive split I = x_p*I_1 + I_2:
/// strip the common factor, pick the least variable supported in the
/// lowest-degree generators, split off the generators it divides, verify
/// I_2 is contained in I_1, and recurse on both parts.
NdepOrderResult ndep_admissible_order(const MonomialIdeal& ideal);

/// Backtracking search for any admissible order, memoized on the chosen
/// prefix set (the colon ideal depends only on the set). Returns the
/// lexicographically least order over canonical generator indices, or
/// nullopt after exhausting all prefixes. Throws bound_error when |G(I)|
/// exceeds bounds.lq_generators.
std::optional<std::vector<Monomial>> search_linear_quotients(
    const MonomialIdeal& ideal, const Bounds& bounds = {});

}  // namespace midk
