#pragma once

#include <cstddef>
#include <cstdint>

namespace midk {

/// Desk-scale limits. Every enumeration-heavy operation checks one of these
/// and throws bound_error instead of running away. Each field can be
/// overridden through the environment variable named in its comment.
struct Bounds {
  /// Cap on |G(I)|*|G(J)| in a pairwise-lcm intersection.
  /// MIDK_BOUND_INTERSECT_PAIRS
  std::uint64_t intersect_pairs = 1'000'000;

  /// Cap on d - mindeg when taking the degree-d component.
  /// MIDK_BOUND_COMPONENT_WINDOW
  std::int64_t component_window = 6;

  /// Max |support(I)| for the exhaustive variable-order search.
  /// MIDK_BOUND_WEAKLY_SEARCH_SUPPORT
  std::size_t weakly_search_support = 8;

  /// Max |G(I)| for the backtracking linear-quotients search.
  /// MIDK_BOUND_LQ_GENERATORS
  std::size_t lq_generators = 14;

  /// Max |G(I)| for Betti tables (lcm-closure bound).
  /// MIDK_BOUND_BETTI_GENERATORS
  std::size_t betti_generators = 12;

  /// Max edge count / vertex count for the special-cycle search.
  /// MIDK_BOUND_TB_EDGES, MIDK_BOUND_TB_VERTICES
  std::size_t tb_edges = 10;
  std::size_t tb_vertices = 12;

  /// Cap on the minimal-cover enumeration box, as the product of per-variable
  /// ranges. MIDK_BOUND_COVER_BOX
  std::uint64_t cover_box = 10'000'000;
};

/// Defaults with any MIDK_BOUND_* environment overrides applied.
Bounds bounds_from_env();

}  // namespace midk
