#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "midk/bounds.hpp"
#include "midk/ideal.hpp"

namespace midk {

/// A total order on the variables, read as descending precedence:
/// sequence()[0] is the greatest variable.
class VariableOrder {
 public:
  /// Validates that vars is a permutation of 1..n.
  static VariableOrder descending(std::vector<int> vars);
  /// x1 > x2 > ... > xn.
  static VariableOrder natural(int nvars);

  int nvars() const { return static_cast<int>(seq_.size()); }
  const std::vector<int>& sequence() const { return seq_; }
  /// Variable at 1-indexed order position.
  int variable_at(int position) const { return seq_[position - 1]; }
  /// 1-indexed position of a variable (1 = greatest).
  int position_of(int var) const { return pos_[var - 1]; }

  bool operator==(const VariableOrder& o) const { return seq_ == o.seq_; }

 private:
  std::vector<int> seq_;
  std::vector<int> pos_;
};

/// One rejected exchange candidate: the index tried (a variable for the
/// degree-based checks, an order position for the weak check) and the
/// resulting monomial that is not in the ideal.
struct TriedExchange {
  int index;
  Monomial candidate;
  bool operator==(const TriedExchange& o) const {
    return index == o.index && candidate == o.candidate;
  }
};

/// A concrete violating tuple. For check_ndep and check_polymatroidal the
/// pivot is a variable index; for check_weakly_polymatroidal it is the order
/// position t of the first differing variable.
struct ExchangeViolation {
  Monomial u;
  Monomial v;
  int pivot = 0;
  std::vector<TriedExchange> tried;
};

struct ExchangeCertificate {
  std::optional<ExchangeViolation> violation;
  bool holds() const { return !violation.has_value(); }
};

/// Non-pure dual exchange property: for u,v in G(I) with deg u <= deg v and
/// every i with deg_{x_i}(v) < deg_{x_i}(u), some j with
/// deg_{x_j}(v) > deg_{x_j}(u) has x_i(v/x_j) in I. Rejects the zero ideal.
ExchangeCertificate check_ndep(const MonomialIdeal& ideal,
                               Exec exec = default_execution());

/// Classic symmetric exchange for equigenerated ideals: for u,v and every i
/// with deg_{x_i}(u) > deg_{x_i}(v), some j with deg_{x_j}(u) < deg_{x_j}(v)
/// has x_j(u/x_i) in I. Throws not_equigenerated_error on mixed degrees.
ExchangeCertificate check_polymatroidal(const MonomialIdeal& ideal,
                                        Exec exec = default_execution());

/// Weak polymatroidality relative to ord: for every pair u >_lex v, with t
/// the first order position where the degrees differ, some strictly smaller
/// variable x_{i_j} dividing v has x_{i_t}(v/x_{i_j}) in I.
ExchangeCertificate check_weakly_polymatroidal(const MonomialIdeal& ideal,
                                               const VariableOrder& ord,
                                               Exec exec = default_execution());

struct WeaklyOrderSearch {
  /// First order (in lexicographic enumeration of support permutations,
  /// non-support variables appended in index order) that satisfies the check.
  std::optional<VariableOrder> order;
  /// Orders examined: rank+1 of the successful order, or the full count.
  std::uint64_t orders_tried = 0;
  /// When exhausted, one violation per order, in enumeration order.
  std::vector<std::pair<VariableOrder, ExchangeViolation>> failures;
  bool found() const { return order.has_value(); }
};

/// Exhaustive search over variable orders. Throws bound_error when
/// |support(I)| exceeds bounds.weakly_search_support.
WeaklyOrderSearch search_weakly_polymatroidal_order(
    const MonomialIdeal& ideal, const Bounds& bounds = {},
    Exec exec = default_execution());

/// Certificate replay: re-run every membership test recorded in (or implied
/// by) the tuple and confirm it is a genuine violation of the property.
/// Returns the full violation (with all rejected candidates) or nullopt if
/// the tuple does not violate.
std::optional<ExchangeViolation> make_ndep_violation(const MonomialIdeal& ideal,
                                                     const Monomial& u,
                                                     const Monomial& v,
                                                     int pivot);
std::optional<ExchangeViolation> make_polymatroidal_violation(
    const MonomialIdeal& ideal, const Monomial& u, const Monomial& v,
    int pivot);
std::optional<ExchangeViolation> make_weakly_violation(
    const MonomialIdeal& ideal, const VariableOrder& ord, const Monomial& u,
    const Monomial& v);

bool replay_ndep_violation(const MonomialIdeal& ideal,
                           const ExchangeViolation& w);
bool replay_polymatroidal_violation(const MonomialIdeal& ideal,
                                    const ExchangeViolation& w);
bool replay_weakly_violation(const MonomialIdeal& ideal,
                             const VariableOrder& ord,
                             const ExchangeViolation& w);

}  // namespace midk
