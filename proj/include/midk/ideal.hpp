#pragma once

#include <optional>
#include <vector>

#include "midk/bounds.hpp"
#include "midk/monomial.hpp"
#include "midk/parallel.hpp"

namespace midk {

/// A monomial ideal, held as its unique minimal generating set G(I) in
/// canonical order. The zero ideal has no generators; the unit ideal has the
/// single generator 1. Values are immutable after construction.
class MonomialIdeal {
 public:
  /// Minimalizes, deduplicates and canonically sorts the given generators.
  static MonomialIdeal from_generators(int nvars, std::vector<Monomial> gens);
  static MonomialIdeal zero(int nvars);
  static MonomialIdeal unit(int nvars);

  int vars() const { return nvars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

  /// Membership: some generator divides m.
  bool contains(const Monomial& m) const;

  Exponent min_degree() const;  // requires non-zero
  Exponent max_degree() const;  // requires non-zero
  /// The common generator degree, or nullopt if mixed / zero ideal.
  std::optional<Exponent> equigenerated_degree() const;

  /// Union of generator supports, 1-indexed ascending.
  std::vector<int> support() const;

  bool operator==(const MonomialIdeal& other) const {
    return nvars_ == other.nvars_ && gens_ == other.gens_;
  }

 private:
  int nvars_ = 0;
  std::vector<Monomial> gens_;
  std::vector<std::uint64_t> masks_;  // support prefilter, parallel to gens_
  std::vector<Exponent> degs_;        // cached degrees, parallel to gens_
};

/// Divisibility-minimal, deduplicated, canonically sorted copy of gens.
std::vector<Monomial> minimalize(std::vector<Monomial> gens,
                                 Exec exec = default_execution());

/// Pairwise-lcm intersection. Throws bound_error when
/// |G(I)|*|G(J)| exceeds bounds.intersect_pairs.
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b,
                        const Bounds& bounds = {},
                        Exec exec = default_execution());

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b,
                       Exec exec = default_execution());

/// k-fold product, k >= 1.
MonomialIdeal power(const MonomialIdeal& a, int k,
                    Exec exec = default_execution());

/// All monomials of degree exactly a in the variables indexed by vars
/// (non-empty, 1-indexed). The Veronese m_J^a.
MonomialIdeal veronese(const std::vector<int>& vars, Exponent a, int nvars);

/// The graded maximal ideal (x1,...,xn).
MonomialIdeal maximal_ideal(int nvars);

/// I_<d>: the ideal generated by the degree-d monomials of I. Throws
/// bound_error when d - mindeg exceeds bounds.component_window.
MonomialIdeal component(const MonomialIdeal& ideal, Exponent d,
                        const Bounds& bounds = {});

/// I : m = (g / gcd(g, m) : g in G(I)).
MonomialIdeal colon_monomial(const MonomialIdeal& ideal, const Monomial& m);

}  // namespace midk
