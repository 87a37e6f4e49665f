#pragma once

// Brute-force oracles used to pin expected values. Everything here is
// written against the definitions directly and stays independent of the
// library code paths it checks.

#include <cstdint>
#include <vector>

#include "midk/hypergraph.hpp"
#include "midk/ideal.hpp"
#include "midk/monomial.hpp"

namespace midk::test {

/// All monomials of total degree exactly d in n variables.
std::vector<Monomial> monomials_of_degree(int nvars, Exponent d);

/// All monomials of total degree <= d.
std::vector<Monomial> monomials_up_to_degree(int nvars, Exponent d);

/// Membership by scanning a raw generator list.
bool naive_member(const std::vector<Monomial>& gens, const Monomial& m);

/// Checks contains(I ∩ J, m) == contains(I, m) && contains(J, m) for every
/// monomial up to the largest lcm degree. Returns the number of monomials
/// checked; throws on the first discrepancy.
std::size_t check_intersection_membership(const MonomialIdeal& a,
                                          const MonomialIdeal& b,
                                          const MonomialIdeal& meet);

/// Degree-d part of I by full enumeration and minimalization.
std::vector<Monomial> brute_component(const MonomialIdeal& ideal, Exponent d);

/// Alternating sum over non-empty generator subsets with lcm of degree j:
/// sum (-1)^{|T|-1}. Equals sum_i (-1)^i beta_{i,j} for any resolution.
std::int64_t euler_alternating_sum(const MonomialIdeal& ideal, Exponent j);

/// Minimal k-covers by unpruned enumeration over the demand box.
std::vector<CoverVector> brute_minimal_covers(const WeightedHypergraph& h,
                                              int k);

}  // namespace midk::test
