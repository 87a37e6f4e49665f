#pragma once

#include "midk/exchange.hpp"
#include "midk/ideal.hpp"

// Plain serial reference implementations of the hot kernels, written as
// direct transcriptions of the definitions with no prefilters, ranking or
// threading. Kept for differential tests and for the benchmark baseline.
namespace midk::ref {

bool contains(const MonomialIdeal& ideal, const Monomial& m);

std::vector<Monomial> minimalize(std::vector<Monomial> gens);

ExchangeCertificate check_ndep(const MonomialIdeal& ideal);

ExchangeCertificate check_polymatroidal(const MonomialIdeal& ideal);

ExchangeCertificate check_weakly_polymatroidal(const MonomialIdeal& ideal,
                                               const VariableOrder& ord);

}  // namespace midk::ref
