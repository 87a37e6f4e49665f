#pragma once

#include <string>

#include "midk/errors.hpp"
#include "midk/exchange.hpp"
#include "midk/ideal.hpp"
#include "midk/monomial.hpp"

namespace midk {

/// "x1^2*x3" -- factors in increasing variable index, exponent 1 suppressed,
/// the constant monomial rendered as "1".
std::string to_string(const Monomial& m);

/// "(g1, g2, ...)" in canonical order; "(0)" for the zero ideal.
std::string to_string(const MonomialIdeal& ideal);

/// "x2 > x1 > x3".
std::string to_string(const VariableOrder& ord);

/// Parses the to_string(Monomial) grammar. Throws parse_error.
Monomial parse_monomial(const std::string& text, int nvars);

}  // namespace midk
