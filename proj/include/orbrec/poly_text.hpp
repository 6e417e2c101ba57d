#pragma once

#include <optional>
#include <string>

#include "orbrec/poly.hpp"

namespace orbrec {

// Text form of a rational-coefficient polynomial: a signed sum of terms,
// each an optional coefficient (integer or num/den, '*' optional) followed
// by variable powers, e.g. "-s^6 + t^2" or "3/2 * x y^2".
//
// When `vars` is given it fixes the ambient ring and unknown identifiers are
// rejected; otherwise the ring is the sorted set of identifiers that appear.
RatPoly parse_polynomial(const std::string& text, VarNamesPtr vars = nullptr);

// Canonical form: terms in descending graded-lex order, reduced rational
// coefficients, coefficient 1 omitted next to a variable.  parse is a left
// inverse of this.
std::string to_string(const RatPoly& p);

std::string to_string(const GaussPoly& p);

}  // namespace orbrec
