#pragma once

#include <optional>
#include <vector>

#include "orbrec/poly.hpp"

namespace orbrec::localalg {

struct JacobianIdealGens {
  std::vector<RatPoly> generators;  // one partial derivative per variable
};

JacobianIdealGens jacobian_ideal(const RatPoly& f);

// The quotient of the power-series algebra by (generators + all terms of
// degree >= truncation_degree), computed by exact row reduction over the
// monomials of degree < truncation_degree.
struct TruncatedLocalAlgebra {
  unsigned truncation_degree;
  std::vector<Monomial> standard_monomials;  // quotient basis, ascending graded-lex
  std::size_t dimension;                     // == standard_monomials.size()
  // True when every monomial of degree truncation_degree - 1 lies in the
  // span of the truncated generator multiples.  By the Nakayama argument
  // m^(N-1) <= J + m^N forces m^(N-1) <= J, so a stable result equals the
  // untruncated quotient dimension.
  bool stable;
};

TruncatedLocalAlgebra quotient_dimension_truncated(const JacobianIdealGens& gens, unsigned N);

inline constexpr unsigned kDefaultDegreeCap = 64;

struct MilnorResult {
  // Empty when the quotient never stabilizes below the degree cap, i.e. the
  // codimension is infinite (non-isolated singular point).
  std::optional<std::size_t> codimension;
  // Truncation degree at which the stability certificate held.
  unsigned stabilized_at = 0;

  bool is_finite() const { return codimension.has_value(); }
};

// Codimension of the germ at the origin: dim of the function algebra modulo
// the ideal of partial derivatives, constants included.  Requires a critical
// point (zero linear part); the constant term is irrelevant.
MilnorResult milnor_codimension(const RatPoly& f, unsigned degree_cap = kDefaultDegreeCap);

}  // namespace orbrec::localalg
