#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbrec/poly.hpp"
#include "orbrec/strata.hpp"

namespace orbrec::quotients {

enum class GroupFamily { Trivial, Cyclic, Dihedral };

// One of the finite subgroups of the planar orthogonal group: the trivial
// group, the rotation group of order k, or the dihedral group of order 2k.
class IsotropyGroupKind {
 public:
  static IsotropyGroupKind trivial() { return IsotropyGroupKind(GroupFamily::Trivial, 1); }
  static IsotropyGroupKind cyclic(unsigned k);
  static IsotropyGroupKind dihedral(unsigned k);

  GroupFamily family() const { return family_; }
  unsigned k() const { return k_; }
  unsigned order() const;
  std::string to_string() const;

  friend bool operator==(const IsotropyGroupKind& a, const IsotropyGroupKind& b) {
    return a.family_ == b.family_ && a.k_ == b.k_;
  }
  friend bool operator!=(const IsotropyGroupKind& a, const IsotropyGroupKind& b) {
    return !(a == b);
  }

 private:
  IsotropyGroupKind(GroupFamily f, unsigned k) : family_(f), k_(k) {}
  GroupFamily family_;
  unsigned k_;
};

IsotropyGroupKind make_group(GroupFamily family, unsigned k);

// Element rho^rot * sigma^refl where rho is the rotation by one k-th turn
// and sigma is conjugation.  Normal form of the dihedral presentation; the
// cyclic group is the refl == false slice.
struct GroupElement {
  unsigned rot = 0;
  bool refl = false;

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.rot == b.rot && a.refl == b.refl;
  }
};

GroupElement multiply(const GroupElement& a, const GroupElement& b, unsigned k);
GroupElement group_identity();
std::vector<GroupElement> group_elements(const IsotropyGroupKind& g);

// Polynomial in complex coordinates (z, conj z) under the substitution
// action of a group element.  A rotation scales the coefficient of
// z^a conj(z)^b by the root of unity zeta^(a-b); the power that cannot be
// folded into Q(i) is carried per term, so equality tests stay exact.
class ZetaPoly {
 public:
  ZetaPoly(unsigned root_order, VarNamesPtr vars);
  static ZetaPoly from_plain(const GaussPoly& p, unsigned root_order);

  unsigned root_order() const { return k_; }
  void add_term(const Monomial& m, const GaussianRational& c, unsigned zeta_power);

  // The polynomial with the residual root-of-unity factors erased; empty
  // when some term still carries an irrational factor.
  std::optional<GaussPoly> to_plain() const;

  friend bool operator==(const ZetaPoly& a, const ZetaPoly& b);
  friend bool operator!=(const ZetaPoly& a, const ZetaPoly& b) { return !(a == b); }

 private:
  unsigned k_;         // order of the root of unity zeta
  unsigned rational_stride_;  // smallest positive s with zeta^s in Q(i)
  VarNamesPtr vars_;
  std::map<Monomial, std::pair<GaussianRational, unsigned>, GrlexLess> terms_;
};

// Substitutes g(z) for z in a two-variable polynomial over (z, conj z).
ZetaPoly act_on_poly(const GroupElement& g, const GaussPoly& p, unsigned k);

bool is_invariant(const GaussPoly& p, const IsotropyGroupKind& g);
// Real-coordinate overload: rewrites p(x, y) over (z, conj z) first.
bool is_invariant(const RatPoly& p, const IsotropyGroupKind& g);

// Change of coordinates x = (z + conj z)/2, y = (z - conj z)/(2i).
GaussPoly real_to_complex(const RatPoly& p);

// Minimal generating set of the invariant polynomials, in coordinates
// (x, y): {x, y} for the trivial group, {Re z^k, Im z^k, |z|^2} for the
// rotation group, {|z|^2, Re z^k} for the dihedral group.
std::vector<RatPoly> invariant_generators(const IsotropyGroupKind& g);

struct SemialgebraicModel {
  VarNamesPtr vars;
  std::vector<RatPoly> equalities;    // each polynomial == 0
  std::vector<RatPoly> inequalities;  // each polynomial >= 0
  std::optional<RatPoly> singular_germ;
};

// The standard embedded model of the orbit space: the dihedral wedge
// {t^2 <= s^(2k), s >= 0} with singular germ t^2 - s^(2k), the cone
// {s^2 + t^2 = u^k, u >= 0} with singular germ s^2 + t^2 - u^k, or the
// unconstrained plane.
SemialgebraicModel semialgebraic_model(const IsotropyGroupKind& g);

// Orbit-type stratification of the model: dihedral quotients get the corner
// point, two mirror curves, and the open stratum; nontrivial rotation
// quotients get the cone point and the open stratum.
strata::StratifiedModel stratify(const IsotropyGroupKind& g);

}  // namespace orbrec::quotients
