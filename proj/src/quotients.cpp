#include "orbrec/quotients.hpp"

#include <numeric>

#include "orbrec/error.hpp"

namespace orbrec::quotients {

IsotropyGroupKind IsotropyGroupKind::cyclic(unsigned k) {
  if (k == 0) throw domain_error("rotation order must be positive");
  if (k == 1) return trivial();
  return IsotropyGroupKind(GroupFamily::Cyclic, k);
}

IsotropyGroupKind IsotropyGroupKind::dihedral(unsigned k) {
  if (k == 0) throw domain_error("dihedral parameter must be positive");
  return IsotropyGroupKind(GroupFamily::Dihedral, k);
}

unsigned IsotropyGroupKind::order() const {
  switch (family_) {
    case GroupFamily::Trivial: return 1;
    case GroupFamily::Cyclic: return k_;
    case GroupFamily::Dihedral: return 2 * k_;
  }
  return 0;
}

std::string IsotropyGroupKind::to_string() const {
  switch (family_) {
    case GroupFamily::Trivial: return "trivial";
    case GroupFamily::Cyclic: return "cyclic(" + std::to_string(k_) + ")";
    case GroupFamily::Dihedral: return "dihedral(" + std::to_string(k_) + ")";
  }
  return "?";
}

IsotropyGroupKind make_group(GroupFamily family, unsigned k) {
  switch (family) {
    case GroupFamily::Trivial: return IsotropyGroupKind::trivial();
    case GroupFamily::Cyclic: return IsotropyGroupKind::cyclic(k);
    case GroupFamily::Dihedral: return IsotropyGroupKind::dihedral(k);
  }
  throw domain_error("unknown group family");
}

GroupElement group_identity() { return GroupElement{}; }

// Composition as maps of the plane, a applied after b:
// rho^a1 sigma^b1 . rho^a2 sigma^b2 = rho^(a1 +- a2) sigma^(b1 xor b2).
GroupElement multiply(const GroupElement& a, const GroupElement& b, unsigned k) {
  if (k == 0) throw domain_error("rotation order must be positive");
  GroupElement r;
  long rot = long(a.rot) + (a.refl ? -long(b.rot) : long(b.rot));
  rot %= long(k);
  if (rot < 0) rot += long(k);
  r.rot = unsigned(rot);
  r.refl = a.refl != b.refl;
  return r;
}

std::vector<GroupElement> group_elements(const IsotropyGroupKind& g) {
  std::vector<GroupElement> out;
  unsigned k = g.family() == GroupFamily::Trivial ? 1 : g.k();
  for (unsigned a = 0; a < k; ++a) out.push_back({a, false});
  if (g.family() == GroupFamily::Dihedral)
    for (unsigned a = 0; a < k; ++a) out.push_back({a, true});
  return out;
}

ZetaPoly::ZetaPoly(unsigned root_order, VarNamesPtr vars)
    : k_(root_order), vars_(std::move(vars)) {
  if (k_ == 0) throw domain_error("root order must be positive");
  rational_stride_ = k_ / std::gcd(k_, 4u);
}

ZetaPoly ZetaPoly::from_plain(const GaussPoly& p, unsigned root_order) {
  ZetaPoly z(root_order, p.vars());
  for (const auto& [m, c] : p.terms()) z.add_term(m, c, 0);
  return z;
}

void ZetaPoly::add_term(const Monomial& m, const GaussianRational& c, unsigned zeta_power) {
  if (c.is_zero()) return;
  // zeta^(q*s) lies in {1, i, -1, -i} and folds into the coefficient; the
  // remainder r < s is irrational over Q(i) unless zero, so (coeff, r) is a
  // canonical form.
  unsigned e = zeta_power % k_;
  unsigned s = rational_stride_;
  unsigned q = e / s, r = e % s;
  unsigned g = std::gcd(k_, 4u);
  GaussianRational folded = c.times_i_power((4u / g) * q);

  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, std::make_pair(folded, r));
    return;
  }
  auto& [coeff, twist] = it->second;
  if (twist != r)
    throw domain_error("cannot add terms carrying different roots of unity");
  coeff += folded;
  if (coeff.is_zero()) terms_.erase(it);
}

std::optional<GaussPoly> ZetaPoly::to_plain() const {
  GaussPoly p(vars_);
  for (const auto& [m, cr] : terms_) {
    if (cr.second != 0) return std::nullopt;
    p.add_term(m, cr.first);
  }
  return p;
}

bool operator==(const ZetaPoly& a, const ZetaPoly& b) {
  return a.k_ == b.k_ && *a.vars_ == *b.vars_ && a.terms_ == b.terms_;
}

ZetaPoly act_on_poly(const GroupElement& g, const GaussPoly& p, unsigned k) {
  if (p.arity() != 2) throw domain_error("action requires coordinates (z, conj z)");
  if (k == 0) throw domain_error("rotation order must be positive");
  ZetaPoly out(k, p.vars());
  unsigned a = g.rot % k;
  for (const auto& [m, c] : p.terms()) {
    // c z^i conj(z)^j -> c zeta^(a (i - j)) z^i conj(z)^j, exponents swapped
    // by a reflection.
    long diff = long(m[0]) - long(m[1]);
    long e = (long(a) * diff) % long(k);
    if (e < 0) e += long(k);
    Monomial target = g.refl ? Monomial(std::vector<unsigned>{m[1], m[0]}) : m;
    out.add_term(target, c, unsigned(e));
  }
  return out;
}

namespace {

std::vector<GroupElement> generating_set(const IsotropyGroupKind& g) {
  switch (g.family()) {
    case GroupFamily::Trivial: return {};
    case GroupFamily::Cyclic: return {{1, false}};
    case GroupFamily::Dihedral: return {{0, true}, {1, true}};
  }
  return {};
}

unsigned rotation_order(const IsotropyGroupKind& g) {
  return g.family() == GroupFamily::Trivial ? 1 : g.k();
}

}  // namespace

bool is_invariant(const GaussPoly& p, const IsotropyGroupKind& g) {
  unsigned k = rotation_order(g);
  ZetaPoly reference = ZetaPoly::from_plain(p, k);
  for (const GroupElement& gen : generating_set(g))
    if (act_on_poly(gen, p, k) != reference) return false;
  return true;
}

bool is_invariant(const RatPoly& p, const IsotropyGroupKind& g) {
  return is_invariant(real_to_complex(p), g);
}

GaussPoly real_to_complex(const RatPoly& p) {
  if (p.arity() != 2) throw domain_error("real-to-complex change needs two variables");
  VarNamesPtr zvars = make_vars({"z", "zb"});
  GaussPoly z = GaussPoly::variable(zvars, 0);
  GaussPoly zb = GaussPoly::variable(zvars, 1);
  Rational half(1, 2);
  GaussianRational minus_half_i(Rational(0), Rational(-1, 2));
  GaussianRational plus_half_i(Rational(0), Rational(1, 2));
  // x = (z + conj z)/2, y = -i/2 z + i/2 conj z.
  GaussPoly x_image = GaussianRational(half) * (z + zb);
  GaussPoly y_image = minus_half_i * z + plus_half_i * zb;

  GaussPoly source(p.vars());
  for (const auto& [m, c] : p.terms()) source.add_term(m, GaussianRational(c));
  return compose(source, {x_image, y_image});
}

namespace {

// Real and imaginary parts of (x + i y)^k, by binomial expansion over Q(i).
std::pair<RatPoly, RatPoly> z_power_parts(unsigned k) {
  VarNamesPtr xy = make_vars({"x", "y"});
  GaussPoly z = GaussPoly::variable(xy, 0) + gauss_i() * GaussPoly::variable(xy, 1);
  GaussPoly zk = z.pow_truncated(k, k + 1);
  RatPoly re(xy), im(xy);
  for (const auto& [m, c] : zk.terms()) {
    re.add_term(m, c.re);
    im.add_term(m, c.im);
  }
  return {re, im};
}

RatPoly norm_square() {
  VarNamesPtr xy = make_vars({"x", "y"});
  RatPoly x = RatPoly::variable(xy, 0), y = RatPoly::variable(xy, 1);
  return x * x + y * y;
}

}  // namespace

std::vector<RatPoly> invariant_generators(const IsotropyGroupKind& g) {
  switch (g.family()) {
    case GroupFamily::Trivial: {
      VarNamesPtr xy = make_vars({"x", "y"});
      return {RatPoly::variable(xy, 0), RatPoly::variable(xy, 1)};
    }
    case GroupFamily::Cyclic: {
      auto [re, im] = z_power_parts(g.k());
      return {re, im, norm_square()};
    }
    case GroupFamily::Dihedral: {
      auto [re, im] = z_power_parts(g.k());
      return {norm_square(), re};
    }
  }
  throw domain_error("unknown group family");
}

SemialgebraicModel semialgebraic_model(const IsotropyGroupKind& g) {
  SemialgebraicModel model;
  switch (g.family()) {
    case GroupFamily::Trivial: {
      model.vars = make_vars({"x", "y"});
      return model;
    }
    case GroupFamily::Cyclic: {
      model.vars = make_vars({"s", "t", "u"});
      RatPoly s = RatPoly::variable(model.vars, 0);
      RatPoly t = RatPoly::variable(model.vars, 1);
      RatPoly u = RatPoly::variable(model.vars, 2);
      RatPoly germ = s * s + t * t - u.pow_truncated(g.k(), g.k() + 1);
      model.equalities.push_back(germ);
      model.inequalities.push_back(u);
      model.singular_germ = germ;
      return model;
    }
    case GroupFamily::Dihedral: {
      model.vars = make_vars({"s", "t"});
      RatPoly s = RatPoly::variable(model.vars, 0);
      RatPoly t = RatPoly::variable(model.vars, 1);
      RatPoly wedge = s.pow_truncated(2 * g.k(), 2 * g.k() + 1) - t * t;
      model.inequalities.push_back(wedge);
      model.inequalities.push_back(s);
      model.singular_germ = -wedge;
      return model;
    }
  }
  throw domain_error("unknown group family");
}

strata::StratifiedModel stratify(const IsotropyGroupKind& g) {
  strata::StratifiedModel model;
  switch (g.family()) {
    case GroupFamily::Trivial: {
      model.strata.push_back({"open", 0, "open dense stratum", std::nullopt, true});
      return model;
    }
    case GroupFamily::Cyclic: {
      model.strata.push_back({"origin", 2, "cone point", g.order(), false});
      model.strata.push_back({"open", 0, "open dense stratum", std::nullopt, true});
      model.frontier.emplace("origin", "open");
      return model;
    }
    case GroupFamily::Dihedral: {
      model.strata.push_back({"origin", 2, "corner point", g.order(), false});
      model.strata.push_back({"mirror_plus", 1, "mirror curve (upper)", 2u, false});
      model.strata.push_back({"mirror_minus", 1, "mirror curve (lower)", 2u, false});
      model.strata.push_back({"open", 0, "open dense stratum", std::nullopt, true});
      model.frontier.emplace("origin", "mirror_plus");
      model.frontier.emplace("origin", "mirror_minus");
      model.frontier.emplace("origin", "open");
      model.frontier.emplace("mirror_plus", "open");
      model.frontier.emplace("mirror_minus", "open");
      return model;
    }
  }
  throw domain_error("unknown group family");
}

}  // namespace orbrec::quotients
