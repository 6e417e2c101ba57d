#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "orbrec/error.hpp"
#include "orbrec/rational.hpp"

namespace orbrec {

using VarNames = std::vector<std::string>;
using VarNamesPtr = std::shared_ptr<const VarNames>;

inline VarNamesPtr make_vars(VarNames names) {
  return std::make_shared<const VarNames>(std::move(names));
}

// Exponent vector of fixed arity.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
  explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

  std::size_t arity() const { return exps_.size(); }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0u); }
  bool is_constant() const { return degree() == 0; }
  const std::vector<unsigned>& exponents() const { return exps_; }

  Monomial with_exponent(std::size_t var, unsigned e) const {
    Monomial m = *this;
    m.exps_[var] = e;
    return m;
  }

  Monomial times(const Monomial& o) const {
    Monomial m = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_[i] += o.exps_[i];
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

 private:
  std::vector<unsigned> exps_;
};

// Graded lexicographic order: total degree first, then lexicographic on the
// exponent vector.  Used for term maps, column indexing, and serialization.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exponents() < b.exponents();
  }
};

// All monomials of the given arity with total degree < bound, ascending in
// graded-lex order.  This is the canonical column enumeration for the
// truncated linear algebra.
std::vector<Monomial> monomials_below_degree(std::size_t arity, unsigned bound);

template <typename C>
class Polynomial {
 public:
  using TermMap = std::map<Monomial, C, GrlexLess>;

  explicit Polynomial(VarNamesPtr vars) : vars_(std::move(vars)) {}

  static Polynomial zero(VarNamesPtr vars) { return Polynomial(std::move(vars)); }

  static Polynomial constant(VarNamesPtr vars, C value) {
    Polynomial p(std::move(vars));
    p.add_term(Monomial(p.arity()), std::move(value));
    return p;
  }

  static Polynomial variable(VarNamesPtr vars, std::size_t index) {
    Polynomial p(vars);
    if (index >= p.arity()) throw domain_error("variable index out of range");
    p.add_term(Monomial(p.arity()).with_exponent(index, 1), C(1));
    return p;
  }

  const VarNamesPtr& vars() const { return vars_; }
  const VarNames& var_names() const { return *vars_; }
  std::size_t arity() const { return vars_->size(); }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  unsigned total_degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
  }

  // Smallest total degree among the terms; only meaningful when nonzero.
  unsigned min_degree() const {
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
  }

  void add_term(const Monomial& m, C coeff) {
    if (m.arity() != arity()) throw domain_error("monomial arity mismatch");
    if (coeff_is_zero(coeff)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, std::move(coeff));
    } else {
      it->second += coeff;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  C coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? C() : it->second;
  }

  C constant_term() const { return coefficient(Monomial(arity())); }

  C linear_coefficient(std::size_t var) const {
    return coefficient(Monomial(arity()).with_exponent(var, 1));
  }

  bool has_zero_linear_part() const {
    for (std::size_t v = 0; v < arity(); ++v)
      if (!coeff_is_zero(linear_coefficient(v))) return false;
    return true;
  }

  // Drops all terms of total degree >= bound.
  Polynomial truncated(unsigned bound) const {
    Polynomial r(vars_);
    for (const auto& [m, c] : terms_)
      if (m.degree() < bound) r.terms_.emplace(m, c);
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    a.check_same_ring(b);
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    a.check_same_ring(b);
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
  }

  friend Polynomial operator-(const Polynomial& a) {
    Polynomial r(a.vars_);
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    return multiply_truncated(a, b, 0);
  }

  friend Polynomial operator*(const C& s, const Polynomial& p) {
    Polynomial r(p.vars_);
    for (const auto& [m, c] : p.terms_) r.add_term(m, s * c);
    return r;
  }

  // bound == 0 means no truncation.
  static Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b, unsigned bound) {
    a.check_same_ring(b);
    Polynomial r(a.vars_);
    for (const auto& [ma, ca] : a.terms_) {
      if (bound && ma.degree() >= bound) continue;
      for (const auto& [mb, cb] : b.terms_) {
        if (bound && ma.degree() + mb.degree() >= bound) continue;
        r.add_term(ma.times(mb), ca * cb);
      }
    }
    return r;
  }

  Polynomial pow_truncated(unsigned e, unsigned bound) const {
    Polynomial r = constant(vars_, C(1));
    Polynomial base = bound ? truncated(bound) : *this;
    while (e > 0) {
      if (e & 1u) r = multiply_truncated(r, base, bound);
      base = (e >>= 1u) ? multiply_truncated(base, base, bound) : base;
    }
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return *a.vars_ == *b.vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  void check_same_ring(const Polynomial& o) const {
    if (vars_ != o.vars_ && *vars_ != *o.vars_)
      throw domain_error("polynomial ring mismatch");
  }

 private:
  VarNamesPtr vars_;
  TermMap terms_;
};

using RatPoly = Polynomial<Rational>;
using GaussPoly = Polynomial<GaussianRational>;

template <typename C>
Polynomial<C> differentiate(const Polynomial<C>& p, std::size_t var) {
  if (var >= p.arity()) throw domain_error("differentiation variable out of range");
  Polynomial<C> r(p.vars());
  for (const auto& [m, c] : p.terms()) {
    unsigned e = m[var];
    if (e == 0) continue;
    r.add_term(m.with_exponent(var, e - 1), c * C(int(e)));
  }
  return r;
}

// Substitutes images[i] for variable i and truncates: every term of total
// degree >= bound is dropped.  Images must share one target ring and, since
// the substitution must map the origin to the origin, have zero constant
// term.
template <typename C>
Polynomial<C> compose_truncate(const Polynomial<C>& f,
                               const std::vector<Polynomial<C>>& images,
                               unsigned bound) {
  if (images.size() != f.arity())
    throw domain_error("substitution must provide one image per variable");
  if (bound == 0) throw domain_error("truncation bound must be positive");
  for (std::size_t i = 1; i < images.size(); ++i) images[0].check_same_ring(images[i]);
  for (const auto& img : images)
    if (!coeff_is_zero(img.constant_term()))
      throw domain_error("substitution image has nonzero constant term");

  VarNamesPtr target = f.arity() ? images[0].vars() : f.vars();
  Polynomial<C> result(target);

  // Memoized truncated powers, one ladder per variable.
  std::vector<std::vector<Polynomial<C>>> powers(f.arity());
  auto power = [&](std::size_t v, unsigned e) -> const Polynomial<C>& {
    auto& ladder = powers[v];
    if (ladder.empty()) ladder.push_back(Polynomial<C>::constant(target, C(1)));
    while (ladder.size() <= e)
      ladder.push_back(Polynomial<C>::multiply_truncated(ladder.back(), images[v], bound));
    return ladder[e];
  };

  for (const auto& [m, c] : f.terms()) {
    // Each image has min degree >= 1, so a source term of degree >= bound
    // cannot contribute below the bound.
    if (m.degree() >= bound && !m.is_constant()) continue;
    Polynomial<C> term = Polynomial<C>::constant(target, c);
    for (std::size_t v = 0; v < f.arity(); ++v)
      if (m[v] > 0) term = Polynomial<C>::multiply_truncated(term, power(v, m[v]), bound);
    for (const auto& [tm, tc] : term.terms()) result.add_term(tm, tc);
  }
  return result.truncated(bound);
}

// Untruncated composition; the bound is derived from the degrees involved.
template <typename C>
Polynomial<C> compose(const Polynomial<C>& f, const std::vector<Polynomial<C>>& images) {
  unsigned growth = 1;
  for (const auto& img : images) growth = std::max(growth, img.total_degree());
  return compose_truncate(f, images, f.total_degree() * growth + 1);
}

// Rank of the matrix of degree-1 coefficients (rows = polynomials, columns =
// variables).  Gives the number of independent linear parts at the origin.
std::size_t jacobian_rank_at_zero(const std::vector<RatPoly>& polys);

}  // namespace orbrec
