#include "orbrec/poly.hpp"

#include <sstream>

namespace orbrec {

std::string rational_to_string(const Rational& q) {
  std::ostringstream os;
  os << rat_num(q);
  if (rat_den(q) != 1) os << "/" << rat_den(q);
  return os.str();
}

std::string gaussian_to_string(const GaussianRational& c) {
  if (c.im == 0) return rational_to_string(c.re);
  std::ostringstream os;
  os << "(" << rational_to_string(c.re);
  os << (c.im < 0 ? " - " : " + ");
  Rational mag = c.im < 0 ? Rational(-c.im) : c.im;
  if (mag != 1) os << rational_to_string(mag) << " ";
  os << "i)";
  return os.str();
}

namespace {

void enumerate_rec(std::vector<unsigned>& exps, std::size_t pos, unsigned remaining,
                   std::vector<Monomial>& out) {
  if (pos + 1 == exps.size()) {
    exps[pos] = remaining;
    out.emplace_back(exps);
    return;
  }
  for (unsigned e = 0; e <= remaining; ++e) {
    exps[pos] = e;
    enumerate_rec(exps, pos + 1, remaining - e, out);
  }
}

}  // namespace

std::vector<Monomial> monomials_below_degree(std::size_t arity, unsigned bound) {
  std::vector<Monomial> out;
  if (arity == 0) {
    if (bound > 0) out.emplace_back(std::vector<unsigned>{});
    return out;
  }
  std::vector<unsigned> exps(arity, 0);
  for (unsigned d = 0; d < bound; ++d) {
    std::vector<Monomial> level;
    enumerate_rec(exps, 0, d, level);
    std::sort(level.begin(), level.end(),
              [](const Monomial& a, const Monomial& b) { return GrlexLess{}(a, b); });
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::size_t jacobian_rank_at_zero(const std::vector<RatPoly>& polys) {
  if (polys.empty()) return 0;
  std::size_t nvars = polys[0].arity();
  std::vector<std::vector<Rational>> rows;
  for (const auto& p : polys) {
    if (p.arity() != nvars) throw domain_error("polynomial ring mismatch");
    std::vector<Rational> row(nvars);
    bool nonzero = false;
    for (std::size_t v = 0; v < nvars; ++v) {
      row[v] = p.linear_coefficient(v);
      nonzero = nonzero || row[v] != 0;
    }
    if (nonzero) rows.push_back(std::move(row));
  }

  std::size_t rank = 0;
  for (std::size_t col = 0; col < nvars && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      Rational factor = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < nvars; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace orbrec
