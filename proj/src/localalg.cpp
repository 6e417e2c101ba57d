#include "orbrec/localalg.hpp"

#include <map>
#include <numeric>

#include "orbrec/error.hpp"

namespace orbrec::localalg {

JacobianIdealGens jacobian_ideal(const RatPoly& f) {
  if (f.arity() == 0) throw domain_error("jacobian ideal needs at least one variable");
  JacobianIdealGens gens;
  for (std::size_t v = 0; v < f.arity(); ++v) gens.generators.push_back(differentiate(f, v));
  return gens;
}

namespace {

// Sparse integer row over the monomial columns, entries sorted by column.
// Column 0 is the constant monomial; the leading entry (lowest column) plays
// the role of the lowest-order term of a power series.
using Entry = std::pair<std::size_t, Int>;
using Row = std::vector<Entry>;

void strip_content(Row& row) {
  Int g = 0;
  for (const auto& [c, v] : row) {
    g = boost::multiprecision::gcd(g, v);
    if (g == 1) break;
  }
  if (g > 1)
    for (auto& [c, v] : row) v /= g;
  if (!row.empty() && row.front().second < 0)
    for (auto& [c, v] : row) v = -v;
}

// row := (pl/g) * row - (lr/g) * pivot, where lr, pl are the leading
// coefficients; cancels the leading column of row against the pivot.
Row combine(const Row& row, const Row& pivot) {
  const Int& lr = row.front().second;
  const Int& pl = pivot.front().second;
  Int g = boost::multiprecision::gcd(lr, pl);
  Int row_scale = pl / g;
  Int piv_scale = lr / g;

  Row out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.emplace_back(row[i].first, row_scale * row[i].second);
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -piv_scale * pivot[j].second);
      ++j;
    } else {
      Int v = row_scale * row[i].second - piv_scale * pivot[j].second;
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  strip_content(out);
  return out;
}

class StaircaseReducer {
 public:
  explicit StaircaseReducer(std::size_t columns) : pivots_(columns) {}

  // Reduces the row's leading column against installed pivots; installs it
  // when the leading column is free.  Returns false for dependent rows.
  bool insert(Row row) {
    while (!row.empty()) {
      const Row* pivot = pivots_[row.front().first].empty() ? nullptr : &pivots_[row.front().first];
      if (!pivot) {
        strip_content(row);
        pivots_[row.front().first] = std::move(row);
        return true;
      }
      row = combine(row, *pivot);
    }
    return false;
  }

  bool in_span(Row row) const {
    while (!row.empty()) {
      const Row& pivot = pivots_[row.front().first];
      if (pivot.empty()) return false;
      row = combine(row, pivot);
    }
    return true;
  }

  bool has_pivot(std::size_t col) const { return !pivots_[col].empty(); }

 private:
  std::vector<Row> pivots_;
};

}  // namespace

TruncatedLocalAlgebra quotient_dimension_truncated(const JacobianIdealGens& gens, unsigned N) {
  if (N == 0) throw domain_error("truncation degree must be positive");
  if (gens.generators.empty()) throw domain_error("generator list is empty");
  std::size_t arity = gens.generators[0].arity();
  for (const auto& g : gens.generators)
    if (g.arity() != arity) throw domain_error("polynomial ring mismatch");

  const std::vector<Monomial> columns = monomials_below_degree(arity, N);
  std::map<Monomial, std::size_t, GrlexLess> column_of;
  for (std::size_t i = 0; i < columns.size(); ++i) column_of.emplace(columns[i], i);

  // Scale each generator to a primitive integer form; the row space over Q
  // is unchanged.
  struct IntGen {
    std::vector<std::pair<Monomial, Int>> terms;
    unsigned min_degree;
  };
  std::vector<IntGen> int_gens;
  for (const auto& g : gens.generators) {
    if (g.is_zero()) continue;
    Int lcm_den = 1;
    for (const auto& [m, c] : g.terms())
      lcm_den = boost::multiprecision::lcm(lcm_den, rat_den(c));
    IntGen ig;
    ig.min_degree = g.min_degree();
    for (const auto& [m, c] : g.terms())
      ig.terms.emplace_back(m, rat_num(c) * (lcm_den / rat_den(c)));
    int_gens.push_back(std::move(ig));
  }

  StaircaseReducer reducer(columns.size());
  for (const auto& ig : int_gens) {
    if (ig.min_degree >= N) continue;
    // Every multiple m * g with some term below the truncation degree.
    for (const Monomial& m : monomials_below_degree(arity, N - ig.min_degree)) {
      Row row;
      for (const auto& [gm, gc] : ig.terms) {
        Monomial prod = m.times(gm);
        auto it = column_of.find(prod);
        if (it != column_of.end()) row.emplace_back(it->second, gc);
      }
      if (row.empty()) continue;
      std::sort(row.begin(), row.end(),
                [](const Entry& a, const Entry& b) { return a.first < b.first; });
      reducer.insert(std::move(row));
    }
  }

  TruncatedLocalAlgebra result;
  result.truncation_degree = N;
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (!reducer.has_pivot(i)) result.standard_monomials.push_back(columns[i]);
  result.dimension = result.standard_monomials.size();

  result.stable = true;
  for (std::size_t i = columns.size(); i-- > 0;) {
    if (columns[i].degree() + 1 < N) break;
    if (!reducer.in_span({{i, Int(1)}})) {
      result.stable = false;
      break;
    }
  }
  return result;
}

MilnorResult milnor_codimension(const RatPoly& f, unsigned degree_cap) {
  if (degree_cap == 0) throw domain_error("degree cap must be positive");
  if (!f.has_zero_linear_part()) throw domain_error("not a critical point");
  JacobianIdealGens gens = jacobian_ideal(f);

  bool all_zero = true;
  for (const auto& g : gens.generators) all_zero = all_zero && g.is_zero();
  if (all_zero) return MilnorResult{};

  // The stability certificate is monotone in N (m^(N-1) <= J implies
  // m^(N'-1) <= J for N' > N), so a doubling probe schedule is sound and
  // avoids re-reducing at every intermediate degree.
  std::vector<unsigned> schedule;
  for (unsigned n = 4; n < degree_cap; n *= 2) schedule.push_back(n);
  schedule.push_back(degree_cap);

  for (unsigned n : schedule) {
    TruncatedLocalAlgebra alg = quotient_dimension_truncated(gens, n);
    if (alg.stable) {
      MilnorResult r;
      r.codimension = alg.dimension;
      r.stabilized_at = n;
      return r;
    }
  }
  return MilnorResult{};
}

}  // namespace orbrec::localalg
