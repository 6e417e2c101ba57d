#pragma once

#include <cstdio>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "orbrec/grouprec.hpp"
#include "orbrec/poly.hpp"
#include "orbrec/rational.hpp"

namespace testsupport {

// ----- subprocess driver for the command-line binary ------------------------

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline void spill(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

// Runs the binary through the shell; env is an optional VAR=value prefix.
inline CliResult run_cli(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  std::string tag = std::to_string(++counter);
  std::string out_path = "cli_stdout_" + tag + ".tmp";
  std::string err_path = "cli_stderr_" + tag + ".tmp";
  std::string cmd = (env.empty() ? std::string() : env + " ") + "'" + ORBREC_BIN + "' " + args +
                    " > " + out_path + " 2> " + err_path;
  int status = std::system(cmd.c_str());
  CliResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

// ----- random coordinate changes --------------------------------------------

// Invertible polynomial substitution with no constant terms: the linear part
// is a product of elementary integer row operations (determinant +-1, entries
// kept within [-3, 3]) and each image may carry a few degree-2 or degree-3
// terms with coefficients in [-3, 3].
inline std::vector<orbrec::RatPoly> random_substitution(const orbrec::VarNamesPtr& vars,
                                                        std::mt19937& rng,
                                                        unsigned max_degree = 3) {
  using orbrec::Monomial;
  using orbrec::RatPoly;
  using orbrec::Rational;

  std::size_t n = vars->size();
  std::vector<std::vector<int>> lin(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) lin[i][i] = 1;
  std::uniform_int_distribution<int> pick(0, int(n) - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int step = 0; step < 8; ++step) {
    int i = pick(rng), j = pick(rng);
    if (i == j) {
      for (auto& e : lin[std::size_t(i)]) e = -e;
      continue;
    }
    int s = coin(rng) ? 1 : -1;
    bool bounded = true;
    for (std::size_t c = 0; c < n; ++c)
      if (std::abs(lin[std::size_t(i)][c] + s * lin[std::size_t(j)][c]) > 3) bounded = false;
    if (!bounded) continue;
    for (std::size_t c = 0; c < n; ++c) lin[std::size_t(i)][c] += s * lin[std::size_t(j)][c];
  }

  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<unsigned> extra_terms(0, 2);
  std::vector<RatPoly> images;
  for (std::size_t i = 0; i < n; ++i) {
    RatPoly p = RatPoly::zero(vars);
    for (std::size_t j = 0; j < n; ++j)
      if (lin[i][j]) p = p + Rational(lin[i][j]) * RatPoly::variable(vars, j);
    unsigned extras = extra_terms(rng);
    for (unsigned t = 0; t < extras; ++t) {
      unsigned deg = 2 + (max_degree >= 3 ? (rng() & 1u) : 0u);
      std::vector<unsigned> exps(n, 0);
      for (unsigned d = 0; d < deg; ++d) exps[std::size_t(pick(rng))]++;
      // Skip a monomial already present so coefficients stay within [-3, 3].
      if (p.terms().count(Monomial(exps))) continue;
      int c = coeff(rng);
      if (c != 0) p.add_term(Monomial(exps), Rational(c));
    }
    images.push_back(std::move(p));
  }
  return images;
}

// Determinant of the degree-1 coefficient matrix, for checking that a
// substitution really is invertible at the origin.
inline orbrec::Rational linear_part_determinant(const std::vector<orbrec::RatPoly>& images) {
  std::size_t n = images.size();
  std::vector<std::vector<orbrec::Rational>> a(n, std::vector<orbrec::Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = images[i].linear_coefficient(j);

  orbrec::Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return orbrec::Rational(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      orbrec::Rational factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  return det;
}

// ----- independent group-table oracle ----------------------------------------

// Re-derives everything a closed coset table claims, by permutation
// arithmetic that shares no code with the enumerator: the generator columns
// must be permutations, the relators must act trivially, coset 0 must reach
// everything, the permutation group generated by the columns must have
// exactly `order` elements, and the induced multiplication table must
// satisfy the group axioms.
struct OracleReport {
  bool ok = true;
  std::string failure;
  std::size_t permutation_group_order = 0;
};

inline OracleReport table_oracle(const orbrec::grouprec::GroupPresentation& p,
                                 const orbrec::grouprec::CosetTable& t) {
  using orbrec::grouprec::Word;
  OracleReport rep;
  auto fail = [&](const std::string& why) {
    rep.ok = false;
    if (rep.failure.empty()) rep.failure = why;
  };

  std::size_t n = t.order;
  if (t.action.size() != n) {
    fail("action row count mismatch");
    return rep;
  }

  std::vector<std::vector<std::size_t>> perms;
  for (std::size_t g = 0; g < p.generators.size(); ++g) {
    std::vector<std::size_t> fwd(n), bwd(n);
    std::vector<bool> hit(n, false);
    for (std::size_t c = 0; c < n; ++c) {
      fwd[c] = t.action[c][2 * g];
      bwd[c] = t.action[c][2 * g + 1];
      if (fwd[c] >= n || bwd[c] >= n) {
        fail("column entry out of range");
        return rep;
      }
      hit[fwd[c]] = true;
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (!hit[c]) fail("generator column is not a permutation");
      if (bwd[fwd[c]] != c) fail("inverse column does not invert");
    }
    perms.push_back(std::move(fwd));
  }

  auto apply_word = [&](std::size_t c, const Word& w) {
    for (int sym : w) {
      std::size_t g = std::size_t(std::abs(sym)) - 1;
      c = t.action[c][sym > 0 ? 2 * g : 2 * g + 1];
    }
    return c;
  };
  for (const Word& r : p.relators)
    for (std::size_t c = 0; c < n; ++c)
      if (apply_word(c, r) != c) fail("relator does not act trivially");

  std::vector<bool> reached(n, false);
  std::deque<std::size_t> bfs{0};
  reached[0] = true;
  std::size_t count = 1;
  while (!bfs.empty()) {
    std::size_t c = bfs.front();
    bfs.pop_front();
    for (std::size_t col = 0; col < t.action[c].size(); ++col) {
      std::size_t d = t.action[c][col];
      if (!reached[d]) {
        reached[d] = true;
        ++count;
        bfs.push_back(d);
      }
    }
  }
  if (count != n) fail("coset 0 does not reach every coset");

  std::vector<std::size_t> identity(n);
  for (std::size_t i = 0; i < n; ++i) identity[i] = i;
  std::set<std::vector<std::size_t>> group{identity};
  std::deque<std::vector<std::size_t>> queue{identity};
  while (!queue.empty()) {
    std::vector<std::size_t> cur = queue.front();
    queue.pop_front();
    for (const auto& gp : perms) {
      std::vector<std::size_t> next(n);
      for (std::size_t i = 0; i < n; ++i) next[i] = gp[cur[i]];
      if (group.insert(next).second) queue.push_back(std::move(next));
    }
  }
  rep.permutation_group_order = group.size();
  if (group.size() != n) fail("permutation group order differs from the coset count");

  std::vector<std::vector<std::size_t>> mul = orbrec::grouprec::multiplication_table(t);
  for (std::size_t i = 0; i < n; ++i) {
    if (mul[0][i] != i || mul[i][0] != i) fail("identity row or column broken");
    bool has_inverse = false;
    for (std::size_t j = 0; j < n; ++j)
      if (mul[i][j] == 0 && mul[j][i] == 0) has_inverse = true;
    if (!has_inverse) fail("element without a two-sided inverse");
  }
  if (n <= 24) {
    for (std::size_t a = 0; a < n && rep.ok; ++a)
      for (std::size_t b = 0; b < n && rep.ok; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) {
            fail("associativity violated");
            break;
          }
  }
  return rep;
}

}  // namespace testsupport
