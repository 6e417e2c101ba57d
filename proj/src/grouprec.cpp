#include "orbrec/grouprec.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "orbrec/error.hpp"

namespace orbrec::grouprec {

Word free_reduce(Word w) {
  Word out;
  for (int sym : w) {
    if (!out.empty() && out.back() == -sym)
      out.pop_back();
    else
      out.push_back(sym);
  }
  return out;
}

GroupPresentation::GroupPresentation(std::vector<std::string> gens, std::vector<Word> rels)
    : generators(std::move(gens)), relators(std::move(rels)) {
  std::set<std::string> seen;
  for (const auto& g : generators) {
    if (g.empty()) throw domain_error("empty generator name");
    if (!seen.insert(g).second) throw domain_error("duplicate generator '" + g + "'");
  }
  int n = int(generators.size());
  for (const auto& r : relators)
    for (int sym : r)
      if (sym == 0 || sym > n || sym < -n)
        throw domain_error("relator references an unknown generator");
}

std::size_t GroupPresentation::generator_index(const std::string& name) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i] == name) return i;
  throw domain_error("unknown generator '" + name + "'");
}

namespace {

// Longest repeating block: returns (block, count) with word == block^count
// and count maximal.
std::pair<Word, unsigned> periodic_form(const Word& w) {
  for (std::size_t p = 1; p <= w.size(); ++p) {
    if (w.size() % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < w.size() && ok; ++i) ok = w[i] == w[i % p];
    if (ok) return {Word(w.begin(), w.begin() + long(p)), unsigned(w.size() / p)};
  }
  return {w, 1};
}

std::string run_to_string(const std::vector<std::string>& gens, int sym, unsigned count) {
  std::string s = gens[std::size_t(std::abs(sym)) - 1];
  long e = sym > 0 ? long(count) : -long(count);
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

std::string block_to_string(const std::vector<std::string>& gens, const Word& w) {
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!first) os << " ";
    first = false;
    os << run_to_string(gens, w[i], unsigned(j - i));
    i = j;
  }
  return os.str();
}

std::string word_to_string(const std::vector<std::string>& gens, const Word& w) {
  auto [block, count] = periodic_form(w);
  std::string inner = block_to_string(gens, block);
  bool single_run = std::adjacent_find(block.begin(), block.end(),
                                       [](int a, int b) { return a != b; }) == block.end();
  if (count == 1) {
    if (single_run) return inner;
    return "(" + inner + ")";
  }
  if (single_run && block.size() == 1) {
    // A repeated single symbol is just a higher power of that symbol.
    return run_to_string(gens, block[0], unsigned(count));
  }
  return "(" + inner + ")^" + std::to_string(count);
}

}  // namespace

std::string to_text(const GroupPresentation& p) {
  std::vector<Word> rels = p.relators;
  std::sort(rels.begin(), rels.end(), [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::ostringstream os;
  os << "gens:";
  for (const auto& g : p.generators) os << " " << g;
  os << "\nrels:";
  for (const auto& r : rels) os << " " << word_to_string(p.generators, r);
  os << "\n";
  return os.str();
}

namespace {

class PresTokens {
 public:
  explicit PresTokens(const std::string& src) : src_(src) {}

  bool eof() {
    skip_space();
    return pos_ >= src_.size();
  }

  char peek() {
    skip_space();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  char take_char() {
    skip_space();
    return src_[pos_++];
  }

  std::string take_ident() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    if (start == pos_) throw domain_error("expected identifier in presentation");
    return src_.substr(start, pos_ - start);
  }

  long take_int() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < src_.size() && src_[pos_] == '-') ++pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) throw domain_error("expected integer in presentation");
    return std::stol(src_.substr(start, pos_ - start));
  }

 private:
  void skip_space() {
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t')) ++pos_;
  }

  const std::string& src_;
  std::size_t pos_ = 0;
};

Word append_power(const Word& base, long exponent) {
  Word inv(base.rbegin(), base.rend());
  for (int& s : inv) s = -s;
  const Word& unit = exponent >= 0 ? base : inv;
  Word out;
  for (long i = 0; i < std::labs(exponent); ++i) out.insert(out.end(), unit.begin(), unit.end());
  return out;
}

Word parse_word(PresTokens& toks, const std::map<std::string, int>& index);

Word parse_factor(PresTokens& toks, const std::map<std::string, int>& index) {
  Word base;
  if (toks.peek() == '(') {
    toks.take_char();
    base = parse_word(toks, index);
    if (toks.peek() != ')') throw domain_error("expected ')' in presentation");
    toks.take_char();
  } else {
    std::string name = toks.take_ident();
    auto it = index.find(name);
    if (it == index.end()) throw domain_error("unknown generator '" + name + "'");
    base = {it->second};
  }
  long e = 1;
  if (toks.peek() == '^') {
    toks.take_char();
    e = toks.take_int();
  }
  return append_power(base, e);
}

Word parse_word(PresTokens& toks, const std::map<std::string, int>& index) {
  Word out;
  while (true) {
    char c = toks.peek();
    if (c == '\0' || c == ')') break;
    Word f = parse_factor(toks, index);
    out.insert(out.end(), f.begin(), f.end());
  }
  return out;
}

}  // namespace

GroupPresentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> gens;
  std::vector<Word> rels;
  bool saw_gens = false, saw_rels = false;

  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw domain_error("expected 'gens:' or 'rels:' line");
    std::string head = line.substr(0, colon);
    std::string rest = line.substr(colon + 1);
    if (!rest.empty() && rest.back() == '\r') rest.pop_back();

    if (head == "gens") {
      saw_gens = true;
      std::istringstream gs(rest);
      std::string name;
      while (gs >> name) gens.push_back(name);
    } else if (head == "rels") {
      if (!saw_gens) throw domain_error("'rels:' before 'gens:'");
      saw_rels = true;
      std::map<std::string, int> index;
      for (std::size_t i = 0; i < gens.size(); ++i) index[gens[i]] = int(i) + 1;
      PresTokens toks(rest);
      while (!toks.eof()) {
        if (toks.peek() == ')') throw domain_error("unbalanced ')' in presentation");
        Word factor = parse_factor(toks, index);
        rels.push_back(std::move(factor));
      }
    } else {
      throw domain_error("unexpected line '" + head + ":' in presentation");
    }
  }
  if (!saw_gens || !saw_rels) throw domain_error("presentation needs 'gens:' and 'rels:' lines");
  return GroupPresentation(std::move(gens), std::move(rels));
}

LocalSingularityDescriptor LocalSingularityDescriptor::cone_point(unsigned order) {
  if (order == 0) throw domain_error("cone point order must be positive");
  return {Kind::ConePoint, order};
}

LocalSingularityDescriptor LocalSingularityDescriptor::corner_point(unsigned order) {
  if (order == 0 || order % 2 != 0)
    throw domain_error("corner point order must be even and positive");
  return {Kind::CornerPoint, order};
}

GroupPresentation hnd_local_presentation(const LocalSingularityDescriptor& d) {
  switch (d.kind) {
    case LocalSingularityDescriptor::Kind::Regular:
      return hnd_general(GroupPresentation({}, {}), {}, {}, {});
    case LocalSingularityDescriptor::Kind::MirrorEdge:
      return hnd_general(GroupPresentation({}, {}), {"b"}, {}, {});
    case LocalSingularityDescriptor::Kind::ConePoint: {
      GroupPresentation base({"a"}, {});
      return hnd_general(base, {}, {{Word{1}, d.order}}, {});
    }
    case LocalSingularityDescriptor::Kind::CornerPoint: {
      GroupPresentation corner =
          hnd_general(GroupPresentation({}, {}), {"b1", "b2"}, {}, {{"b1", "b2", d.order}});
      return corner;
    }
  }
  throw domain_error("unknown local singularity kind");
}

GroupPresentation hnd_general(
    const GroupPresentation& base, const std::vector<std::string>& mirror_path_classes,
    const std::vector<std::pair<Word, unsigned>>& cone_loops,
    const std::vector<std::tuple<std::string, std::string, unsigned>>& corners) {
  std::vector<std::string> gens = base.generators;
  std::vector<Word> rels = base.relators;
  int base_count = int(base.generators.size());

  std::map<std::string, int> mirror_symbol;
  for (const auto& id : mirror_path_classes) {
    if (mirror_symbol.count(id)) throw domain_error("duplicate mirror path class '" + id + "'");
    gens.push_back(id);
    int sym = int(gens.size());
    mirror_symbol[id] = sym;
    rels.push_back({sym, sym});
  }

  for (const auto& [loop, order] : cone_loops) {
    if (order == 0) throw domain_error("cone order must be positive");
    for (int sym : loop)
      if (sym == 0 || std::abs(sym) > base_count)
        throw domain_error("cone loop word must use base generators");
    rels.push_back(append_power(loop, long(order)));
  }

  for (const auto& [left, right, order] : corners) {
    if (order == 0 || order % 2 != 0)
      throw domain_error("corner order must be even and positive");
    auto li = mirror_symbol.find(left), ri = mirror_symbol.find(right);
    if (li == mirror_symbol.end() || ri == mirror_symbol.end())
      throw domain_error("corner references an unknown mirror path class");
    rels.push_back(append_power({li->second, ri->second}, long(order / 2)));
  }

  return GroupPresentation(std::move(gens), std::move(rels));
}

// ---------------------------------------------------------------------------
// Todd-Coxeter enumeration (HLT strategy, trivial subgroup).

namespace {

constexpr std::size_t kUndef = std::size_t(-1);

class Enumerator {
 public:
  Enumerator(const GroupPresentation& p, std::size_t limit)
      : ngens_(p.generators.size()), limit_(limit) {
    for (const auto& r : p.relators) {
      Word w = free_reduce(r);
      if (!w.empty()) relators_.push_back(std::move(w));
    }
    alloc();  // coset 0
  }

  bool run() {
    for (std::size_t alpha = 0; alpha < table_.size(); ++alpha) {
      if (dead(alpha)) continue;
      for (const Word& w : relators_) {
        if (!scan_and_fill(alpha, w)) return false;  // limit hit
        if (dead(alpha)) break;
      }
      if (dead(alpha)) continue;
      for (std::size_t col = 0; col < 2 * ngens_; ++col) {
        if (table_[alpha][col] == kUndef) {
          std::size_t fresh = alloc();
          if (fresh == kUndef) return false;
          link(alpha, col, fresh);
        }
      }
    }
    return true;
  }

  // Everything below assumes run() returned true.

  std::vector<std::size_t> live_cosets() const {
    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < table_.size(); ++i)
      if (!dead(i)) live.push_back(i);
    return live;
  }

  const std::vector<std::size_t>& row(std::size_t coset) const { return table_[coset]; }

  std::size_t columns() const { return 2 * ngens_; }

  bool closed_under_relators() const {
    for (std::size_t i = 0; i < table_.size(); ++i) {
      if (dead(i)) continue;
      for (std::size_t col = 0; col < 2 * ngens_; ++col)
        if (table_[i][col] == kUndef || dead(table_[i][col])) return false;
      for (const Word& w : relators_) {
        std::size_t c = i;
        for (int sym : w) c = table_[c][column(sym)];
        if (c != i) return false;
      }
    }
    return true;
  }

  static std::size_t column(int sym) {
    return sym > 0 ? 2 * std::size_t(sym - 1) : 2 * std::size_t(-sym - 1) + 1;
  }

 private:
  bool dead(std::size_t c) const { return parent_[c] != c; }

  std::size_t find(std::size_t c) {
    while (parent_[c] != c) {
      parent_[c] = parent_[parent_[c]];
      c = parent_[c];
    }
    return c;
  }

  std::size_t alloc() {
    if (table_.size() >= limit_) return kUndef;
    table_.emplace_back(2 * ngens_, kUndef);
    parent_.push_back(table_.size() - 1);
    return table_.size() - 1;
  }

  void link(std::size_t a, std::size_t col, std::size_t b) {
    table_[a][col] = b;
    table_[b][col ^ 1u] = a;
  }

  // Holt's relator scan: walk forward while defined, backward while defined,
  // then fill the middle with fresh cosets; the meeting entry becomes a
  // deduction or a coincidence.
  bool scan_and_fill(std::size_t alpha, const Word& w) {
    alpha = find(alpha);
    while (true) {
      std::size_t f = alpha;
      std::size_t i = 0;
      while (i < w.size() && table_[f][column(w[i])] != kUndef) {
        f = table_[f][column(w[i])];
        ++i;
      }
      if (i == w.size()) {
        if (f != alpha) coincidence(f, alpha);
        return true;
      }
      std::size_t b = alpha;
      std::size_t j = w.size();
      while (j > i && table_[b][column(-w[j - 1])] != kUndef) {
        b = table_[b][column(-w[j - 1])];
        --j;
      }
      if (j == i) {
        coincidence(f, b);
        return true;
      }
      if (j == i + 1) {
        link(f, column(w[i]), b);
        return true;
      }
      std::size_t fresh = alloc();
      if (fresh == kUndef) return false;
      link(f, column(w[i]), fresh);
      alpha = find(alpha);
      if (dead(alpha)) return true;
    }
  }

  void merge_into_queue(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    queue_.push_back(b);
  }

  void coincidence(std::size_t a, std::size_t b) {
    merge_into_queue(a, b);
    while (!queue_.empty()) {
      std::size_t dead_coset = queue_.front();
      queue_.pop_front();
      for (std::size_t col = 0; col < 2 * ngens_; ++col) {
        std::size_t target = table_[dead_coset][col];
        if (target == kUndef) continue;
        table_[dead_coset][col] = kUndef;
        if (table_[target][col ^ 1u] == dead_coset) table_[target][col ^ 1u] = kUndef;
        // Transfer the edge onto the representatives, merging on clash.
        std::size_t mu = find(dead_coset);
        std::size_t nu = find(target);
        if (table_[mu][col] != kUndef) {
          merge_into_queue(nu, table_[mu][col]);
        } else if (table_[nu][col ^ 1u] != kUndef) {
          merge_into_queue(mu, table_[nu][col ^ 1u]);
        } else {
          table_[mu][col] = nu;
          table_[nu][col ^ 1u] = mu;
        }
      }
    }
  }

  std::size_t ngens_;
  std::size_t limit_;
  std::vector<Word> relators_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> parent_;
  std::deque<std::size_t> queue_;
};

}  // namespace

CosetTable todd_coxeter(const GroupPresentation& p, std::size_t limit) {
  if (limit == 0) throw domain_error("coset limit must be positive");

  CosetTable result;
  Enumerator en(p, limit);
  // Coincidences can re-open rows that were already processed, so sweep
  // until a full verification pass goes through (tiny tables make the extra
  // sweeps cheap).
  for (int pass = 0; pass < 64; ++pass) {
    if (!en.run()) return result;  // Exceeded
    if (en.closed_under_relators()) break;
  }
  if (!en.closed_under_relators())
    throw std::logic_error("coset table failed to close");

  std::vector<std::size_t> live = en.live_cosets();
  std::vector<std::size_t> renumber(live.empty() ? 0 : live.back() + 1, kUndef);
  for (std::size_t i = 0; i < live.size(); ++i) renumber[live[i]] = i;

  result.status = CosetTable::Status::Complete;
  result.order = live.size();
  result.action.assign(live.size(), std::vector<std::size_t>(en.columns(), 0));
  for (std::size_t i = 0; i < live.size(); ++i)
    for (std::size_t col = 0; col < en.columns(); ++col)
      result.action[i][col] = renumber[en.row(live[i])[col]];

  // Shortest representative words via breadth-first search from coset 0.
  result.coset_words.assign(live.size(), Word{});
  std::vector<bool> seen(live.size(), false);
  std::deque<std::size_t> bfs{0};
  seen[0] = true;
  while (!bfs.empty()) {
    std::size_t c = bfs.front();
    bfs.pop_front();
    for (std::size_t col = 0; col < en.columns(); ++col) {
      std::size_t d = result.action[c][col];
      if (seen[d]) continue;
      seen[d] = true;
      int sym = col % 2 == 0 ? int(col / 2) + 1 : -(int(col / 2) + 1);
      result.coset_words[d] = result.coset_words[c];
      result.coset_words[d].push_back(sym);
      bfs.push_back(d);
    }
  }
  return result;
}

std::vector<std::vector<std::size_t>> multiplication_table(const CosetTable& t) {
  if (t.status != CosetTable::Status::Complete)
    throw domain_error("multiplication table needs a complete coset table");
  std::size_t n = t.order;
  std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t c = i;
      for (int sym : t.coset_words[j]) c = t.action[c][Enumerator::column(sym)];
      mul[i][j] = c;
    }
  return mul;
}

namespace {

std::size_t element_order(const std::vector<std::vector<std::size_t>>& mul, std::size_t x) {
  std::size_t acc = x;
  std::size_t ord = 1;
  while (acc != 0) {
    acc = mul[acc][x];
    ++ord;
    if (ord > mul.size()) throw std::logic_error("element order exceeds group order");
  }
  return ord;
}

std::size_t inverse_of(const std::vector<std::vector<std::size_t>>& mul, std::size_t x) {
  for (std::size_t y = 0; y < mul.size(); ++y)
    if (mul[x][y] == 0) return y;
  throw std::logic_error("element without inverse");
}

}  // namespace

std::optional<quotients::IsotropyGroupKind> classify_finite_group(const GroupPresentation& p,
                                                                  std::size_t limit) {
  CosetTable t = todd_coxeter(p, limit);
  if (t.status != CosetTable::Status::Complete) return std::nullopt;
  std::size_t n = t.order;
  if (n == 1) return quotients::IsotropyGroupKind::trivial();

  auto mul = multiplication_table(t);

  if (n == 2) {
    // Z_2 and the order-two dihedral group are isomorphic; the distinction
    // is how many marked mirror generators land on the involution.
    std::size_t involution_generators = 0;
    for (std::size_t g = 0; g < p.generators.size(); ++g)
      if (t.action[0][2 * g] != 0) ++involution_generators;
    if (involution_generators >= 2) return quotients::IsotropyGroupKind::dihedral(1);
    return quotients::IsotropyGroupKind::cyclic(2);
  }

  for (std::size_t x = 0; x < n; ++x)
    if (element_order(mul, x) == n) return quotients::IsotropyGroupKind::cyclic(unsigned(n));

  if (n % 2 == 0) {
    std::size_t k = n / 2;
    for (std::size_t r = 0; r < n; ++r) {
      if (element_order(mul, r) != k) continue;
      std::vector<bool> in_subgroup(n, false);
      std::size_t acc = 0;
      for (std::size_t i = 0; i < k; ++i) {
        in_subgroup[acc] = true;
        acc = mul[acc][r];
      }
      std::size_t r_inv = inverse_of(mul, r);
      for (std::size_t s = 0; s < n; ++s) {
        if (in_subgroup[s] || mul[s][s] != 0) continue;
        if (mul[mul[s][r]][s] == r_inv)
          return quotients::IsotropyGroupKind::dihedral(unsigned(k));
      }
    }
  }
  return std::nullopt;
}

}  // namespace orbrec::grouprec
