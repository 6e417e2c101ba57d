#include "orbrec/poly_text.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace orbrec {

namespace {

struct Token {
  enum class Kind { Number, Ident, Plus, Minus, Star, Slash, Caret, End };
  Kind kind;
  std::string text;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ >= src_.size()) {
      tok_ = {Token::Kind::End, ""};
      return;
    }
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      tok_ = {Token::Kind::Number, src_.substr(start, pos_ - start)};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      tok_ = {Token::Kind::Ident, src_.substr(start, pos_ - start)};
      return;
    }
    ++pos_;
    switch (c) {
      case '+': tok_ = {Token::Kind::Plus, "+"}; return;
      case '-': tok_ = {Token::Kind::Minus, "-"}; return;
      case '*': tok_ = {Token::Kind::Star, "*"}; return;
      case '/': tok_ = {Token::Kind::Slash, "/"}; return;
      case '^': tok_ = {Token::Kind::Caret, "^"}; return;
      default:
        throw domain_error(std::string("unexpected character '") + c + "' in polynomial");
    }
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  Token tok_;
};

struct ParsedTerm {
  Rational coeff;
  std::vector<std::pair<std::string, unsigned>> powers;
};

unsigned parse_exponent(Lexer& lex) {
  if (lex.peek().kind != Token::Kind::Number)
    throw domain_error("expected exponent after '^'");
  return static_cast<unsigned>(std::stoul(lex.take().text));
}

ParsedTerm parse_term(Lexer& lex) {
  ParsedTerm term;
  term.coeff = 1;
  bool saw_anything = false;

  if (lex.peek().kind == Token::Kind::Number) {
    saw_anything = true;
    Int num(lex.take().text);
    Int den = 1;
    if (lex.peek().kind == Token::Kind::Slash) {
      lex.take();
      if (lex.peek().kind != Token::Kind::Number)
        throw domain_error("expected denominator after '/'");
      den = Int(lex.take().text);
      if (den == 0) throw domain_error("zero denominator in coefficient");
    }
    term.coeff = Rational(num, den);
    if (lex.peek().kind == Token::Kind::Star) lex.take();
  }

  while (lex.peek().kind == Token::Kind::Ident) {
    saw_anything = true;
    std::string name = lex.take().text;
    unsigned e = 1;
    if (lex.peek().kind == Token::Kind::Caret) {
      lex.take();
      e = parse_exponent(lex);
    }
    term.powers.emplace_back(std::move(name), e);
  }

  if (!saw_anything) throw domain_error("expected a term");
  return term;
}

}  // namespace

RatPoly parse_polynomial(const std::string& text, VarNamesPtr vars) {
  Lexer lex(text);
  std::vector<std::pair<Rational, ParsedTerm>> terms;

  bool negative = false;
  if (lex.peek().kind == Token::Kind::Minus) {
    lex.take();
    negative = true;
  } else if (lex.peek().kind == Token::Kind::Plus) {
    lex.take();
  }
  while (true) {
    ParsedTerm t = parse_term(lex);
    terms.emplace_back(negative ? Rational(-1) : Rational(1), std::move(t));
    if (lex.peek().kind == Token::Kind::End) break;
    if (lex.peek().kind == Token::Kind::Plus) {
      negative = false;
    } else if (lex.peek().kind == Token::Kind::Minus) {
      negative = true;
    } else {
      throw domain_error("expected '+' or '-' between terms");
    }
    lex.take();
  }

  if (!vars) {
    std::set<std::string> names;
    for (const auto& [sign, t] : terms)
      for (const auto& [name, e] : t.powers) names.insert(name);
    vars = make_vars(VarNames(names.begin(), names.end()));
  }

  RatPoly p(vars);
  const VarNames& names = *vars;
  for (const auto& [sign, t] : terms) {
    Monomial m(names.size());
    for (const auto& [name, e] : t.powers) {
      auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end())
        throw domain_error("unknown variable '" + name + "' in polynomial");
      std::size_t idx = static_cast<std::size_t>(it - names.begin());
      m = m.with_exponent(idx, m[idx] + e);
    }
    p.add_term(m, sign * t.coeff);
  }
  return p;
}

namespace {

std::string monomial_to_string(const Monomial& m, const VarNames& names) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t v = 0; v < m.arity(); ++v) {
    if (m[v] == 0) continue;
    if (!first) os << " ";
    first = false;
    os << names[v];
    if (m[v] > 1) os << "^" << m[v];
  }
  return os.str();
}

template <typename C>
std::string poly_to_string(const Polynomial<C>& p, bool (*is_negative)(const C&),
                           C (*negate)(const C&), std::string (*coeff_str)(const C&)) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending graded-lex: leading term first.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    bool neg = is_negative(c);
    C mag = neg ? negate(c) : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    std::string mono = monomial_to_string(m, p.var_names());
    if (mono.empty()) {
      os << coeff_str(mag);
    } else if (mag == C(1)) {
      os << mono;
    } else {
      os << coeff_str(mag) << " * " << mono;
    }
  }
  return os.str();
}

}  // namespace

std::string to_string(const RatPoly& p) {
  return poly_to_string<Rational>(
      p, [](const Rational& c) { return c < 0; },
      [](const Rational& c) { return Rational(-c); }, rational_to_string);
}

std::string to_string(const GaussPoly& p) {
  return poly_to_string<GaussianRational>(
      p, [](const GaussianRational& c) { return c.im == 0 && c.re < 0; },
      [](const GaussianRational& c) { return -c; }, gaussian_to_string);
}

}  // namespace orbrec
