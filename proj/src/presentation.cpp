#include "grlie/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace grlie {

std::shared_ptr<const BracketTree> BracketTree::leaf(int gen) {
  auto t = std::make_shared<BracketTree>();
  t->gen_ = gen;
  t->degree_ = 1;
  return t;
}

std::shared_ptr<const BracketTree> BracketTree::node(BracketPtr l, BracketPtr r) {
  auto t = std::make_shared<BracketTree>();
  t->gen_ = -1;
  t->degree_ = l->degree() + r->degree();
  t->l_ = std::move(l);
  t->r_ = std::move(r);
  return t;
}

std::string BracketTree::str(const std::vector<std::string>& names) const {
  if (is_leaf()) return names[static_cast<std::size_t>(gen_)];
  return "[" + l_->str(names) + "," + r_->str(names) + "]";
}

std::string LieExpr::str(const std::vector<std::string>& names) const {
  std::string s;
  for (const auto& t : terms) {
    mpq_class c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (c != 1) s += c.get_str() + "*";
    s += t.word->str(names);
  }
  return s.empty() ? "0" : s;
}

int LiePresentation::generator_index(std::string_view n) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i] == n) return static_cast<int>(i);
  return -1;
}

std::string LiePresentation::str() const {
  std::string s = "algebra " + name + " { generators = ";
  for (std::size_t i = 0; i < generators.size(); ++i)
    s += (i ? "," : "") + generators[i];
  s += ";";
  if (!relations.empty()) {
    s += " relations = ";
    for (std::size_t i = 0; i < relations.size(); ++i)
      s += (i ? ", " : "") + relations[i].str(generators);
    s += ";";
  }
  s += " truncation = " + std::to_string(truncation) + "; }";
  return s;
}

const LiePresentation* PresentationFile::find(std::string_view name) const {
  for (const auto& p : stanzas)
    if (p.name == name) return &p;
  return nullptr;
}

namespace {

struct Token {
  enum Kind { Ident, Int, Sym, End } kind;
  std::string text;
  int line, col;
};

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }
  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

private:
  void advance() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {  // comment to end of line
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
        continue;
      }
      if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++col_;
        ++pos_;
        continue;
      }
      break;
    }
    if (pos_ >= src_.size()) {
      tok_ = {Token::End, "", line_, col_};
      return;
    }
    int line = line_, col = col_;
    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                    src_[pos_] == '_')) {
        ++pos_;
        ++col_;
      }
      tok_ = {Token::Ident, std::string(src_.substr(start, pos_ - start)), line, col};
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
        ++col_;
      }
      tok_ = {Token::Int, std::string(src_.substr(start, pos_ - start)), line, col};
      return;
    }
    ++pos_;
    ++col_;
    tok_ = {Token::Sym, std::string(1, c), line, col};
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

class Parser {
public:
  explicit Parser(std::string_view src) : lex_(src) {}

  PresentationFile parse_file() {
    PresentationFile out;
    if (lex_.peek().kind == Token::Ident && lex_.peek().text == "field") {
      lex_.take();
      expect_sym("=");
      out.header_field = parse_field();
    }
    while (lex_.peek().kind != Token::End) out.stanzas.push_back(parse_stanza(out.header_field));
    if (out.stanzas.empty()) fail("expected at least one algebra stanza");
    std::set<std::string> names;
    for (const auto& s : out.stanzas)
      if (!names.insert(s.name).second) fail("duplicate algebra name '" + s.name + "'");
    return out;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(lex_.peek().line, lex_.peek().col, msg);
  }

  void expect_sym(const std::string& s) {
    Token t = lex_.take();
    if (t.kind != Token::Sym || t.text != s)
      throw ParseError(t.line, t.col, "expected '" + s + "', found '" + t.text + "'");
  }

  std::string expect_ident(const char* what) {
    Token t = lex_.take();
    if (t.kind != Token::Ident)
      throw ParseError(t.line, t.col, std::string("expected ") + what);
    return t.text;
  }

  long expect_int(const char* what) {
    Token t = lex_.take();
    if (t.kind != Token::Int)
      throw ParseError(t.line, t.col, std::string("expected ") + what);
    return std::stol(t.text);
  }

  void expect_keyword(const std::string& kw) {
    Token t = lex_.take();
    if (t.kind != Token::Ident || t.text != kw)
      throw ParseError(t.line, t.col, "expected '" + kw + "'");
  }

  Field parse_field() {
    Token t = lex_.take();
    if (t.kind == Token::Ident && t.text == "Q") return Field::rationals();
    if (t.kind == Token::Ident && t.text == "F") {
      long p = expect_int("prime modulus");
      try {
        return Field::prime_field(static_cast<std::uint64_t>(p));
      } catch (const FieldError& e) {
        throw ParseError(t.line, t.col, e.what());
      }
    }
    throw ParseError(t.line, t.col, "expected field 'Q' or 'F <p>'");
  }

  LiePresentation parse_stanza(const std::optional<Field>& header_field) {
    expect_keyword("algebra");
    LiePresentation pres;
    pres.field = header_field.value_or(Field::rationals());
    pres.name = expect_ident("algebra name");
    expect_sym("{");
    expect_keyword("generators");
    expect_sym("=");
    pres.generators.push_back(expect_ident("generator name"));
    while (lex_.peek().kind == Token::Sym && lex_.peek().text == ",") {
      lex_.take();
      pres.generators.push_back(expect_ident("generator name"));
    }
    expect_sym(";");
    std::set<std::string> seen(pres.generators.begin(), pres.generators.end());
    if (seen.size() != pres.generators.size()) fail("generator names are not distinct");

    if (lex_.peek().kind == Token::Ident && lex_.peek().text == "relations") {
      lex_.take();
      expect_sym("=");
      pres.relations.push_back(parse_expr(pres));
      while (lex_.peek().kind == Token::Sym && lex_.peek().text == ",") {
        lex_.take();
        pres.relations.push_back(parse_expr(pres));
      }
      expect_sym(";");
    }
    if (lex_.peek().kind == Token::Ident && lex_.peek().text == "truncation") {
      lex_.take();
      expect_sym("=");
      long n = expect_int("truncation bound");
      if (n < 2) fail("truncation must be at least 2");
      pres.truncation = static_cast<int>(n);
      expect_sym(";");
    }
    expect_sym("}");
    for (const auto& r : pres.relations) {
      if (r.degree > pres.truncation)
        fail("relation degree " + std::to_string(r.degree) + " exceeds truncation " +
             std::to_string(pres.truncation));
    }
    return pres;
  }

  LieExpr parse_expr(const LiePresentation& pres) {
    LieExpr expr;
    bool neg = false;
    if (lex_.peek().kind == Token::Sym && (lex_.peek().text == "-" || lex_.peek().text == "+")) {
      neg = lex_.take().text == "-";
    }
    expr.terms.push_back(parse_term(pres, neg));
    while (lex_.peek().kind == Token::Sym &&
           (lex_.peek().text == "+" || lex_.peek().text == "-")) {
      bool minus = lex_.take().text == "-";
      expr.terms.push_back(parse_term(pres, minus));
    }
    expr.degree = expr.terms.front().word->degree();
    for (const auto& t : expr.terms) {
      if (t.word->degree() != expr.degree) fail("inhomogeneous relation");
    }
    if (expr.degree < 2) fail("relation must have degree at least 2");
    return expr;
  }

  LieTerm parse_term(const LiePresentation& pres, bool negated) {
    mpq_class coeff = 1;
    if (lex_.peek().kind == Token::Int) {
      long num = expect_int("coefficient");
      long den = 1;
      if (lex_.peek().kind == Token::Sym && lex_.peek().text == "/") {
        lex_.take();
        den = expect_int("denominator");
        if (den == 0) fail("zero denominator");
      }
      coeff = mpq_class(num, den);
      coeff.canonicalize();
      expect_sym("*");
    }
    if (negated) coeff = -coeff;
    return LieTerm{coeff, parse_bracket(pres)};
  }

  BracketPtr parse_bracket(const LiePresentation& pres) {
    Token t = lex_.peek();
    if (t.kind == Token::Ident) {
      lex_.take();
      int g = pres.generator_index(t.text);
      if (g < 0) throw ParseError(t.line, t.col, "unknown generator '" + t.text + "'");
      return BracketTree::leaf(g);
    }
    if (t.kind == Token::Sym && t.text == "[") {
      lex_.take();
      BracketPtr l = parse_bracket(pres);
      expect_sym(",");
      BracketPtr r = parse_bracket(pres);
      expect_sym("]");
      return BracketTree::node(std::move(l), std::move(r));
    }
    throw ParseError(t.line, t.col, "expected generator or bracket");
  }

  Lexer lex_;
};

}  // namespace

PresentationFile parse_presentation_file(std::string_view text) {
  return Parser(text).parse_file();
}

LiePresentation parse_presentation(std::string_view text) {
  PresentationFile f = parse_presentation_file(text);
  if (f.stanzas.size() != 1)
    throw ParseError(1, 1, "expected exactly one algebra stanza, found " +
                               std::to_string(f.stanzas.size()));
  return f.stanzas.front();
}

LiePresentation free_presentation(int d, Field f, int truncation) {
  LiePresentation p;
  p.name = "free" + std::to_string(d);
  p.field = f;
  p.truncation = truncation;
  for (int i = 1; i <= d; ++i) p.generators.push_back("x" + std::to_string(i));
  return p;
}

LiePresentation abelian_presentation(int d, Field f, int truncation) {
  LiePresentation p;
  p.name = "abelian" + std::to_string(d);
  p.field = f;
  p.truncation = truncation;
  for (int i = 1; i <= d; ++i) p.generators.push_back("x" + std::to_string(i));
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      LieExpr e;
      e.degree = 2;
      e.terms.push_back(
          {mpq_class(1), BracketTree::node(BracketTree::leaf(i), BracketTree::leaf(j))});
      p.relations.push_back(std::move(e));
    }
  }
  return p;
}

LiePresentation one_relator_presentation(int d, Field f, int truncation) {
  LiePresentation p;
  p.name = "onerel" + std::to_string(d);
  p.field = f;
  p.truncation = truncation;
  for (int i = 1; i <= d; ++i) {
    p.generators.push_back("x" + std::to_string(i));
    p.generators.push_back("y" + std::to_string(i));
  }
  LieExpr e;
  e.degree = 2;
  for (int i = 0; i < d; ++i) {
    e.terms.push_back({mpq_class(1), BracketTree::node(BracketTree::leaf(2 * i),
                                                       BracketTree::leaf(2 * i + 1))});
  }
  p.relations.push_back(std::move(e));
  return p;
}

}  // namespace grlie
