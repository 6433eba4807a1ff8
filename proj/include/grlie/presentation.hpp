#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grlie/field.hpp"

namespace grlie {

struct ParseError : std::runtime_error {
  ParseError(int line, int col, const std::string& msg)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}
  int line, col;
};

// Formal bracket word over generator indices. Immutable; shared subtrees.
class BracketTree {
public:
  static std::shared_ptr<const BracketTree> leaf(int gen);
  static std::shared_ptr<const BracketTree> node(std::shared_ptr<const BracketTree> l,
                                                 std::shared_ptr<const BracketTree> r);
  bool is_leaf() const { return gen_ >= 0; }
  int gen() const { return gen_; }
  const BracketTree& left() const { return *l_; }
  const BracketTree& right() const { return *r_; }
  std::shared_ptr<const BracketTree> left_ptr() const { return l_; }
  std::shared_ptr<const BracketTree> right_ptr() const { return r_; }
  int degree() const { return degree_; }
  std::string str(const std::vector<std::string>& names) const;

private:
  int gen_ = -1;
  std::shared_ptr<const BracketTree> l_, r_;
  int degree_ = 1;
};

using BracketPtr = std::shared_ptr<const BracketTree>;

struct LieTerm {
  mpq_class coeff;  // field-independent; converted when expanding
  BracketPtr word;
};

struct LieExpr {
  std::vector<LieTerm> terms;
  int degree = 0;  // common degree of all terms (>= 2 for relations)
  std::string str(const std::vector<std::string>& names) const;
};

struct LiePresentation {
  std::string name;
  Field field;
  std::vector<std::string> generators;  // all of internal degree 1
  std::vector<LieExpr> relations;       // homogeneous, degree >= 2
  int truncation = 6;

  int num_generators() const { return static_cast<int>(generators.size()); }
  int generator_index(std::string_view n) const;  // -1 if unknown
  std::string str() const;
};

struct PresentationFile {
  std::optional<Field> header_field;
  std::vector<LiePresentation> stanzas;

  const LiePresentation* find(std::string_view name) const;
};

// Grammar:
//   file   := header? stanza+
//   header := "field" "=" ("Q" | "F" int)
//   stanza := "algebra" name "{" "generators" "=" namelist ";"
//             ("relations" "=" exprlist ";")? ("truncation" "=" int ";")? "}"
//   expr   := term (("+"|"-") term)*
//   term   := (coeff "*")? bracket
//   bracket:= "[" (name|bracket) "," (name|bracket) "]" | name
//   coeff  := integer | integer "/" integer
PresentationFile parse_presentation_file(std::string_view text);

// Convenience for single-stanza sources.
LiePresentation parse_presentation(std::string_view text);

// Canned presentations used as fixtures everywhere.
LiePresentation free_presentation(int d, Field f = Field::rationals(), int truncation = 6);
LiePresentation abelian_presentation(int d, Field f = Field::rationals(), int truncation = 6);
// generators x1,y1,...,xd,yd with the single relation [x1,y1]+...+[xd,yd]
LiePresentation one_relator_presentation(int d, Field f = Field::rationals(),
                                         int truncation = 6);

}  // namespace grlie
