#include <doctest.h>

#include "grlie/presentation.hpp"

using namespace grlie;

TEST_CASE("parses an abelian rank-2 presentation") {
  auto p = parse_presentation("algebra a { generators = x,y; relations = [x,y]; }");
  CHECK(p.name == "a");
  CHECK(p.generators == std::vector<std::string>{"x", "y"});
  REQUIRE(p.relations.size() == 1);
  CHECK(p.relations[0].degree == 2);
  CHECK(p.truncation == 6);
  CHECK(p.field.is_rational());
}

TEST_CASE("parses the one-relator presentation") {
  auto p = parse_presentation(
      "algebra l { generators = x1,y1,x2,y2; relations = [x1,y1]+[x2,y2]; }");
  CHECK(p.num_generators() == 4);
  REQUIRE(p.relations.size() == 1);
  CHECK(p.relations[0].terms.size() == 2);
  CHECK(p.relations[0].str(p.generators) == "[x1,y1] + [x2,y2]");
}

TEST_CASE("header field and per-stanza truncation") {
  auto f = parse_presentation_file(
      "field = F 2\n"
      "algebra a { generators = x; truncation = 4; }\n"
      "algebra b { generators = y,z; relations = 3*[y,z]; }\n");
  REQUIRE(f.stanzas.size() == 2);
  CHECK(f.header_field.has_value());
  CHECK(f.stanzas[0].field.modulus() == 2);
  CHECK(f.stanzas[0].truncation == 4);
  CHECK(f.stanzas[1].truncation == 6);
  CHECK(f.find("b") != nullptr);
  CHECK(f.find("c") == nullptr);
}

TEST_CASE("reports malformed input with a position") {
  CHECK_THROWS_AS(parse_presentation("algebra a { generators = x,y; relations = [x,[y ; }"),
                  ParseError);
  try {
    parse_presentation("algebra a { generators = x,y; relations = [x,[y ; }");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(std::string(e.what()).find("expected") != std::string::npos);
  }
}

TEST_CASE("rejects semantic errors") {
  // unknown generator
  CHECK_THROWS_AS(parse_presentation("algebra a { generators = x; relations = [x,z]; }"),
                  ParseError);
  // inhomogeneous relation
  CHECK_THROWS_AS(
      parse_presentation("algebra a { generators = x,y; relations = [x,y]+[x,[x,y]]; }"),
      ParseError);
  // degree-1 relation
  CHECK_THROWS_AS(parse_presentation("algebra a { generators = x,y; relations = x; }"),
                  ParseError);
  // non-prime modulus
  CHECK_THROWS_AS(parse_presentation_file("field = F 4\nalgebra a { generators = x; }"),
                  ParseError);
  // duplicate generators
  CHECK_THROWS_AS(parse_presentation("algebra a { generators = x,x; }"), ParseError);
  // relation degree above the stanza truncation
  CHECK_THROWS_AS(parse_presentation(
                      "algebra a { generators = x,y; relations = [x,[x,[x,[x,y]]]]; "
                      "truncation = 3; }"),
                  ParseError);
}

TEST_CASE("fractional coefficients and signs") {
  auto p = parse_presentation(
      "algebra a { generators = x,y,z; relations = 1/2*[x,y] - 3*[y,z] + [x,z]; }");
  REQUIRE(p.relations.size() == 1);
  const auto& terms = p.relations[0].terms;
  REQUIRE(terms.size() == 3);
  CHECK(terms[0].coeff == mpq_class(1, 2));
  CHECK(terms[1].coeff == mpq_class(-3));
  CHECK(terms[2].coeff == mpq_class(1));
}

TEST_CASE("canned fixtures match their definitions") {
  auto fr = free_presentation(3);
  CHECK(fr.num_generators() == 3);
  CHECK(fr.relations.empty());
  auto ab = abelian_presentation(3);
  CHECK(ab.relations.size() == 3);
  auto onerel = one_relator_presentation(2);
  CHECK(onerel.num_generators() == 4);
  CHECK(onerel.relations.size() == 1);
}
