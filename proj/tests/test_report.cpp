#include <doctest.h>

#include "grlie/report.hpp"
#include "grlie/resolution.hpp"

using namespace grlie;

TEST_CASE("betti tables round-trip through their json schema") {
  auto env = build_enveloping(one_relator_presentation(2, Field::rationals(), 4));
  BettiTable t = minimal_resolution(TrivialModule(env.algebra));
  nlohmann::json j = betti_to_json(t);
  CHECK(j.at("bound") == 4);
  BettiTable back = betti_from_json(j);
  CHECK(back == t);
}

TEST_CASE("report base carries the configuration fields") {
  RunConfig cfg;
  cfg.command = "betti";
  cfg.field = Field::prime_field(3);
  cfg.truncation = 5;
  cfg.strategy = SubspaceStrategy::coordinate_random(4, 99);
  cfg.seed = 99;
  nlohmann::json j = report_base(cfg, 12.5);
  CHECK(j.at("schema") == kSchemaVersion);
  CHECK(j.at("version") == kToolVersion);
  CHECK(j.at("field") == "F3");
  CHECK(j.at("truncation") == 5);
  CHECK(j.at("strategy") == "coordinate+random(4)");
  CHECK(j.at("seed") == 99);
  // round-trips through parse
  auto s = SubspaceStrategy::parse(j.at("strategy").get<std::string>(),
                                   j.at("seed").get<std::uint64_t>());
  CHECK(s.kind == SubspaceStrategy::Kind::CoordinateRandom);
  CHECK(s.samples == 4);
  CHECK(s.seed == 99);
}

TEST_CASE("subspaces serialize with exact coordinates") {
  Field q = Field::rationals();
  Vec v;
  v.append(0, Scalar::of(q, 1, 2));
  v.append(2, Scalar::of(q, -3));
  Subspace s = Subspace::span(q, 3, {v});
  nlohmann::json j = subspace_to_json(s);
  CHECK(j.at("dim") == 1);
  CHECK(j.at("basis")[0][0] == "1");  // normalized to a monic pivot
  CHECK(j.at("basis")[0][2] == "-6");
}

TEST_CASE("strategy parser rejects junk") {
  CHECK_THROWS_AS(SubspaceStrategy::parse("randomish", 1), std::invalid_argument);
  CHECK(SubspaceStrategy::parse("exhaustive", 1).kind == SubspaceStrategy::Kind::Exhaustive);
  CHECK(SubspaceStrategy::parse("coordinate", 1).kind == SubspaceStrategy::Kind::Coordinate);
}

TEST_CASE("subspace enumeration counts over small finite fields") {
  // Gaussian binomial totals: 5 subspaces of F_2^2, 16 of F_2^3, 67 of F_2^4
  CHECK(all_subspaces(Field::prime_field(2), 2).size() == 5);
  CHECK(all_subspaces(Field::prime_field(2), 3).size() == 16);
  CHECK(all_subspaces(Field::prime_field(2), 4).size() == 67);
  CHECK(all_subspaces(Field::prime_field(3), 2).size() == 6);
  CHECK_THROWS_AS(all_subspaces(Field::rationals(), 2), std::invalid_argument);
  // the coordinate strategy visits 2^n subspaces
  CHECK(enumerate_subspaces(Field::rationals(), 3, SubspaceStrategy::coordinate()).size() == 8);
}
