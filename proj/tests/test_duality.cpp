#include <doctest.h>

#include "grlie/deciders.hpp"
#include "grlie/duality.hpp"
#include "grlie/hilbert.hpp"
#include "grlie/resolution.hpp"

using namespace grlie;

namespace {

QuadraticData data_for(const LiePresentation& pres) {
  return quadratic_data_of(build_enveloping(pres));
}

}  // namespace

TEST_CASE("quadratic dual dimension identity and small cases") {
  Field q = Field::rationals();
  // free algebra: W = 0, dual has everything as relations
  QuadraticData free2 = data_for(free_presentation(2, q, 4));
  CHECK(free2.relations.dim() == 0);
  QuadraticData dual = quadratic_dual(free2);
  CHECK(dual.relations.dim() == 4);
  auto dual_alg = build_quadratic_algebra(dual, 4);
  CHECK(dual_alg->dims() == std::vector<std::int64_t>{1, 2, 0, 0, 0});

  // commutator relations on 2 variables: dual is exterior-type (1,2,1,0)
  QuadraticData ab2 = data_for(abelian_presentation(2, q, 4));
  CHECK(ab2.relations.dim() == 1);
  QuadraticData ab_dual = quadratic_dual(ab2);
  CHECK(ab_dual.relations.dim() == 3);
  auto ab_dual_alg = build_quadratic_algebra(ab_dual, 4);
  CHECK(ab_dual_alg->dims() == std::vector<std::int64_t>{1, 2, 1, 0, 0});

  // dim W + dim W-perp = d^2 on the one-relator example
  QuadraticData onerel = data_for(one_relator_presentation(2, q, 3));
  CHECK(onerel.relations.dim() + quadratic_dual(onerel).relations.dim() == 16);
}

TEST_CASE("double dual is the identity") {
  for (auto pres : {abelian_presentation(2, Field::rationals(), 3),
                    one_relator_presentation(2, Field::rationals(), 3),
                    abelian_presentation(3, Field::prime_field(2), 3)}) {
    QuadraticData q = data_for(pres);
    QuadraticData dd = quadratic_dual(quadratic_dual(q));
    CHECK(dd.relations == q.relations);
  }
}

TEST_CASE("dual dims equal the betti diagonal of koszul fixtures") {
  for (auto pres : {free_presentation(2, Field::rationals(), 4),
                    abelian_presentation(2, Field::rationals(), 4),
                    one_relator_presentation(1, Field::rationals(), 4),
                    one_relator_presentation(2, Field::rationals(), 4)}) {
    auto env = build_enveloping(pres);
    auto dual_alg = build_quadratic_algebra(quadratic_dual(quadratic_data_of(env)), env.bound());
    BettiTable t = minimal_resolution(TrivialModule(env.algebra));
    for (int i = 0; i <= env.bound(); ++i) CHECK(dual_alg->dim(i) == t.at(i, i));
  }
}

TEST_CASE("lie_to_comm produces graded-commutative duals with the right dims") {
  auto r = lie_to_comm(abelian_presentation(2, Field::rationals(), 4));
  CHECK(r.algebra->graded_commutative());
  CHECK(r.algebra->dims() == std::vector<std::int64_t>{1, 2, 1, 0, 0});

  auto s = lie_to_comm(free_presentation(2, Field::rationals(), 4));
  CHECK(s.algebra->dims() == std::vector<std::int64_t>{1, 2, 0, 0, 0});

  auto o = lie_to_comm(one_relator_presentation(2, Field::rationals(), 4));
  CHECK(o.algebra->dims() == std::vector<std::int64_t>{1, 4, 1, 0, 0});

  CHECK_THROWS_AS(
      [] {
        LiePresentation cubic = free_presentation(2, Field::rationals(), 4);
        LieExpr e;
        e.degree = 3;
        e.terms.push_back({mpq_class(1),
                           BracketTree::node(BracketTree::leaf(0),
                                             BracketTree::node(BracketTree::leaf(0),
                                                               BracketTree::leaf(1)))});
        cubic.relations.push_back(e);
        lie_to_comm(cubic);
      }(),
      AlgebraError);
}

TEST_CASE("comm_to_lie inverts lie_to_comm on the fixtures") {
  // full omega: the dual of the free envelope presents a free lie algebra
  auto free_dual = lie_to_comm(free_presentation(2, Field::rationals(), 4));
  LiePresentation back = comm_to_lie(free_dual.dual, 4);
  CHECK(back.relations.empty());
  CHECK(back.num_generators() == 2);

  // omega = 0: the full exterior algebra presents an abelian lie algebra
  auto ab_dual = lie_to_comm(abelian_presentation(2, Field::rationals(), 4));
  LiePresentation ab_back = comm_to_lie(ab_dual.dual, 4);
  CHECK(ab_back.relations.size() == 1);
  auto ab_env = build_enveloping(ab_back);
  CHECK(ab_env.alg().dims() == std::vector<std::int64_t>{1, 2, 3, 4, 5});

  // one-relator round-trip: dims preserved, relation space has dim 1
  auto onerel_dual = lie_to_comm(one_relator_presentation(2, Field::rationals(), 4));
  LiePresentation o_back = comm_to_lie(onerel_dual.dual, 4);
  auto o_env = build_enveloping(o_back);
  auto orig = build_enveloping(one_relator_presentation(2, Field::rationals(), 4));
  CHECK(o_env.alg().dims() == orig.alg().dims());
  Subspace w = quadratic_data_of(o_env).relations;
  CHECK(w.dim() == 1);
}

TEST_CASE("comm_to_lie round trips over F_2 as well") {
  for (auto pres : {abelian_presentation(2, Field::prime_field(2), 4),
                    free_presentation(2, Field::prime_field(2), 4),
                    one_relator_presentation(1, Field::prime_field(2), 4)}) {
    auto dual = lie_to_comm(pres);
    LiePresentation back = comm_to_lie(dual.dual, 4);
    auto env = build_enveloping(back);
    auto orig = build_enveloping(pres);
    CHECK(env.alg().dims() == orig.alg().dims());
  }
}

TEST_CASE("quadratic dual modules: K = 0 and K = full") {
  Field q = Field::rationals();
  QuadraticData ab2 = data_for(abelian_presentation(2, q, 3));
  QuadraticModuleData m0{1, Subspace::zero(q, 2)};
  QuadraticModuleData d0 = quadratic_dual_module(m0, ab2);
  CHECK(d0.relations.dim() == 2);
  QuadraticModuleData mfull{1, Subspace::full(q, 2)};
  CHECK(quadratic_dual_module(mfull, ab2).relations.dim() == 0);
}

TEST_CASE("dual module dims match the diagonal ext of the module") {
  // A = F[x,y] (abelian envelope), M = A/I for a line I1: M is a quadratic
  // module Q_A(F, I1), and (M^!)_i = Ext^{i,i}(M).
  Field q = Field::rationals();
  auto env = build_enveloping(abelian_presentation(2, q, 4));
  QuadraticData qd = data_for(abelian_presentation(2, q, 4));

  Subspace line = Subspace::span(q, 2, {Vec::unit(0, Scalar::one(q))});
  BettiTable ext = ext_of_quotient(env.algebra, line);

  QuadraticModuleData m{1, line};  // K = I1 (x) F inside A_1 (x) H
  QuadraticData dual_data = quadratic_dual(qd);
  auto dual_alg = build_quadratic_algebra(dual_data, 4);
  auto dual_mod = build_quadratic_module(dual_alg, quadratic_dual_module(m, qd));
  for (int i = 0; i <= 4; ++i) CHECK(dual_mod->dim(i) == ext.at(i, i));
}

TEST_CASE("skew extension obeys the sign rule and multiplies the series by 1+t") {
  auto dual = lie_to_comm(abelian_presentation(2, Field::rationals(), 4));
  auto ext = skew_extension(*dual.algebra);  // exterior algebra on 2 gens, times x
  CHECK(ext->graded_commutative());
  CHECK(check_associativity(*ext, 4));
  for (int n = 0; n <= 4; ++n)
    CHECK(ext->dim(n) == dual.algebra->dim(n) + dual.algebra->dim(n - 1));

  // A = F + V with dim V = 2: the extension has dims (1, 3, 2, 0)
  auto fv = lie_to_comm(free_presentation(2, Field::rationals(), 4));
  auto fvx = skew_extension(*fv.algebra);
  CHECK(fvx->dims() == std::vector<std::int64_t>{1, 3, 2, 0, 0});

  // F[x]: dims (1,1,0,...) with x^2 = 0
  auto triv = lie_to_comm(free_presentation(1, Field::rationals(), 3));
  // dual of free(1) is F + V with dim V = 1... that already contains a line;
  // build F itself instead: the dual of the one-generator free algebra has
  // dims (1,1,0): its skew extension has dims (1,2,1,0)
  auto fx = skew_extension(*triv.algebra);
  CHECK(fx->dim(1) == triv.algebra->dim(1) + 1);
  // x * x = 0
  Vec x = Vec::unit(triv.algebra->dim(1), Scalar::one(Field::rationals()));
  CHECK(fx->mul(1, x, 1, x).is_zero());
}

TEST_CASE("direct sum adds dimensions and kills cross products") {
  auto a = lie_to_comm(abelian_presentation(2, Field::prime_field(2), 4));
  auto b = lie_to_comm(free_presentation(2, Field::prime_field(2), 4));
  auto s = direct_sum(*a.algebra, *b.algebra);
  CHECK(s->dim(0) == 1);
  for (int n = 1; n <= 4; ++n) CHECK(s->dim(n) == a.algebra->dim(n) + b.algebra->dim(n));
  // a cross product vanishes
  Vec xa = Vec::unit(0, Scalar::one(Field::prime_field(2)));
  Vec xb = Vec::unit(a.algebra->dim(1), Scalar::one(Field::prime_field(2)));
  CHECK(s->mul(1, xa, 1, xb).is_zero());
  CHECK(s->graded_commutative());
  // trivial algebra is the unit: F ⊓ F = F via dims
  auto f_alg = lie_to_comm(free_presentation(1, Field::prime_field(2), 4));
  (void)f_alg;
}

TEST_CASE("skew extension and direct sum preserve universal koszulity") {
  // both constructions keep the property; small fixtures over F_2, exhaustive
  SubspaceStrategy ex = SubspaceStrategy::exhaustive();
  auto a = lie_to_comm(free_presentation(2, Field::prime_field(2), 4));
  CHECK(is_universally_koszul(a.algebra, ex).verdict);
  auto ax = skew_extension(*a.algebra);
  CHECK(is_universally_koszul(ax, ex).verdict);
  auto b = lie_to_comm(abelian_presentation(2, Field::prime_field(2), 4));
  CHECK(is_universally_koszul(b.algebra, ex).verdict);
  auto ab = direct_sum(*a.algebra, *b.algebra);
  CHECK(is_universally_koszul(ab, ex).verdict);
}

TEST_CASE("bloch-kato and dual universal koszulity agree on a failing example") {
  // a quadratic algebra over F_2 that is Koszul but has a 1-generated
  // subalgebra with a cubic minimal relation; its dual cannot be
  // universally Koszul, and both deciders must agree on that
  auto pres = parse_presentation(
      "field = F 2\n"
      "algebra cand { generators = x,y,z,w;"
      " relations = [x,y] + [y,z] + [z,w], [x,z] + [y,w], [x,w] + [y,z] + [z,w];"
      " truncation = 4; }");
  auto env = build_enveloping(pres);
  CHECK(is_koszul(env.algebra).koszul());
  auto bk = is_bloch_kato(env, SubspaceStrategy::exhaustive());
  CHECK(!bk.verdict);
  CHECK(bk.reason == "non-quadratic subalgebra");
  REQUIRE(bk.witness.has_value());
  CHECK(bk.witness->dim() == 2);
  auto dual = lie_to_comm(pres);
  auto uk = is_universally_koszul(dual.algebra, SubspaceStrategy::exhaustive());
  CHECK(!uk.verdict);
  CHECK(uk.witness.has_value());
}

TEST_CASE("series consistency oracle derives the dual itself") {
  for (auto pres : {free_presentation(2, Field::rationals(), 5),
                    abelian_presentation(3, Field::rationals(), 5),
                    one_relator_presentation(2, Field::prime_field(2), 5)}) {
    auto env = build_enveloping(pres);
    CHECK(koszul_series_check(env).pass);
  }
}

TEST_CASE("hilbert series of the skew extension gains a factor 1+t") {
  auto a = lie_to_comm(abelian_presentation(2, Field::rationals(), 4));
  auto ax = skew_extension(*a.algebra);
  auto h = hilbert_series(*a.algebra);
  auto hx = hilbert_series(*ax);
  std::vector<mpz_class> one_plus_t{1, 1};
  CHECK(hx == series_product(h, one_plus_t, 4));
}
