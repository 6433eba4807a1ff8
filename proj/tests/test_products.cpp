#include <doctest.h>

#include "grlie/hilbert.hpp"
#include "grlie/products.hpp"
#include "grlie/resolution.hpp"

using namespace grlie;

TEST_CASE("free product of presentations unions generators and relations") {
  Field q = Field::rationals();
  // abelian(1) * abelian(1) = free lie algebra on 2 generators
  LiePresentation p = free_product_lie(abelian_presentation(1, q, 4),
                                       abelian_presentation(1, q, 4));
  CHECK(p.num_generators() == 2);
  CHECK(p.relations.empty());
  auto env = build_enveloping(p);
  CHECK(env.alg().dims() == build_enveloping(free_presentation(2, q, 4)).alg().dims());

  // name clash resolved by prefixing
  CHECK(p.generators[0] != p.generators[1]);

  // one-relator(1) * abelian(2): 4 generators, relations survive the union
  LiePresentation big = free_product_lie(one_relator_presentation(1, q, 4),
                                         abelian_presentation(2, q, 4));
  CHECK(big.num_generators() == 4);
  CHECK(big.relations.size() == 2);
}

TEST_CASE("free product algebra dims match the alternating-word formula") {
  Field q = Field::rationals();
  auto a = build_enveloping(abelian_presentation(2, q, 4)).algebra;
  auto b = build_enveloping(one_relator_presentation(1, q, 4)).algebra;
  auto f = free_product_algebra(a, b);
  // n = 2 instance of the formula
  CHECK(f->dim(2) == a->dim(2) + a->dim(1) * b->dim(1) + b->dim(1) * a->dim(1) + b->dim(2));
  CHECK(check_associativity(*f, 4));

  // F * B = B when one factor is trivial
  auto triv = build_enveloping(free_presentation(1, q, 4));
  LiePresentation nogen;  // zero generators
  nogen.name = "triv";
  nogen.field = q;
  nogen.truncation = 4;
  auto unit = build_enveloping(nogen).algebra;
  auto fb = free_product_algebra(unit, b);
  CHECK(fb->dims() == b->dims());
}

TEST_CASE("free product algebra agrees with the enveloping of the product presentation") {
  for (auto field : {Field::rationals(), Field::prime_field(2)}) {
    auto pa = abelian_presentation(2, field, 4);
    auto pb = one_relator_presentation(1, field, 4);
    auto ua = build_enveloping(pa).algebra;
    auto ub = build_enveloping(pb).algebra;
    auto direct = free_product_algebra(ua, ub);
    auto via_pres = build_enveloping(free_product_lie(pa, pb));
    CHECK(direct->dims() == via_pres.alg().dims());
  }
}

TEST_CASE("hilbert identity for free products") {
  Field q = Field::rationals();
  auto pa = abelian_presentation(2, q, 5);
  auto pb = free_presentation(1, q, 5);
  auto f = build_enveloping(free_product_lie(pa, pb));
  auto chk = free_product_series_check(hilbert_series(f.alg()),
                                       hilbert_series(build_enveloping(pa).alg()),
                                       hilbert_series(build_enveloping(pb).alg()), 5);
  CHECK(chk.pass);
  // and a deliberately wrong factor fails
  auto bad = free_product_series_check(hilbert_series(f.alg()),
                                       hilbert_series(build_enveloping(pa).alg()),
                                       hilbert_series(build_enveloping(pa).alg()), 5);
  CHECK(!bad.pass);
}

TEST_CASE("induced module edge cases") {
  Field q = Field::rationals();
  auto env = build_enveloping(free_presentation(2, q, 4));
  // H = L: the trivial module
  auto full = induced_module(env, Subspace::full(q, 2));
  CHECK(full->dim(0) == 1);
  for (int n = 1; n <= 4; ++n) CHECK(full->dim(n) == 0);
  // H = 0: U(L) itself
  auto zero = induced_module(env, Subspace::zero(q, 2));
  CHECK(zero->dims() == env.alg().dims());
}

TEST_CASE("induced module of a factor counts words not ending in that factor") {
  Field q = Field::rationals();
  auto pa = abelian_presentation(1, q, 4);
  auto pb = abelian_presentation(2, q, 4);
  LiePresentation prod = free_product_lie(pa, pb);
  auto env = build_enveloping(prod);
  Subspace part_a = Subspace::span(q, 3, {Vec::unit(0, Scalar::one(q))});
  auto ind = induced_module(env, part_a);
  // U(L) is a free right U(A)-module on the alternating words with no
  // trailing A-letter, so those count the dims of U(L)/U(L)A_+
  auto ua = build_enveloping(pa).algebra;
  auto ub = build_enveloping(pb).algebra;
  auto f = free_product_algebra(ua, ub);
  for (int n = 1; n <= 4; ++n) {
    std::int64_t count = 0;
    for (std::int64_t k = 0; k < f->dim(n); ++k)
      if (f->word_at(n, k).back().factor != 0) ++count;
    CHECK(ind->dim(n) == count);
  }
}

TEST_CASE("mayer-vietoris passes on constructed free products and fails on abelian") {
  Field q = Field::rationals();
  struct Pair {
    LiePresentation a, b;
  };
  std::vector<Pair> pairs = {
      {free_presentation(1, q, 5), free_presentation(1, q, 5)},
      {abelian_presentation(1, q, 5), abelian_presentation(2, q, 5)},
      {one_relator_presentation(1, q, 4), abelian_presentation(1, q, 4)},
  };
  for (const auto& [a, b] : pairs) {
    LiePresentation prod = free_product_lie(a, b);
    auto env = build_enveloping(prod);
    std::vector<Vec> arows, brows;
    for (int g = 0; g < a.num_generators(); ++g)
      arows.push_back(Vec::unit(g, Scalar::one(q)));
    for (int g = 0; g < b.num_generators(); ++g)
      brows.push_back(Vec::unit(a.num_generators() + g, Scalar::one(q)));
    auto rep = mayer_vietoris_check(
        env, Subspace::span(q, env.alg().dim(1), arows),
        Subspace::span(q, env.alg().dim(1), brows));
    CHECK(rep.pass);
    // alternating dimension count per degree
    for (const auto& deg : rep.degrees)
      CHECK(deg.dim_u - deg.dim_ind_a - deg.dim_ind_b == 0);
  }

  // negative control: abelian(2) is not the free product of its axes
  auto ab = build_enveloping(abelian_presentation(2, q, 4));
  auto rep = mayer_vietoris_check(
      ab, Subspace::span(q, 2, {Vec::unit(0, Scalar::one(q))}),
      Subspace::span(q, 2, {Vec::unit(1, Scalar::one(q))}));
  CHECK(!rep.pass);
  CHECK(rep.first_fail == 2);
}

TEST_CASE("cohomology of a free product is the entrywise sum of factor tables") {
  Field q = Field::rationals();
  auto rep = cohomology_sum_check(free_presentation(1, q, 4), free_presentation(1, q, 4));
  CHECK(rep.pass);
  CHECK(rep.product_table.at(1, 1) == 2);

  auto rep2 = cohomology_sum_check(one_relator_presentation(2, q, 4),
                                   abelian_presentation(2, q, 4));
  CHECK(rep2.pass);
  CHECK(rep2.product_table.at(1, 1) == 6);
  CHECK(rep2.product_table.at(2, 2) == 2);

  // F-factor: H(A * 0) = H(A)
  LiePresentation nogen;
  nogen.name = "triv";
  nogen.field = q;
  nogen.truncation = 4;
  auto rep3 = cohomology_sum_check(abelian_presentation(2, q, 4), nogen);
  CHECK(rep3.pass);
}
