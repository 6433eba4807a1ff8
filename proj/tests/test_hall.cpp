#include <doctest.h>

#include "grlie/hall.hpp"
#include "grlie/matrix.hpp"

using namespace grlie;

namespace {

// Independent oracle: rank of the span of all left-normed brackets
// [[..[g1,g2],g3..],gn] inside the degree-n tensor word space.
std::int64_t left_normed_rank(int d, int n, const Field& f) {
  Echelon e(f, words::count(d, n));
  std::vector<int> tuple(static_cast<std::size_t>(n), 0);
  for (;;) {
    BracketPtr w = BracketTree::leaf(tuple[0]);
    for (int i = 1; i < n; ++i) w = BracketTree::node(w, BracketTree::leaf(tuple[static_cast<std::size_t>(i)]));
    e.insert(expand_bracket(*w, d, f));
    int i = n - 1;
    while (i >= 0 && tuple[static_cast<std::size_t>(i)] == d - 1) tuple[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++tuple[static_cast<std::size_t>(i)];
  }
  return e.rank();
}

}  // namespace

TEST_CASE("hall basis matches the spec examples") {
  HallBasis h(2, 5);
  CHECK(h.count(1) == 2);
  CHECK(h.count(2) == 1);
  CHECK(h.count(5) == 6);
  std::vector<std::string> names{"x", "y"};
  CHECK(h.bracket(2, 0)->str(names) == "[x,y]");
}

TEST_CASE("hall counts equal necklace counts and the left-normed span rank") {
  for (int d = 1; d <= 3; ++d) {
    HallBasis h(d, 6);
    for (int n = 1; n <= 6; ++n) {
      CHECK(h.count(n) == necklace_count(d, n));
      if (n >= 2 && words::count(d, n) <= 1000) {
        CHECK(h.count(n) == left_normed_rank(d, n, Field::rationals()));
        CHECK(h.count(n) == left_normed_rank(d, n, Field::prime_field(2)));
      }
    }
  }
}

TEST_CASE("hall expansions are linearly independent") {
  Field q = Field::rationals();
  HallBasis h(2, 6);
  for (int n = 2; n <= 6; ++n) {
    Echelon e(q, words::count(2, n));
    for (int k = 0; k < h.count(n); ++k) CHECK(e.insert(h.tensor_expansion(n, k, q)));
  }
}

TEST_CASE("bracket expansion matches hand-computed values") {
  Field q = Field::rationals();
  // [x,y] -> xy - yx
  auto xy = BracketTree::node(BracketTree::leaf(0), BracketTree::leaf(1));
  Vec v = expand_bracket(*xy, 2, q);
  CHECK(v.nnz() == 2);
  CHECK(*v.coeff(1) == Scalar::of(q, 1));   // xy
  CHECK(*v.coeff(2) == Scalar::of(q, -1));  // yx

  // [x,[x,y]] -> xxy - 2xyx + yxx
  auto xxy = BracketTree::node(BracketTree::leaf(0), xy);
  Vec w = expand_bracket(*xxy, 2, q);
  CHECK(w.nnz() == 3);
  CHECK(*w.coeff(0b001) == Scalar::of(q, 1));
  CHECK(*w.coeff(0b010) == Scalar::of(q, -2));
  CHECK(*w.coeff(0b100) == Scalar::of(q, 1));

  // 3*[x,y] over F2 = xy + yx
  Field f2 = Field::prime_field(2);
  LieExpr e;
  e.degree = 2;
  e.terms.push_back({mpq_class(3), xy});
  Vec u = expand_expr(e, 2, f2);
  CHECK(u.nnz() == 2);
  CHECK(*u.coeff(1) == Scalar::of(f2, 1));
  CHECK(*u.coeff(2) == Scalar::of(f2, 1));

  // [x,x] expands to zero
  auto xx = BracketTree::node(BracketTree::leaf(0), BracketTree::leaf(0));
  CHECK(expand_bracket(*xx, 2, q).is_zero());
}
