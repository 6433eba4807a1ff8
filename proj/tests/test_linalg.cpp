#include <doctest.h>

#include <random>

#include "grlie/subspace.hpp"

using namespace grlie;

namespace {

Vec vec_of(const Field& f, std::initializer_list<long> entries) {
  Vec v;
  std::int64_t i = 0;
  for (long e : entries) {
    if (e != 0) v.append(i, Scalar::of(f, e));
    ++i;
  }
  return v;
}

Matrix mat_of(const Field& f, std::int64_t cols,
              std::initializer_list<std::initializer_list<long>> rows) {
  Matrix m(f, cols);
  for (const auto& r : rows) m.add_row(vec_of(f, r));
  return m;
}

Vec random_vec(const Field& f, std::int64_t n, std::mt19937_64& rng) {
  Vec v;
  for (std::int64_t i = 0; i < n; ++i) {
    long c = f.is_rational() ? static_cast<long>(rng() % 7) - 3
                             : static_cast<long>(rng() % f.modulus());
    if (c != 0) v.append(i, Scalar::of(f, c));
  }
  return v;
}

Subspace random_subspace(const Field& f, std::int64_t n, std::int64_t k, std::mt19937_64& rng) {
  std::vector<Vec> rows;
  for (std::int64_t i = 0; i < k; ++i) rows.push_back(random_vec(f, n, rng));
  return Subspace::span(f, n, rows);
}

}  // namespace

TEST_CASE("scalar arithmetic is exact in both fields") {
  Field q = Field::rationals();
  Scalar a = Scalar::of(q, 1, 3), b = Scalar::of(q, 1, 6);
  CHECK(a + b == Scalar::of(q, 1, 2));
  CHECK((a * b).str() == "1/18");
  Field f7 = Field::prime_field(7);
  Scalar x = Scalar::of(f7, 3);
  CHECK(x.inverse() == Scalar::of(f7, 5));
  CHECK(Scalar::of(f7, 10) == Scalar::of(f7, 3));
  CHECK_THROWS_AS(Field::prime_field(6), FieldError);
  CHECK_THROWS_AS(Scalar::of(Field::prime_field(2), 1, 2), FieldError);
}

TEST_CASE("rref on the spec examples") {
  Field q = Field::rationals();
  auto r1 = rref(mat_of(q, 2, {{2, 4}, {1, 2}}));
  CHECK(r1.mat.rows() == 1);
  CHECK(r1.mat.row(0) == vec_of(q, {1, 2}));
  CHECK(r1.pivots == std::vector<std::int64_t>{0});

  auto r2 = rref(mat_of(q, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(r2.mat.rows() == 3);
  CHECK(r2.pivots == std::vector<std::int64_t>{0, 1, 2});

  Field f2 = Field::prime_field(2);
  auto r3 = rref(mat_of(f2, 2, {{1, 1}, {1, 1}}));
  CHECK(r3.mat.rows() == 1);
  CHECK(r3.mat.row(0) == vec_of(f2, {1, 1}));
}

TEST_CASE("kernel on the spec examples") {
  Field q = Field::rationals();
  CHECK(kernel(Matrix(q, 3)).dim() == 3);  // zero 0-row matrix on 3 columns
  Matrix z(q, 3);
  z.add_row(Vec{});
  z.add_row(Vec{});
  CHECK(kernel(z).dim() == 3);  // zero 2x3
  CHECK(kernel(mat_of(q, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).dim() == 0);
  Subspace k = kernel(mat_of(q, 3, {{1, 1, 0}}));
  CHECK(k.dim() == 2);
  Vec w;
  w.append(0, Scalar::of(q, 1));
  w.append(1, Scalar::of(q, -1));
  CHECK(k.contains(w));
}

TEST_CASE("intersect on the spec examples") {
  Field q = Field::rationals();
  Subspace e1 = Subspace::span(q, 2, {vec_of(q, {1, 0})});
  Subspace e2 = Subspace::span(q, 2, {vec_of(q, {0, 1})});
  CHECK(intersect(e1, e2).dim() == 0);
  Subspace u = Subspace::span(q, 2, {vec_of(q, {1, 1}), vec_of(q, {1, -1})});
  CHECK(intersect(u, u) == u);
  CHECK(intersect(u, e1) == e1);
}

TEST_CASE("complement follows the pivot-greedy rule") {
  Field q = Field::rationals();
  Subspace all = Subspace::full(q, 2);
  Subspace zero = Subspace::zero(q, 2);
  CHECK(complement(zero, all) == all);
  CHECK(complement(all, all).dim() == 0);
  Subspace diag = Subspace::span(q, 2, {vec_of(q, {1, 1})});
  Subspace c = complement(diag, all);
  CHECK(c.dim() == 1);
  CHECK(c.basis_row(0) == vec_of(q, {0, 1}));  // e2, not e1
  CHECK_THROWS_AS(complement(all, diag), LinalgError);
}

TEST_CASE("rank-nullity and Grassmann identity on random input") {
  for (Field f : {Field::rationals(), Field::prime_field(2), Field::prime_field(5)}) {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 25; ++trial) {
      std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 7);
      Matrix m(f, n);
      std::int64_t nrows = rng() % 6;
      for (std::int64_t i = 0; i < nrows; ++i) m.add_row(random_vec(f, n, rng));
      CHECK(rank(m) + kernel(m).dim() == n);

      Subspace u = random_subspace(f, n, rng() % (n + 1), rng);
      Subspace v = random_subspace(f, n, rng() % (n + 1), rng);
      CHECK(u.dim() + v.dim() == intersect(u, v).dim() + sum(u, v).dim());

      Subspace w = complement(u, Subspace::full(f, n));
      CHECK(intersect(u, w).dim() == 0);
      CHECK(sum(u, w).dim() == n);
      CHECK(w == complement(u, Subspace::full(f, n)));  // deterministic

      // kernel vectors annihilate the matrix
      Subspace k = kernel(m);
      for (std::int64_t i = 0; i < k.dim(); ++i) CHECK(m.apply(k.basis_row(i)).is_zero());
    }
  }
}

TEST_CASE("rref is invariant under row permutation") {
  Field f3 = Field::prime_field(3);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Vec> rows;
    for (int i = 0; i < 5; ++i) rows.push_back(random_vec(f3, 6, rng));
    Matrix a = Matrix::from_rows(f3, 6, rows);
    std::shuffle(rows.begin(), rows.end(), rng);
    Matrix b = Matrix::from_rows(f3, 6, rows);
    CHECK(rref(a).mat == rref(b).mat);
  }
}

TEST_CASE("intersect rejects ambient mismatch") {
  Field q = Field::rationals();
  Subspace a = Subspace::full(q, 2), b = Subspace::full(q, 3);
  CHECK_THROWS_AS(intersect(a, b), LinalgError);
}
