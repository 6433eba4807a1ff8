#pragma once

#include "grlie/matrix.hpp"

namespace grlie {

// Row span inside a coordinate space, stored as the unique reduced
// row-echelon basis: nonzero monic rows, strictly increasing pivots,
// pivot columns cleared elsewhere.
class Subspace {
public:
  Subspace(Field f, std::int64_t ambient) : ambient_(ambient), basis_(f, ambient) {}
  static Subspace zero(Field f, std::int64_t ambient) { return Subspace(f, ambient); }
  static Subspace full(Field f, std::int64_t ambient);
  static Subspace span(Field f, std::int64_t ambient, const std::vector<Vec>& vectors);

  std::int64_t ambient_dim() const { return ambient_; }
  std::int64_t dim() const { return basis_.rows(); }
  const Field& field() const { return basis_.field(); }
  const Matrix& basis() const { return basis_; }
  const Vec& basis_row(std::int64_t i) const { return basis_.row(i); }
  std::vector<std::int64_t> pivots() const;

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const;

  // Coordinates of v in the echelon basis; throws if v is outside the span.
  Vec coordinates(const Vec& v) const;
  // Residue of v modulo this subspace, supported on non-pivot columns only.
  Vec reduce(const Vec& v) const;

  std::string str() const;

private:
  std::int64_t ambient_;
  Matrix basis_;
  friend Subspace intersect(const Subspace&, const Subspace&);
  friend Subspace sum(const Subspace&, const Subspace&);
};

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);  // Zassenhaus

// Deterministic direct complement of u inside `inside` (u must be contained
// in `inside`): in coordinates along inside's echelon basis, keep the basis
// rows at the non-pivot coordinate indices of u.
Subspace complement(const Subspace& u, const Subspace& inside);

// Right null space { v : m v = 0 }, canonicalized.
Subspace kernel(const Matrix& m);

}  // namespace grlie
