#include "grlie/subspace.hpp"

#include <algorithm>

namespace grlie {

Subspace Subspace::full(Field f, std::int64_t ambient) {
  Subspace s(f, ambient);
  for (std::int64_t i = 0; i < ambient; ++i)
    s.basis_.add_row(Vec::unit(i, Scalar::one(f)));
  return s;
}

Subspace Subspace::span(Field f, std::int64_t ambient, const std::vector<Vec>& vectors) {
  Echelon e(f, ambient);
  for (const auto& v : vectors) e.insert(v);
  e.finalize();
  Subspace s(f, ambient);
  s.basis_ = e.to_matrix();
  return s;
}

std::vector<std::int64_t> Subspace::pivots() const {
  std::vector<std::int64_t> p;
  p.reserve(static_cast<std::size_t>(basis_.rows()));
  for (const auto& r : basis_.row_list()) p.push_back(r.lead());
  return p;
}

bool Subspace::contains(const Vec& v) const { return reduce(v).is_zero(); }

bool Subspace::contains(const Subspace& other) const {
  for (const auto& r : other.basis_.row_list())
    if (!contains(r)) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Vec Subspace::reduce(const Vec& v) const {
  Vec r = v;
  for (std::int64_t i = 0; i < basis_.rows(); ++i) {
    const Vec& row = basis_.row(i);
    if (const Scalar* c = r.coeff(row.lead())) r.add_scaled(row, -*c);
  }
  return r;
}

Vec Subspace::coordinates(const Vec& v) const {
  // along an rref basis the coordinate at row i is the entry at its pivot
  Vec coords;
  Vec r = v;
  for (std::int64_t i = 0; i < basis_.rows(); ++i) {
    const Vec& row = basis_.row(i);
    if (const Scalar* c = r.coeff(row.lead())) {
      coords.append(i, *c);
      r.add_scaled(row, -*c);
    }
  }
  if (!r.is_zero()) throw LinalgError("vector is outside the subspace");
  return coords;
}

std::string Subspace::str() const {
  return "span{\n" + basis_.str() + "} in dim " + std::to_string(ambient_);
}

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw LinalgError("ambient mismatch in sum");
  Echelon e(u.field(), u.ambient_dim());
  for (const auto& r : u.basis().row_list()) e.insert(r);
  for (const auto& r : v.basis().row_list()) e.insert(r);
  e.finalize();
  Subspace s(u.field(), u.ambient_dim());
  s.basis_ = e.to_matrix();
  return s;
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw LinalgError("ambient mismatch in intersect");
  const std::int64_t n = u.ambient_dim();
  // Zassenhaus: echelonize rows (x|x) for x in u and (y|0) for y in v;
  // rows with vanishing left half have right halves spanning u∩v
  Echelon e(u.field(), 2 * n);
  for (const auto& r : u.basis().row_list()) {
    Vec w = r;
    w.add_scaled(r.shifted(n), Scalar::one(u.field()));
    e.insert(std::move(w));
  }
  for (const auto& r : v.basis().row_list()) e.insert(r);
  e.finalize();
  std::vector<Vec> inter;
  for (const auto& [p, row] : e.rows()) {
    if (p >= n) inter.push_back(row.shifted(-n));
  }
  return Subspace::span(u.field(), n, inter);
}

Subspace complement(const Subspace& u, const Subspace& inside) {
  if (u.ambient_dim() != inside.ambient_dim())
    throw LinalgError("ambient mismatch in complement");
  if (!inside.contains(u)) throw LinalgError("complement: containment violated");
  // u in coordinates along inside's basis
  Echelon coords(u.field(), inside.dim());
  for (const auto& r : u.basis().row_list()) coords.insert(inside.coordinates(r));
  std::vector<Vec> picked;
  for (std::int64_t j = 0; j < inside.dim(); ++j) {
    if (!coords.has_pivot(j)) picked.push_back(inside.basis_row(j));
  }
  return Subspace::span(u.field(), u.ambient_dim(), picked);
}

Subspace kernel(const Matrix& m) {
  RrefResult r = rref(m);
  const auto& piv = r.pivots;
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (auto p : piv) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Vec> basis;
  for (std::int64_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Vec v;
    v.set(f, Scalar::one(m.field()));
    for (std::int64_t i = 0; i < r.mat.rows(); ++i) {
      if (const Scalar* c = r.mat.row(i).coeff(f)) v.set(piv[static_cast<std::size_t>(i)], -*c);
    }
    basis.push_back(std::move(v));
  }
  return Subspace::span(m.field(), m.cols(), basis);
}

}  // namespace grlie
