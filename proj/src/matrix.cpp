#include "grlie/matrix.hpp"

#include <cassert>

namespace grlie {

Matrix Matrix::from_rows(Field f, std::int64_t cols, std::vector<Vec> rows) {
  Matrix m(f, cols);
  for (auto& r : rows) m.add_row(std::move(r));
  return m;
}

void Matrix::add_row(Vec v) {
  assert(v.is_zero() || v.entry(v.nnz() - 1).first < cols_);
  rows_.push_back(std::move(v));
}

Vec Matrix::apply(const Vec& x) const {
  Vec y;
  for (std::int64_t i = 0; i < rows(); ++i) {
    Scalar s;
    for (const auto& [j, c] : rows_[static_cast<std::size_t>(i)]) {
      if (const Scalar* xc = x.coeff(j)) s += c * *xc;
    }
    if (!s.is_zero()) y.append(i, std::move(s));
  }
  return y;
}

bool Matrix::operator==(const Matrix& o) const {
  return cols_ == o.cols_ && rows_ == o.rows_;
}

std::string Matrix::str() const {
  std::string s;
  for (const auto& r : rows_) s += r.str() + "\n";
  return s;
}

bool Echelon::insert(Vec v) {
  while (!v.is_zero()) {
    const std::int64_t p = v.lead();
    auto it = rows_.find(p);
    if (it == rows_.end()) {
      v.scale(v.lead_coeff().inverse());
      rows_.emplace(p, std::move(v));
      finalized_ = false;
      return true;
    }
    v.add_scaled(it->second, -v.lead_coeff());
  }
  return false;
}

Vec Echelon::reduce(Vec v) const {
  if (!finalized_) {
    while (!v.is_zero()) {
      auto it = rows_.find(v.lead());
      if (it == rows_.end()) break;
      v.add_scaled(it->second, -v.lead_coeff());
    }
    return v;
  }
  // fully reduced rows: eliminating at index i only introduces indices > i,
  // so entries once seen to be pivot-free stay pivot-free
  std::int64_t safe_below = -1;
  for (bool again = true; again;) {
    again = false;
    for (const auto& [i, c] : v) {
      if (i <= safe_below) continue;
      auto it = rows_.find(i);
      if (it == rows_.end()) {
        safe_below = i;
        continue;
      }
      v.add_scaled(it->second, -c);
      again = true;
      break;
    }
  }
  return v;
}

void Echelon::finalize() {
  if (finalized_) return;
  // eliminate later pivots from earlier rows, walking pivots right to left
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    for (auto jt = rows_.begin(); jt->first != it->first; ++jt) {
      if (const Scalar* c = jt->second.coeff(it->first)) {
        jt->second.add_scaled(it->second, -*c);
      }
    }
  }
  finalized_ = true;
}

std::vector<std::int64_t> Echelon::pivots() const {
  std::vector<std::int64_t> p;
  p.reserve(rows_.size());
  for (const auto& [k, v] : rows_) p.push_back(k);
  return p;
}

Matrix Echelon::to_matrix() const {
  Matrix m(field_, cols_);
  for (const auto& [k, v] : rows_) m.add_row(v);
  return m;
}

RrefResult rref(const Matrix& m) {
  Echelon e(m.field(), m.cols());
  for (const auto& r : m.row_list()) e.insert(r);
  e.finalize();
  return {e.to_matrix(), e.pivots()};
}

std::int64_t rank(const Matrix& m) {
  Echelon e(m.field(), m.cols());
  for (const auto& r : m.row_list()) e.insert(r);
  return e.rank();
}

}  // namespace grlie
