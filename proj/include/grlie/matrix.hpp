#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "grlie/vec.hpp"

namespace grlie {

struct LinalgError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sparse row-major matrix over one field.
class Matrix {
public:
  Matrix(Field f, std::int64_t cols) : field_(f), cols_(cols) {}
  static Matrix from_rows(Field f, std::int64_t cols, std::vector<Vec> rows);

  const Field& field() const { return field_; }
  std::int64_t rows() const { return static_cast<std::int64_t>(rows_.size()); }
  std::int64_t cols() const { return cols_; }
  const Vec& row(std::int64_t i) const { return rows_[static_cast<std::size_t>(i)]; }
  const std::vector<Vec>& row_list() const { return rows_; }
  void add_row(Vec v);

  Vec apply(const Vec& x) const;  // y_i = <row_i, x>
  bool operator==(const Matrix& o) const;
  std::string str() const;

private:
  Field field_;
  std::int64_t cols_;
  std::vector<Vec> rows_;
};

// Row space accumulator. Rows are kept monic with distinct pivots (leftmost
// nonzero index). finalize() back-substitutes to the unique reduced form.
class Echelon {
public:
  explicit Echelon(Field f, std::int64_t cols) : field_(f), cols_(cols) {}

  bool insert(Vec v);        // true if the rank grew
  Vec reduce(Vec v) const;   // forward reduction; zero iff v is in the row space
  bool contains(const Vec& v) const { return reduce(v).is_zero(); }
  std::int64_t rank() const { return static_cast<std::int64_t>(rows_.size()); }
  std::int64_t cols() const { return cols_; }
  const Field& field() const { return field_; }
  void finalize();
  bool finalized() const { return finalized_; }

  const std::map<std::int64_t, Vec>& rows() const { return rows_; }
  std::vector<std::int64_t> pivots() const;
  bool has_pivot(std::int64_t col) const { return rows_.count(col) != 0; }
  Matrix to_matrix() const;  // rows in pivot order

private:
  Field field_;
  std::int64_t cols_;
  std::map<std::int64_t, Vec> rows_;
  bool finalized_ = false;
};

struct RrefResult {
  Matrix mat;
  std::vector<std::int64_t> pivots;
};

RrefResult rref(const Matrix& m);
std::int64_t rank(const Matrix& m);

}  // namespace grlie
