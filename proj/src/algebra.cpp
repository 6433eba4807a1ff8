#include "grlie/algebra.hpp"

#include <algorithm>
#include <cassert>

namespace grlie {

Vec GradedAlgebra::mul(int i, const Vec& x, int j, const Vec& y) const {
  Vec out;
  for (const auto& [a, ca] : x) {
    for (const auto& [b, cb] : y) {
      out.add_scaled(mul_basis(i, a, j, b), ca * cb);
    }
  }
  return out;
}

Vec GradedAlgebra::bracket(int i, const Vec& x, int j, const Vec& y) const {
  Vec out = mul(i, x, j, y);
  out.add_scaled(mul(j, y, i, x), Scalar::of(field_, -1));
  return out;
}

std::string GradedAlgebra::basis_label(int n, std::int64_t k) const {
  return "e(" + std::to_string(n) + "," + std::to_string(k) + ")";
}

bool GradedAlgebra::compute_graded_commutative() const {
  for (int i = 1; i <= bound_ - 1; ++i) {
    for (int j = i; i + j <= bound_; ++j) {
      const Scalar sign = Scalar::of(field_, (i * j) % 2 == 0 ? 1 : -1);
      for (std::int64_t a = 0; a < dim(i); ++a) {
        for (std::int64_t b = 0; b < dim(j); ++b) {
          Vec lhs = mul_basis(i, a, j, b);
          Vec rhs = mul_basis(j, b, i, a);
          rhs.scale(sign);
          if (!(lhs == rhs)) return false;
        }
      }
    }
  }
  return true;
}

TensorQuotientAlgebra::TensorQuotientAlgebra(Field f, std::vector<std::string> generator_names,
                                             int bound,
                                             const std::map<int, std::vector<Vec>>& relations,
                                             std::int64_t word_cap)
    : GradedAlgebra(f, bound),
      d_(static_cast<int>(generator_names.size())),
      names_(std::move(generator_names)) {
  if (bound < 0) throw AlgebraError("negative truncation bound");
  for (const auto& [deg, vecs] : relations) {
    if (deg < 2 || deg > bound)
      throw AlgebraError("relation degree " + std::to_string(deg) + " outside 2.." +
                         std::to_string(bound));
  }
  if (d_ > 0) words::checked_count(d_, bound, word_cap);

  levels_.resize(static_cast<std::size_t>(bound) + 1);
  std::vector<std::int64_t> dims(static_cast<std::size_t>(bound) + 1, 0);
  levels_[0].basis = {0};
  dims[0] = 1;

  // J_n = V (x) J_{n-1} + J_{n-1} (x) V + R_n, eliminated degree by degree
  std::map<std::int64_t, Vec> prev_rows;  // ideal rref rows of degree n-1, word coords
  for (int n = 1; n <= bound; ++n) {
    const std::int64_t nwords = words::count(d_, n);
    Echelon ech(field_, nwords);
    for (int g = 0; g < d_; ++g) {
      for (const auto& [pivot, row] : prev_rows) {
        Vec left;  // g (x) row
        for (const auto& [w, c] : row)
          left.append(words::concat(g, w, d_, n - 1), c);
        ech.insert(std::move(left));
      }
    }
    for (const auto& [pivot, row] : prev_rows) {
      for (int g = 0; g < d_; ++g) {
        Vec right;  // row (x) g
        for (const auto& [w, c] : row)
          right.append(words::concat(w, g, d_, 1), c);
        ech.insert(std::move(right));
      }
    }
    if (auto it = relations.find(n); it != relations.end()) {
      for (const auto& r : it->second) ech.insert(r);
    }
    ech.finalize();

    Level& lvl = levels_[static_cast<std::size_t>(n)];
    std::vector<bool> is_pivot(static_cast<std::size_t>(nwords), false);
    for (const auto& [p, row] : ech.rows()) is_pivot[static_cast<std::size_t>(p)] = true;
    for (std::int64_t w = 0; w < nwords; ++w)
      if (!is_pivot[static_cast<std::size_t>(w)]) lvl.basis.push_back(w);
    dims[static_cast<std::size_t>(n)] = static_cast<std::int64_t>(lvl.basis.size());

    lvl.reduction.reserve(ech.rows().size());
    for (const auto& [p, row] : ech.rows()) {
      // row = pivot word + tail on basis words; the image of the pivot word
      // is minus the tail, rewritten in basis positions
      Vec img;
      for (const auto& [w, c] : row) {
        if (w == p) continue;
        img.append(word_position_in(lvl.basis, w), -c);
      }
      lvl.reduction.emplace(p, std::move(img));
    }
    prev_rows.clear();
    for (const auto& [p, row] : ech.rows()) prev_rows.emplace(p, row);
  }
  set_dims(std::move(dims));
  one_generated_ = true;  // quotient of a tensor algebra on degree-1 generators
  graded_commutative_ = compute_graded_commutative();
}

std::int64_t TensorQuotientAlgebra::word_position_in(const std::vector<std::int64_t>& basis,
                                                     std::int64_t w) {
  auto it = std::lower_bound(basis.begin(), basis.end(), w);
  assert(it != basis.end() && *it == w);
  return static_cast<std::int64_t>(it - basis.begin());
}

std::int64_t TensorQuotientAlgebra::basis_word(int n, std::int64_t k) const {
  return levels_[static_cast<std::size_t>(n)].basis[static_cast<std::size_t>(k)];
}

std::int64_t TensorQuotientAlgebra::word_position(int n, std::int64_t w) const {
  const auto& basis = levels_[static_cast<std::size_t>(n)].basis;
  auto it = std::lower_bound(basis.begin(), basis.end(), w);
  if (it == basis.end() || *it != w) return -1;
  return static_cast<std::int64_t>(it - basis.begin());
}

Vec TensorQuotientAlgebra::reduce_word(int n, std::int64_t w) const {
  const Level& lvl = levels_[static_cast<std::size_t>(n)];
  auto it = lvl.reduction.find(w);
  if (it != lvl.reduction.end()) return it->second;
  return Vec::unit(word_position(n, w), Scalar::one(field_));
}

Vec TensorQuotientAlgebra::reduce_tensor(int n, const Vec& v) const {
  Vec out;
  for (const auto& [w, c] : v) out.add_scaled(reduce_word(n, w), c);
  return out;
}

Vec TensorQuotientAlgebra::basis_to_words(int n, const Vec& v) const {
  Vec out;
  for (const auto& [k, c] : v) out.append(basis_word(n, k), c);
  return out;
}

std::int64_t TensorQuotientAlgebra::ideal_dim(int n) const {
  return word_count(n) - dim(n);
}

Vec TensorQuotientAlgebra::mul_basis(int i, std::int64_t a, int j, std::int64_t b) const {
  assert(i + j <= bound_);
  return reduce_word(i + j, words::concat(basis_word(i, a), basis_word(j, b), d_, j));
}

std::string TensorQuotientAlgebra::basis_label(int n, std::int64_t k) const {
  return words::label(basis_word(n, k), d_, n, names_);
}

TableAlgebra::TableAlgebra(Field f, int bound, std::vector<std::int64_t> dims,
                           std::vector<std::string> labels_flat)
    : GradedAlgebra(f, bound), labels_(std::move(labels_flat)) {
  if (dims.empty() || dims[0] != 1) throw AlgebraError("table algebra must be connected");
  set_dims(std::move(dims));
  table_.resize(static_cast<std::size_t>(bound) + 1);
  label_offset_.resize(static_cast<std::size_t>(bound) + 2, 0);
  for (int n = 0; n <= bound; ++n)
    label_offset_[static_cast<std::size_t>(n) + 1] =
        label_offset_[static_cast<std::size_t>(n)] + static_cast<std::size_t>(dim(n));
  for (int i = 0; i <= bound; ++i) {
    table_[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(bound - i) + 1);
    for (int j = 0; i + j <= bound; ++j) {
      table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].resize(
          static_cast<std::size_t>(dim(i) * dim(j)));
    }
  }
}

std::size_t TableAlgebra::key(std::int64_t a, int j, std::int64_t b) const {
  return static_cast<std::size_t>(a * dim(j) + b);
}

void TableAlgebra::set_product(int i, std::int64_t a, int j, std::int64_t b, Vec c) {
  assert(!finished_);
  table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][key(a, j, b)] =
      std::move(c);
}

void TableAlgebra::finish() {
  // the unit is basis element 0 of degree 0
  Scalar one = Scalar::one(field_);
  for (int n = 0; n <= bound_; ++n) {
    for (std::int64_t k = 0; k < dim(n); ++k) {
      set_product(0, 0, n, k, Vec::unit(k, one));
      if (n > 0) set_product(n, k, 0, 0, Vec::unit(k, one));
    }
  }
  finished_ = true;
  one_generated_ = true;
  for (int n = 2; n <= bound_; ++n) {
    Echelon span(field_, dim(n));
    for (std::int64_t a = 0; a < dim(1); ++a)
      for (std::int64_t b = 0; b < dim(n - 1); ++b) span.insert(mul_basis(1, a, n - 1, b));
    if (span.rank() != dim(n)) {
      one_generated_ = false;
      break;
    }
  }
  graded_commutative_ = compute_graded_commutative();
}

Vec TableAlgebra::mul_basis(int i, std::int64_t a, int j, std::int64_t b) const {
  assert(finished_ && i + j <= bound_);
  return table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][key(a, j, b)];
}

std::string TableAlgebra::basis_label(int n, std::int64_t k) const {
  std::size_t idx = label_offset_[static_cast<std::size_t>(n)] + static_cast<std::size_t>(k);
  if (idx < labels_.size()) return labels_[idx];
  return GradedAlgebra::basis_label(n, k);
}

bool check_associativity(const GradedAlgebra& alg, int max_total) {
  const int N = std::min(max_total, alg.bound());
  for (int i = 1; i <= N; ++i) {
    for (int j = 1; i + j <= N; ++j) {
      for (int k = 1; i + j + k <= N; ++k) {
        for (std::int64_t a = 0; a < alg.dim(i); ++a) {
          for (std::int64_t b = 0; b < alg.dim(j); ++b) {
            Vec ab = alg.mul_basis(i, a, j, b);
            for (std::int64_t c = 0; c < alg.dim(k); ++c) {
              Vec bc = alg.mul_basis(j, b, k, c);
              Vec lhs = alg.mul(i + j, ab, k, Vec::unit(c, Scalar::one(alg.field())));
              Vec rhs = alg.mul(i, Vec::unit(a, Scalar::one(alg.field())), j + k, bc);
              if (!(lhs == rhs)) return false;
            }
          }
        }
      }
    }
  }
  return true;
}

}  // namespace grlie
