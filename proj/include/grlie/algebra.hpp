#pragma once

#include <map>
#include <memory>
#include <unordered_map>

#include "grlie/subspace.hpp"
#include "grlie/words.hpp"

namespace grlie {

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Connected graded algebra, truncated at internal degree `bound`. Basis
// elements of each degree are indexed 0..dim(n)-1; products of basis
// elements are exact vectors in the target degree's coordinates.
class GradedAlgebra {
public:
  virtual ~GradedAlgebra() = default;

  const Field& field() const { return field_; }
  int bound() const { return bound_; }
  std::int64_t dim(int n) const {
    return n < 0 || n > bound_ ? 0 : dims_[static_cast<std::size_t>(n)];
  }
  const std::vector<std::int64_t>& dims() const { return dims_; }

  // product of basis element a of degree i with basis element b of degree j;
  // requires 0 <= i+j <= bound
  virtual Vec mul_basis(int i, std::int64_t a, int j, std::int64_t b) const = 0;
  Vec mul(int i, const Vec& x, int j, const Vec& y) const;
  Vec bracket(int i, const Vec& x, int j, const Vec& y) const;  // xy - yx
  virtual std::string basis_label(int n, std::int64_t k) const;

  bool one_generated() const { return one_generated_; }
  bool graded_commutative() const { return graded_commutative_; }

protected:
  GradedAlgebra(Field f, int bound) : field_(f), bound_(bound) {}
  void set_dims(std::vector<std::int64_t> dims) { dims_ = std::move(dims); }
  // scans basis pairs for ab = (-1)^{ij} ba, early exit on failure
  bool compute_graded_commutative() const;

  Field field_;
  int bound_;
  std::vector<std::int64_t> dims_;
  bool one_generated_ = false;
  bool graded_commutative_ = false;
};

// Quotient of the tensor algebra on d degree-1 generators by the two-sided
// ideal spanned degreewise by the given homogeneous relation vectors.
// Basis of each degree: the tensor words outside the ideal's pivot set, in
// lexicographic order.
class TensorQuotientAlgebra final : public GradedAlgebra {
public:
  TensorQuotientAlgebra(Field f, std::vector<std::string> generator_names, int bound,
                        const std::map<int, std::vector<Vec>>& relations,
                        std::int64_t word_cap = 1'000'000);

  int num_generators() const { return d_; }
  const std::vector<std::string>& generator_names() const { return names_; }

  std::int64_t word_count(int n) const { return words::count(d_, n); }
  std::int64_t basis_word(int n, std::int64_t k) const;
  // position of a word in the basis, or -1 when the word is an ideal pivot
  std::int64_t word_position(int n, std::int64_t w) const;
  // image of a single tensor word in basis coordinates
  Vec reduce_word(int n, std::int64_t w) const;
  // image of a tensor-word vector in basis coordinates
  Vec reduce_tensor(int n, const Vec& v) const;
  // inclusion of basis coordinates back into tensor word coordinates
  Vec basis_to_words(int n, const Vec& v) const;
  std::int64_t ideal_dim(int n) const;

  Vec mul_basis(int i, std::int64_t a, int j, std::int64_t b) const override;
  std::string basis_label(int n, std::int64_t k) const override;

private:
  static std::int64_t word_position_in(const std::vector<std::int64_t>& basis, std::int64_t w);

  int d_;
  std::vector<std::string> names_;
  struct Level {
    std::vector<std::int64_t> basis;                  // non-pivot words, ascending
    std::unordered_map<std::int64_t, Vec> reduction;  // pivot word -> basis coords
  };
  std::vector<Level> levels_;
};

// Algebra with explicitly tabulated products (for duals, skew extensions,
// direct sums and other small constructed algebras).
class TableAlgebra final : public GradedAlgebra {
public:
  TableAlgebra(Field f, int bound, std::vector<std::int64_t> dims,
               std::vector<std::string> labels_flat = {});

  // set c = a*b for basis elements; may be called only during construction
  void set_product(int i, std::int64_t a, int j, std::int64_t b, Vec c);
  void finish();  // validates unit behaviour, computes flags

  Vec mul_basis(int i, std::int64_t a, int j, std::int64_t b) const override;
  std::string basis_label(int n, std::int64_t k) const override;

private:
  std::size_t key(std::int64_t a, int j, std::int64_t b) const;
  std::vector<std::vector<std::vector<Vec>>> table_;  // [i][j][a*dim(j)+b]
  std::vector<std::string> labels_;
  std::vector<std::size_t> label_offset_;
  bool finished_ = false;
};

// Associativity of basis-triple products up to a total degree (test hook).
bool check_associativity(const GradedAlgebra& a, int max_total);

}  // namespace grlie
