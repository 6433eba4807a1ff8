#pragma once

#include "grlie/algebra.hpp"

namespace grlie {

// Graded left module over a truncated graded algebra, with per-degree bases
// and exact action of algebra basis elements.
class TruncatedModule {
public:
  virtual ~TruncatedModule() = default;

  const GradedAlgebra& algebra() const { return *alg_; }
  int bound() const { return bound_; }
  std::int64_t dim(int n) const {
    return n < 0 || n > bound_ ? 0 : dims_[static_cast<std::size_t>(n)];
  }
  const std::vector<std::int64_t>& dims() const { return dims_; }

  // action of algebra basis element a (degree i) on module basis element m
  // (degree j), written in the degree-(i+j) module basis; requires i+j <= bound
  virtual Vec act_basis(int i, std::int64_t a, int j, std::int64_t m) const = 0;
  Vec act(int i, const Vec& x, int j, const Vec& v) const;

protected:
  TruncatedModule(std::shared_ptr<const GradedAlgebra> alg, int bound)
      : alg_(std::move(alg)), bound_(bound) {}
  void set_dims(std::vector<std::int64_t> dims) { dims_ = std::move(dims); }

  std::shared_ptr<const GradedAlgebra> alg_;
  int bound_;
  std::vector<std::int64_t> dims_;
};

// The trivial module F concentrated in degree 0; A_+ acts by zero.
class TrivialModule final : public TruncatedModule {
public:
  explicit TrivialModule(std::shared_ptr<const GradedAlgebra> alg);
  Vec act_basis(int i, std::int64_t a, int j, std::int64_t m) const override;
};

// The algebra as a left module over itself.
class AlgebraModule final : public TruncatedModule {
public:
  explicit AlgebraModule(std::shared_ptr<const GradedAlgebra> alg);
  Vec act_basis(int i, std::int64_t a, int j, std::int64_t m) const override;
};

// Quotient A / R by a family of subspaces R_n <= A_n that is closed under
// left multiplication by A_1 (left ideals, two-sided ideals, right-ideal
// families of induced modules). Basis: non-pivot algebra basis indices.
class QuotientModule final : public TruncatedModule {
public:
  QuotientModule(std::shared_ptr<const GradedAlgebra> alg, std::vector<Subspace> family);

  const Subspace& family_at(int n) const { return family_[static_cast<std::size_t>(n)]; }
  // class of an algebra-coordinates vector in the quotient basis
  Vec project(int n, const Vec& algebra_vec) const;
  // representative of a module basis element in algebra coordinates
  Vec representative(int n, std::int64_t m) const;

  Vec act_basis(int i, std::int64_t a, int j, std::int64_t m) const override;

private:
  std::vector<Subspace> family_;                     // 0..bound
  std::vector<std::vector<std::int64_t>> nonpivot_;  // quotient basis -> A basis index
};

// Submodule of A spanned degreewise by a family closed under the action.
class SubmoduleOfAlgebra final : public TruncatedModule {
public:
  SubmoduleOfAlgebra(std::shared_ptr<const GradedAlgebra> alg, std::vector<Subspace> family);

  const Subspace& family_at(int n) const { return family_[static_cast<std::size_t>(n)]; }
  Vec embed(int n, const Vec& module_vec) const;        // into algebra coordinates
  Vec coordinates(int n, const Vec& algebra_vec) const;  // from algebra coordinates

  Vec act_basis(int i, std::int64_t a, int j, std::int64_t m) const override;

private:
  std::vector<Subspace> family_;
};

// Quotient of a free module A (x) H (generators of degree 0) by the
// submodule generated by degree-1 seed vectors in A_1 (x) H. Coordinates of
// (A (x) H)_n are generator-major blocks of dim(A_n).
class FreeQuotientModule final : public TruncatedModule {
public:
  FreeQuotientModule(std::shared_ptr<const GradedAlgebra> alg, std::int64_t num_generators,
                     const std::vector<Vec>& degree_one_seeds);

  Vec act_basis(int i, std::int64_t a, int j, std::int64_t m) const override;

private:
  std::int64_t free_dim(int n) const { return alg_->dim(n) * h_; }
  std::int64_t h_;
  std::vector<Subspace> family_;                     // 0..bound, inside A_n^(+h)
  std::vector<std::vector<std::int64_t>> nonpivot_;  // module basis -> free index
};

// Degree shift: (M[s])_n = M_{n+s}; s <= 0 shifts the module up.
class ShiftedModule final : public TruncatedModule {
public:
  ShiftedModule(std::shared_ptr<const TruncatedModule> base, int shift);
  Vec act_basis(int i, std::int64_t a, int j, std::int64_t m) const override;

private:
  std::shared_ptr<const TruncatedModule> base_;
  int shift_;
};

// Left-ideal family generated by a degree-1 subspace: I_n = A_1 I_{n-1},
// I_1 = seed. For two_sided, additionally I_n += I_{n-1} A_1.
std::vector<Subspace> ideal_family(const GradedAlgebra& a, const Subspace& degree_one_seed,
                                   bool two_sided);

// Family U * span(components)_+ for a degree-1-generated subalgebra: the
// right-ideal family R_n = A_1 R_{n-1} + H_n, H = bracket closure of the seed.
std::vector<Subspace> right_ideal_of_subalgebra(const GradedAlgebra& a,
                                                const Subspace& degree_one_seed);

// Graded module map given degreewise by matrices taking source coordinates
// to target coordinates.
struct ModuleMap {
  const TruncatedModule* src = nullptr;
  const TruncatedModule* dst = nullptr;
  std::vector<Matrix> mats;  // index n: dim dst(n) x dim src(n), row-major

  Vec apply(int n, const Vec& v) const;
  bool is_a_linear(int max_degree) const;  // checked on basis pairs
};

struct SesReport {
  bool exact = true;
  int first_fail = -1;
};

// Degreewise exactness of 0 -> L -> M -> N -> 0.
SesReport verify_ses(const ModuleMap& incl, const ModuleMap& proj, int bound);

}  // namespace grlie
