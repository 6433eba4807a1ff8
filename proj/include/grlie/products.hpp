#pragma once

#include "grlie/deciders.hpp"
#include "grlie/enveloping.hpp"

namespace grlie {

// Coproduct presentation: disjoint union of generators and relations.
// Clashing generator names get factor prefixes.
LiePresentation free_product_lie(const LiePresentation& p, const LiePresentation& q);

// Free product of connected algebras: the degree-n component is indexed by
// alternating words z_1 ... z_k with letters in A_+ and B_+ basis elements,
// adjacent letters from different factors, degrees summing to n.
// Multiplication is concatenation, fusing adjacent same-factor letters
// through the factor's product.
class FreeProductAlgebra final : public GradedAlgebra {
public:
  FreeProductAlgebra(std::shared_ptr<const GradedAlgebra> a,
                     std::shared_ptr<const GradedAlgebra> b);

  struct Letter {
    std::int8_t factor;  // 0 = A, 1 = B
    std::int16_t degree;
    std::int32_t index;
    auto operator<=>(const Letter&) const = default;
  };
  using Word = std::vector<Letter>;

  const Word& word_at(int n, std::int64_t k) const;
  std::int64_t word_index(int n, const Word& w) const;

  Vec mul_basis(int i, std::int64_t a, int j, std::int64_t b) const override;
  std::string basis_label(int n, std::int64_t k) const override;

private:
  std::shared_ptr<const GradedAlgebra> a_, b_;
  std::vector<std::vector<Word>> words_;            // per degree
  std::vector<std::map<Word, std::int64_t>> index_;  // per degree
};

std::shared_ptr<FreeProductAlgebra> free_product_algebra(
    std::shared_ptr<const GradedAlgebra> a, std::shared_ptr<const GradedAlgebra> b);

// ind_H^L(F) = U(L) / U(L) H_+ for the subalgebra generated by a degree-1
// subspace; a cyclic module generated in degree 0.
std::shared_ptr<QuotientModule> induced_module(const Enveloping& env, const Subspace& h1);

struct MayerVietorisReport {
  bool pass = true;
  int first_fail = -1;
  // per degree n >= 1: exactness of 0 -> U(L)_n -> ind_A,n + ind_B,n -> 0,
  // i.e. R_A ∩ R_B = 0 and R_A + R_B = U(L)_n for the two right-ideal families
  struct Degree {
    int n;
    std::int64_t dim_u, dim_ind_a, dim_ind_b, dim_intersection, dim_sum;
    bool exact;
  };
  std::vector<Degree> degrees;
};

// Exactness of 0 -> U(L) -> ind_A(F) + ind_B(F) -> F -> 0 degreewise, where
// the first map is u -> (u + R_A, u + R_B) and the second the difference of
// the augmentations; this characterizes L = A ⊔ B among algebras the two
// parts generate.
MayerVietorisReport mayer_vietoris_check(const Enveloping& env, const Subspace& part_a,
                                         const Subspace& part_b);

struct CohomologySumReport {
  bool pass = true;
  BettiTable product_table, a_table, b_table;
};

// H(A ⊔ B) = H(A) ⊓ H(B) numerically: the product's trivial-module table
// equals the entrywise sum of the factor tables in positive cohomological
// degree, with b[0][0] = 1.
CohomologySumReport cohomology_sum_check(const LiePresentation& a, const LiePresentation& b,
                                         std::optional<int> truncation_override = std::nullopt,
                                         std::int64_t word_cap = 1'000'000);

}  // namespace grlie
