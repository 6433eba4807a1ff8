#pragma once

#include "grlie/algebra.hpp"
#include "grlie/hall.hpp"
#include "grlie/presentation.hpp"

namespace grlie {

// Truncated universal envelope of a presented Lie algebra: the tensor
// algebra on the generators modulo the ideal spanned by the expanded
// relations, together with the presentation it came from.
struct Enveloping {
  LiePresentation pres;
  std::shared_ptr<const TensorQuotientAlgebra> algebra;
  std::map<int, std::vector<Vec>> expanded_relations;  // word coordinates per degree

  const TensorQuotientAlgebra& alg() const { return *algebra; }
  int bound() const { return algebra->bound(); }
  const Field& field() const { return algebra->field(); }
};

Enveloping build_enveloping(const LiePresentation& pres,
                            std::optional<int> truncation_override = std::nullopt,
                            std::int64_t word_cap = 1'000'000);

// Degree-1-generated bracket closure of a subspace S of A_1 inside the
// algebra: M_1 = S, M_n = sum of [M_k, M_{n-k}]. Index 0 of the result is
// unused (zero space).
std::vector<Subspace> bracket_closure(const GradedAlgebra& a, const Subspace& degree_one);

// Components of the presented Lie algebra inside its envelope.
std::vector<Subspace> lie_components(const Enveloping& env);

std::vector<std::int64_t> family_dims(const std::vector<Subspace>& family);

// Checks each family component is closed under brackets with every other
// component in range (test hook for the Lie-subfamily invariant).
bool bracket_closed(const GradedAlgebra& a, const std::vector<Subspace>& family);

struct PbwReport {
  bool pass = true;
  int first_fail = -1;
  std::vector<mpz_class> expected;    // PBW product coefficients
  std::vector<std::int64_t> actual;   // algebra dims
};

// dim U_n against the coefficient of t^n in prod_m (1-t^m)^(-l_m).
PbwReport pbw_hilbert_check(const std::vector<std::int64_t>& algebra_dims,
                            const std::vector<std::int64_t>& lie_dims, int bound);
PbwReport pbw_hilbert_check(const Enveloping& env);

}  // namespace grlie
