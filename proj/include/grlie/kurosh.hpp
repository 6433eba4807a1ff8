#pragma once

#include "grlie/deciders.hpp"
#include "grlie/enveloping.hpp"
#include "grlie/strategy.hpp"

namespace grlie {

struct SubalgebraReport {
  Subspace seed;                              // S <= L_1
  std::vector<std::int64_t> dims;             // dims of <S>_n, n = 0..N (0 unused)
  std::vector<std::int64_t> relation_counts;  // minimal relations per degree, same layout
  bool quadratic = true;                      // no minimal relation of degree >= 3
  LiePresentation presentation;               // minimal presentation on the seed basis
};

// Dimensions of the 1-generated subalgebra <S>: M_1 = S, M_n = sum [M_k, M_{n-k}].
std::vector<std::int64_t> generate_subalgebra(const Enveloping& env, const Subspace& seed);

// Minimal presentation of <S>: the kernel of FreeLie(S) -> <S> degreewise,
// modulo the ideal closure of the lower-degree relations; new relations are
// emitted as bracket expressions in the chosen basis of S.
SubalgebraReport subalgebra_presentation(const Enveloping& env, const Subspace& seed);

struct DistinguishedBasis {
  std::vector<Vec> in_a;   // basis of H_1 ∩ A_1 (coordinates in A_1 ⊕ B_1)
  std::vector<Vec> in_b;   // basis of H_1 ∩ B_1
  std::vector<Vec> mixed;  // completion W~; every vector has both projections nonzero
};

// Distinguished basis of a subspace of a tagged direct sum A_1 ⊕ B_1; the
// mixed part is chosen by the deterministic complement rule and its
// projections to either factor are independent from the factor parts.
DistinguishedBasis distinguished_basis(const Subspace& h1, std::int64_t dim_a,
                                       std::int64_t dim_b);

struct FreenessReport {
  bool free_up_to_bound = true;
  int bound = 0;
  std::optional<BettiTable::Witness> witness;   // first nonzero b[2][j]
  bool necklace_match = true;                   // dims against Hall counts
  std::vector<std::int64_t> dims;               // Lie dims, 0 unused
  std::vector<std::int64_t> necklace;           // expected free dims
};

// H^2 = 0 freeness criterion: free up to N iff b[2][j] = 0 for all j <= N in
// the trivial-module table, cross-checked against necklace counts.
FreenessReport freeness_check(const LiePresentation& pres,
                              std::optional<int> truncation_override = std::nullopt,
                              std::int64_t word_cap = 1'000'000);

struct IntersectionReport {
  bool pass = true;
  int first_fail = -1;
};

// Under H_1 ∩ A_1 = 0 (precondition, verified), checks that no nonzero
// element of <H_1>_n lies in the span of the pure-A words of U(A ⊔ B), for
// all n <= N; `a_side` selects which factor plays A.
IntersectionReport intersection_triviality_check(const Enveloping& product_env,
                                                 std::int64_t dim_a, std::int64_t dim_b,
                                                 const Subspace& h1, bool a_side = true);

struct KuroshDecomposition {
  DistinguishedBasis basis;
  LiePresentation model;  // <B_A> ⊔ <B_B> ⊔ FreeLie(W~)
  std::vector<std::int64_t> subalgebra_dims;  // of <H_1> in U(A ⊔ B)
  std::vector<std::int64_t> model_dims;       // of the model's Lie components
  bool verified = false;
  int first_mismatch = -1;
  bool conditional = false;        // Bloch-Kato hypothesis only sampled
  std::string conditional_reason;
  bool injective_low_degrees = false;         // U(H) -> ind_F ⊕ ind_P in degrees <= 2
  std::vector<std::int64_t> cokernel_dims;    // expected (1, 0, ..., 0)
  int bound = 0;
  std::int64_t h1_ambient = 0;                // dim A_1 + dim B_1
};

// Decomposition of <H_1> <= A ⊔ B as <H_1 ∩ A> ⊔ <H_1 ∩ B> ⊔ FreeLie(W~),
// verified by per-degree dimension equality plus the low-degree injectivity
// of U(H) -> ind_F(F) ⊕ ind_P(F). Requires both factors to pass the
// Bloch-Kato check under `strategy` (a sampled pass makes the result
// conditional, not an error).
KuroshDecomposition kurosh_decompose(const LiePresentation& a, const LiePresentation& b,
                                     const Subspace& h1, const SubspaceStrategy& strategy,
                                     std::optional<int> truncation_override = std::nullopt,
                                     int jobs = 1, std::int64_t word_cap = 1'000'000);

}  // namespace grlie
