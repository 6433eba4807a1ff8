#pragma once

#include "grlie/enveloping.hpp"
#include "grlie/module.hpp"
#include "grlie/resolution.hpp"
#include "grlie/strategy.hpp"

namespace grlie {

struct KoszulCertificate {
  enum class Verdict { KoszulUpToBound, Fails, NotOneGenerated };
  Verdict verdict;
  int bound;
  std::optional<BettiTable::Witness> witness;  // when failing
  BettiTable table;

  bool koszul() const { return verdict == Verdict::KoszulUpToBound; }
};

// Off-diagonal scan of the trivial-module Betti table. Inputs whose table
// shows generators above degree 1 (b[1][j] != 0 for j > 1) are reported as
// not 1-generated, a distinct verdict from failing Koszulity.
KoszulCertificate is_koszul(std::shared_ptr<const GradedAlgebra> a);

// A/I for the ideal generated in degree 1 by I1 (one-sided when A is
// graded-commutative, two-sided otherwise).
std::shared_ptr<QuotientModule> quotient_by_degree_one_ideal(
    std::shared_ptr<const GradedAlgebra> a, const Subspace& i1);
BettiTable ext_of_quotient(std::shared_ptr<const GradedAlgebra> a, const Subspace& i1);

struct UniversalKoszulReport {
  bool verdict = true;
  bool sampled = false;
  int bound = 0;
  std::int64_t checked = 0;
  std::optional<Subspace> witness;  // first failing ideal seed
};

UniversalKoszulReport is_universally_koszul(std::shared_ptr<const GradedAlgebra> a,
                                            const SubspaceStrategy& strategy, int jobs = 1);

struct BlochKatoReport {
  bool verdict = true;
  bool sampled = false;
  int bound = 0;
  std::int64_t checked = 0;
  std::optional<Subspace> witness;  // first failing degree-1 subspace
  std::string reason;               // "non-quadratic subalgebra" or "off-diagonal ext"
};

BlochKatoReport is_bloch_kato(const Enveloping& env, const SubspaceStrategy& strategy,
                              int jobs = 1, std::int64_t word_cap = 1'000'000);

struct EulerCheckReport {
  bool pass = true;
  int first_fail = -1;  // failing internal degree
  bool input_exact = true;
};

// Long-exact-sequence Euler characteristic: for 0 -> L -> M -> N -> 0 exact,
// sum_i (-1)^i (b_L[i][j] - b_M[i][j] + b_N[i][j]) = 0 for every j <= bound.
EulerCheckReport les_euler_check(const TruncatedModule& l, const TruncatedModule& mm,
                                 const TruncatedModule& n, const ModuleMap& incl,
                                 const ModuleMap& proj);

}  // namespace grlie
