#pragma once

#include "grlie/enveloping.hpp"
#include "grlie/hilbert.hpp"
#include "grlie/module.hpp"

namespace grlie {

// Quadratic presentation data: generator space V with named basis in degree
// 1 and a relation subspace W <= V (x) V (coordinates i*d + j for e_i (x) e_j),
// defining Q(V, W) = T(V)/(W).
struct QuadraticData {
  Field field;
  std::vector<std::string> gen_names;
  Subspace relations{Field{}, 0};  // ambient d*d

  int dim_v() const { return static_cast<int>(gen_names.size()); }
  bool operator==(const QuadraticData& o) const {
    return field == o.field && gen_names.size() == o.gen_names.size() &&
           relations == o.relations;
  }
};

// Q(V*, W-perp): the orthogonal complement under <a* (x) b*, v (x) w> = a*(v) b*(w).
QuadraticData quadratic_dual(const QuadraticData& q);

std::shared_ptr<TensorQuotientAlgebra> build_quadratic_algebra(const QuadraticData& q,
                                                               int bound,
                                                               std::int64_t word_cap = 1'000'000);

// Quadratic module data over Q(V, W): generators H in degree 0 and relations
// K <= V (x) H (coordinates generator-major: k*d + a -> a (x) h_k... stored a*h + k).
struct QuadraticModuleData {
  std::int64_t h_dim;
  Subspace relations{Field{}, 0};  // ambient d*h, coordinate a*h + k for e_a (x) h_k
};

// Q_{A^!}(H*, K-perp).
QuadraticModuleData quadratic_dual_module(const QuadraticModuleData& m, const QuadraticData& q);

// The module Q_A(H, K) itself, over a built algebra for Q(V, W).
std::shared_ptr<FreeQuotientModule> build_quadratic_module(
    std::shared_ptr<const GradedAlgebra> a, const QuadraticModuleData& m);

// Quadratic data of the universal envelope of a quadratic Lie presentation.
QuadraticData quadratic_data_of(const Enveloping& env);

struct LieToCommResult {
  QuadraticData dual;                                   // U(L)^!
  std::shared_ptr<const TensorQuotientAlgebra> algebra;  // built to the bound
};

// U(L)^! for a quadratic Lie presentation; the result is verified
// graded-commutative on basis pairs.
LieToCommResult lie_to_comm(const LiePresentation& pres,
                            std::optional<int> truncation_override = std::nullopt,
                            std::int64_t word_cap = 1'000'000);

// Series consistency oracle h_U(t) * h_dual(-t) = 1 through the common
// bound, computed from the envelope and its quadratic dual.
SeriesCheck koszul_series_check(const Enveloping& env, std::int64_t word_cap = 1'000'000);

// Inverse direction: a quadratic graded-commutative algebra Lambda(V*)/(Omega),
// given as Q(V*, R) with R containing every square alpha (x) alpha, turns into
// the Lie presentation  [v,v'] - sum_i omega_i(v, v') beta_i  on the dual
// basis, where (omega_i) is a lifted basis of Omega = R / squares and the
// beta_i solve omega_i(beta_j) = delta_ij exactly. The span of the expanded
// relations is verified to equal R-perp (hard error otherwise).
LiePresentation comm_to_lie(const QuadraticData& c, int truncation = 6);

// A[x] = A + Ax with x of degree 1 and
// (a1 + a2 x)(a1' + a2' x) = a1 a1' + (a1 a2' + (-1)^{|a1'|} a2 a1') x.
std::shared_ptr<TableAlgebra> skew_extension(const GradedAlgebra& a);

// Categorical product of connected graded-commutative algebras:
// (A ⊓ B)_n = A_n + B_n for n > 0 with componentwise multiplication.
std::shared_ptr<TableAlgebra> direct_sum(const GradedAlgebra& a, const GradedAlgebra& b);

}  // namespace grlie
