#pragma once

#include "grlie/presentation.hpp"
#include "grlie/vec.hpp"
#include "grlie/words.hpp"

namespace grlie {

// Hall basis of the free Lie algebra on d generators, by degree up to a bound.
// Convention: an element is a generator, or a bracket [u,v] with u < v in the
// (degree, creation index) order, where v = [a,b] additionally requires a <= u.
class HallBasis {
public:
  HallBasis(int num_generators, int max_degree);

  int num_generators() const { return d_; }
  int max_degree() const { return bound_; }
  int count(int degree) const { return static_cast<int>(by_degree_[static_cast<std::size_t>(degree)].size()); }
  // Bracket word of the k-th Hall element of the given degree.
  BracketPtr bracket(int degree, int k) const;
  // Expansion into the degree-n tensor word space on d generators.
  Vec tensor_expansion(int degree, int k, const Field& f) const;

private:
  struct Elem {
    int degree;
    int gen = -1;      // leaf
    int left = -1, right = -1;  // global indices
  };
  int order_index(int global) const { return global; }  // creation order is global order

  int d_, bound_;
  std::vector<Elem> elems_;                       // creation order, degree-major
  std::vector<std::vector<int>> by_degree_;       // degree -> global indices
};

// Number of degree-n Hall elements on d generators (necklace count):
// (1/n) sum_{k | n} mu(k) d^(n/k).
std::int64_t necklace_count(int d, int n);

// Expand a formal bracket word into the tensor word space (degree = word degree).
Vec expand_bracket(const BracketTree& w, int d, const Field& f);
// Expand a homogeneous Lie expression; all terms must share one degree.
Vec expand_expr(const LieExpr& e, int d, const Field& f);

}  // namespace grlie
