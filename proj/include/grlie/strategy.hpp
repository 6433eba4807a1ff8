#pragma once

#include <cstdint>
#include <random>

#include "grlie/subspace.hpp"

namespace grlie {

// Enumeration plan for subspace quantifiers. Over F_p "exhaustive" walks
// every subspace; over Q only the sampled strategies are available and any
// verdict they produce is labelled "sampled", never "proved".
struct SubspaceStrategy {
  enum class Kind { Exhaustive, Coordinate, CoordinateRandom };
  Kind kind = Kind::Exhaustive;
  int samples = 8;
  std::uint64_t seed = 1;

  static SubspaceStrategy exhaustive() { return {Kind::Exhaustive, 0, 0}; }
  static SubspaceStrategy coordinate() { return {Kind::Coordinate, 0, 0}; }
  static SubspaceStrategy coordinate_random(int k, std::uint64_t seed) {
    return {Kind::CoordinateRandom, k, seed};
  }
  // "exhaustive" | "coordinate" | "coordinate+random(<k>)"
  static SubspaceStrategy parse(const std::string& text, std::uint64_t seed);
  // sensible default for the field: exhaustive over F_p, sampled over Q
  static SubspaceStrategy default_for(const Field& f, std::uint64_t seed);

  bool sampled() const { return kind != Kind::Exhaustive; }
  std::string label() const;
};

// All subspaces of F_p^ambient in a deterministic order (rank ascending,
// then pivot sets and fill values lexicographically). Throws for Q.
std::vector<Subspace> all_subspaces(const Field& f, std::int64_t ambient);

// The subspaces visited by a strategy, in a deterministic order.
std::vector<Subspace> enumerate_subspaces(const Field& f, std::int64_t ambient,
                                          const SubspaceStrategy& strategy);

// Seeded random subspace (entries in a small box over Q, uniform over F_p).
Subspace random_subspace(const Field& f, std::int64_t ambient, std::mt19937_64& rng);

// Runs fn(0..n-1) on up to `jobs` threads; results must be written to
// pre-sized slots. Rethrows the first exception.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

}  // namespace grlie
