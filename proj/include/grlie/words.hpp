#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grlie/field.hpp"

namespace grlie {

struct CapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Length-n words over d generators, ordered lexicographically with the
// generator declaration order; a word is addressed by its base-d value.
namespace words {

inline std::int64_t count(int d, int n) {
  std::int64_t c = 1;
  for (int i = 0; i < n; ++i) c *= d;
  return c;
}

// d^n with an overflow/resource guard
std::int64_t checked_count(int d, int n, std::int64_t cap);

inline std::int64_t concat(std::int64_t u, std::int64_t v, int d, int deg_v) {
  return u * count(d, deg_v) + v;
}

std::vector<int> digits(std::int64_t w, int d, int n);
std::int64_t from_digits(const std::vector<int>& digits, int d);
std::string label(std::int64_t w, int d, int n, const std::vector<std::string>& names);

}  // namespace words
}  // namespace grlie
