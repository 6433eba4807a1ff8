#pragma once

#include "grlie/algebra.hpp"

namespace grlie {

// Degree-wise dimensions as an integer power series, h[0..bound].
std::vector<mpz_class> hilbert_series(const GradedAlgebra& a);

// prod_{m>=1} (1 - t^m)^(-l_m) truncated at t^bound, l_m = lie_dims[m].
std::vector<mpz_class> pbw_series(const std::vector<std::int64_t>& lie_dims, int bound);

// Multiplicative inverse of a series with constant term 1, mod t^(bound+1).
std::vector<mpq_class> series_inverse(const std::vector<mpz_class>& h, int bound);

std::vector<mpz_class> series_product(const std::vector<mpz_class>& a,
                                      const std::vector<mpz_class>& b, int bound);

struct SeriesCheck {
  bool pass = true;
  int first_fail = -1;
};

// Numerical Koszulity consequence: coefficients of h_A(t) * h_dual(-t)
// vanish in degrees 1..bound. Necessary, never sufficient; a pass is
// advisory only.
SeriesCheck koszul_series_check(const std::vector<mpz_class>& h_algebra,
                                const std::vector<mpz_class>& h_dual, int bound);

// Free-product identity 1/h_F = 1/h_A + 1/h_B - 1, checked through t^bound.
SeriesCheck free_product_series_check(const std::vector<mpz_class>& h_f,
                                      const std::vector<mpz_class>& h_a,
                                      const std::vector<mpz_class>& h_b, int bound);

}  // namespace grlie
