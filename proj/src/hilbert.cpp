#include "grlie/hilbert.hpp"

namespace grlie {

std::vector<mpz_class> hilbert_series(const GradedAlgebra& a) {
  std::vector<mpz_class> h;
  for (int n = 0; n <= a.bound(); ++n) h.emplace_back(static_cast<long>(a.dim(n)));
  return h;
}

std::vector<mpz_class> pbw_series(const std::vector<std::int64_t>& lie_dims, int bound) {
  std::vector<mpz_class> out(static_cast<std::size_t>(bound) + 1, 0);
  out[0] = 1;
  for (int m = 1; m <= bound && m < static_cast<int>(lie_dims.size()); ++m) {
    const std::int64_t l = lie_dims[static_cast<std::size_t>(m)];
    if (l == 0) continue;
    // (1 - t^m)^(-l) = sum_k C(l+k-1, k) t^(mk)
    std::vector<mpz_class> factor(static_cast<std::size_t>(bound) + 1, 0);
    factor[0] = 1;
    mpz_class binom = 1;
    for (int k = 1; m * k <= bound; ++k) {
      binom = binom * (l + k - 1) / k;  // exact: consecutive binomials
      factor[static_cast<std::size_t>(m * k)] = binom;
    }
    out = series_product(out, factor, bound);
  }
  return out;
}

std::vector<mpz_class> series_product(const std::vector<mpz_class>& a,
                                      const std::vector<mpz_class>& b, int bound) {
  std::vector<mpz_class> out(static_cast<std::size_t>(bound) + 1, 0);
  for (std::size_t i = 0; i < a.size() && i <= static_cast<std::size_t>(bound); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= static_cast<std::size_t>(bound); ++j)
      out[i + j] += a[i] * b[j];
  }
  return out;
}

std::vector<mpq_class> series_inverse(const std::vector<mpz_class>& h, int bound) {
  if (h.empty() || h[0] == 0) throw std::invalid_argument("series has no inverse");
  std::vector<mpq_class> inv(static_cast<std::size_t>(bound) + 1, 0);
  mpq_class lead(h[0]);
  inv[0] = 1 / lead;
  for (int n = 1; n <= bound; ++n) {
    mpq_class acc = 0;
    for (int k = 1; k <= n; ++k) {
      if (k < static_cast<int>(h.size()))
        acc += mpq_class(h[static_cast<std::size_t>(k)]) * inv[static_cast<std::size_t>(n - k)];
    }
    inv[static_cast<std::size_t>(n)] = -acc / lead;
  }
  return inv;
}

SeriesCheck koszul_series_check(const std::vector<mpz_class>& h_algebra,
                                const std::vector<mpz_class>& h_dual, int bound) {
  SeriesCheck out;
  for (int n = 1; n <= bound; ++n) {
    mpz_class acc = 0;
    for (int k = 0; k <= n; ++k) {
      if (k >= static_cast<int>(h_dual.size()) ||
          n - k >= static_cast<int>(h_algebra.size()))
        continue;
      mpz_class term = h_algebra[static_cast<std::size_t>(n - k)] *
                       h_dual[static_cast<std::size_t>(k)];
      acc += (k % 2 == 0) ? term : -term;
    }
    if (acc != 0) {
      out.pass = false;
      out.first_fail = n;
      break;
    }
  }
  return out;
}

SeriesCheck free_product_series_check(const std::vector<mpz_class>& h_f,
                                      const std::vector<mpz_class>& h_a,
                                      const std::vector<mpz_class>& h_b, int bound) {
  SeriesCheck out;
  auto inv_f = series_inverse(h_f, bound);
  auto inv_a = series_inverse(h_a, bound);
  auto inv_b = series_inverse(h_b, bound);
  for (int n = 0; n <= bound; ++n) {
    mpq_class rhs = inv_a[static_cast<std::size_t>(n)] + inv_b[static_cast<std::size_t>(n)];
    if (n == 0) rhs -= 1;
    if (inv_f[static_cast<std::size_t>(n)] != rhs) {
      out.pass = false;
      out.first_fail = n;
      break;
    }
  }
  return out;
}

}  // namespace grlie
