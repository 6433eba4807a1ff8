#include "grlie/resolution.hpp"

namespace grlie {

namespace {

// Free graded module over A with one block per generator; the degree-j
// component stacks blocks A_{j - t_g} in generator order.
struct FreeModule {
  std::vector<int> gen_degree;
  std::vector<Vec> gen_image;  // image of each generator in the previous layer

  std::int64_t dim(const GradedAlgebra& a, int j) const {
    std::int64_t d = 0;
    for (int t : gen_degree) d += a.dim(j - t);
    return d;
  }

  std::vector<std::int64_t> offsets(const GradedAlgebra& a, int j) const {
    std::vector<std::int64_t> off;
    off.reserve(gen_degree.size() + 1);
    std::int64_t d = 0;
    for (int t : gen_degree) {
      off.push_back(d);
      d += a.dim(j - t);
    }
    off.push_back(d);
    return off;
  }
};

// x in A_i applied to v in (P)_j, blockwise.
Vec free_act(const GradedAlgebra& a, const FreeModule& p, int i, const Vec& x, int j,
             const Vec& v) {
  const auto off_j = p.offsets(a, j);
  const auto off_out = p.offsets(a, i + j);
  Vec out;
  for (std::size_t g = 0; g < p.gen_degree.size(); ++g) {
    const std::int64_t lo = off_j[g], hi = off_j[g + 1];
    if (lo == hi) continue;
    Vec block;
    for (const auto& [k, c] : v) {
      if (k >= lo && k < hi) block.append(k - lo, c);
    }
    if (block.is_zero()) continue;
    Vec prod = a.mul(i, x, j - p.gen_degree[g], block);
    out.add_scaled(prod.shifted(off_out[g]), Scalar::one(a.field()));
  }
  return out;
}

// columns (target coordinates per source basis element) -> row-major matrix
Matrix columns_to_matrix(const Field& f, std::int64_t target_dim, std::vector<Vec> cols) {
  std::vector<std::vector<Vec::Entry>> rows(static_cast<std::size_t>(target_dim));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (const auto& [r, v] : cols[c])
      rows[static_cast<std::size_t>(r)].emplace_back(static_cast<std::int64_t>(c), v);
  }
  Matrix m(f, static_cast<std::int64_t>(cols.size()));
  for (auto& entries : rows) {
    Vec row;
    for (auto& [i, s] : entries) row.append(i, std::move(s));
    m.add_row(std::move(row));
  }
  return m;
}

}  // namespace

BettiTable minimal_resolution(const TruncatedModule& m) {
  const GradedAlgebra& a = m.algebra();
  const Field& f = a.field();
  const int N = m.bound();
  const Scalar one = Scalar::one(f);
  if (!a.one_generated())
    throw AlgebraError("minimal_resolution requires a 1-generated algebra");

  BettiTable table(N);

  // step 0: minimal generators of M; (A_+ M)_j = A_1 M_{j-1}
  FreeModule p0;
  for (int j = 0; j <= N; ++j) {
    std::vector<Vec> span;
    for (std::int64_t g = 0; g < a.dim(1); ++g)
      for (std::int64_t k = 0; k < m.dim(j - 1); ++k)
        span.push_back(m.act_basis(1, g, j - 1, k));
    Subspace radical = Subspace::span(f, m.dim(j), span);
    Subspace gens = complement(radical, Subspace::full(f, m.dim(j)));
    table.set(0, j, gens.dim());
    for (std::int64_t r = 0; r < gens.dim(); ++r) {
      p0.gen_degree.push_back(j);
      p0.gen_image.push_back(gens.basis_row(r));
    }
  }

  FreeModule prev = std::move(p0);   // P_{i-1}
  FreeModule before;                 // P_{i-2}; empty at i = 1
  for (int i = 1; i <= N; ++i) {
    // kernels of phi_{i-1} : P_{i-1} -> (i == 1 ? M : P_{i-2}), degreewise
    std::vector<Subspace> ker;
    ker.reserve(static_cast<std::size_t>(N) + 1);
    for (int j = 0; j <= N; ++j) {
      const auto off = prev.offsets(a, j);
      std::vector<Vec> cols;
      cols.reserve(static_cast<std::size_t>(prev.dim(a, j)));
      for (std::size_t g = 0; g < prev.gen_degree.size(); ++g) {
        const int t = prev.gen_degree[g];
        for (std::int64_t u = 0; u < a.dim(j - t); ++u) {
          Vec x = Vec::unit(u, one);
          cols.push_back(i == 1 ? m.act(j - t, x, t, prev.gen_image[g])
                               : free_act(a, before, j - t, x, t, prev.gen_image[g]));
        }
      }
      const std::int64_t target = i == 1 ? m.dim(j) : before.dim(a, j);
      ker.push_back(kernel(columns_to_matrix(f, target, std::move(cols))));
    }

    // minimal generators of the syzygy: K_j / A_1 K_{j-1}
    FreeModule next;
    for (int j = 0; j <= N; ++j) {
      std::vector<Vec> span;
      if (j >= 1) {
        const Subspace& kprev = ker[static_cast<std::size_t>(j - 1)];
        for (std::int64_t g = 0; g < a.dim(1); ++g) {
          Vec x = Vec::unit(g, one);
          for (std::int64_t r = 0; r < kprev.dim(); ++r)
            span.push_back(free_act(a, prev, 1, x, j - 1, kprev.basis_row(r)));
        }
      }
      const Subspace& kj = ker[static_cast<std::size_t>(j)];
      Subspace radical = Subspace::span(f, kj.ambient_dim(), span);
      Subspace gens = complement(radical, kj);
      table.set(i, j, gens.dim());
      for (std::int64_t r = 0; r < gens.dim(); ++r) {
        next.gen_degree.push_back(j);
        next.gen_image.push_back(gens.basis_row(r));
      }
    }
    if (next.gen_degree.empty()) break;  // resolution has terminated
    before = std::move(prev);
    prev = std::move(next);
  }
  return table;
}

}  // namespace grlie
