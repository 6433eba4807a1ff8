#include "grlie/bar.hpp"

#include <map>

namespace grlie {

namespace {

// basis tuple of A_+^(x)i (x) M in one internal degree:
// [d_1, k_1, ..., d_i, k_i, e, m]
using Tuple = std::vector<std::int64_t>;

struct Layer {
  std::vector<Tuple> basis;
  std::map<Tuple, std::int64_t> index;
};

void enumerate(const TruncatedModule& m, int slots_left, int degree_left, Tuple& cur,
               Layer& out) {
  const GradedAlgebra& a = m.algebra();
  if (slots_left == 0) {
    for (std::int64_t k = 0; k < m.dim(degree_left); ++k) {
      Tuple t = cur;
      t.push_back(degree_left);
      t.push_back(k);
      out.index.emplace(t, static_cast<std::int64_t>(out.basis.size()));
      out.basis.push_back(std::move(t));
    }
    return;
  }
  for (int d = 1; d + (slots_left - 1) <= degree_left; ++d) {
    for (std::int64_t k = 0; k < a.dim(d); ++k) {
      cur.push_back(d);
      cur.push_back(k);
      enumerate(m, slots_left - 1, degree_left - d, cur, out);
      cur.pop_back();
      cur.pop_back();
    }
  }
}

}  // namespace

BettiTable bar_ext_oracle(const TruncatedModule& m, int bound, std::int64_t cap) {
  const GradedAlgebra& a = m.algebra();
  const Field& f = a.field();
  if (bound > m.bound()) throw AlgebraError("bar bound exceeds the module bound");
  BettiTable table(bound);

  std::int64_t total = 0;
  for (int j = 0; j <= bound; ++j) {
    // layers i = 0 .. j+1 of internal degree j
    std::vector<Layer> layers(static_cast<std::size_t>(j) + 2);
    for (int i = 0; i <= j + 1; ++i) {
      Tuple cur;
      enumerate(m, i, j, cur, layers[static_cast<std::size_t>(i)]);
      total += static_cast<std::int64_t>(layers[static_cast<std::size_t>(i)].basis.size());
      if (total > cap)
        throw CapError("bar complex basis exceeds the resource cap " + std::to_string(cap));
    }

    // rank of each differential layer_i -> layer_{i-1}
    std::vector<std::int64_t> rk(static_cast<std::size_t>(j) + 3, 0);
    for (int i = 1; i <= j + 1; ++i) {
      const Layer& src = layers[static_cast<std::size_t>(i)];
      const Layer& dst = layers[static_cast<std::size_t>(i - 1)];
      Echelon ech(f, static_cast<std::int64_t>(dst.basis.size()));
      for (const Tuple& t : src.basis) {
        Vec img;
        // inner face maps: merge slots (s, s+1), signs alternate
        for (int s = 0; s + 1 < i; ++s) {
          const int d1 = static_cast<int>(t[static_cast<std::size_t>(2 * s)]);
          const std::int64_t k1 = t[static_cast<std::size_t>(2 * s + 1)];
          const int d2 = static_cast<int>(t[static_cast<std::size_t>(2 * s + 2)]);
          const std::int64_t k2 = t[static_cast<std::size_t>(2 * s + 3)];
          const Scalar sign = Scalar::of(f, s % 2 == 0 ? 1 : -1);
          for (const auto& [k, c] : a.mul_basis(d1, k1, d2, k2)) {
            Tuple u;
            u.reserve(t.size() - 2);
            u.insert(u.end(), t.begin(), t.begin() + 2 * s);
            u.push_back(d1 + d2);
            u.push_back(k);
            u.insert(u.end(), t.begin() + 2 * s + 4, t.end());
            img.add_scaled(Vec::unit(dst.index.at(u), c), sign);
          }
        }
        // last face: absorb the final algebra slot into the module
        {
          const int di = static_cast<int>(t[static_cast<std::size_t>(2 * (i - 1))]);
          const std::int64_t ki = t[static_cast<std::size_t>(2 * (i - 1) + 1)];
          const int e = static_cast<int>(t[t.size() - 2]);
          const std::int64_t mm = t[t.size() - 1];
          const Scalar sign = Scalar::of(f, i % 2 == 0 ? 1 : -1);
          for (const auto& [k, c] : m.act_basis(di, ki, e, mm)) {
            Tuple u(t.begin(), t.begin() + 2 * (i - 1));
            u.push_back(di + e);
            u.push_back(k);
            img.add_scaled(Vec::unit(dst.index.at(u), c), sign);
          }
        }
        ech.insert(std::move(img));
      }
      rk[static_cast<std::size_t>(i)] = ech.rank();
    }

    for (int i = 0; i <= j; ++i) {
      const std::int64_t ci =
          static_cast<std::int64_t>(layers[static_cast<std::size_t>(i)].basis.size());
      table.set(i, j, ci - rk[static_cast<std::size_t>(i)] - rk[static_cast<std::size_t>(i) + 1]);
    }
  }
  return table;
}

}  // namespace grlie
