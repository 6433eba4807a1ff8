#include "grlie/enveloping.hpp"

#include "grlie/hilbert.hpp"

namespace grlie {

Enveloping build_enveloping(const LiePresentation& pres, std::optional<int> truncation_override,
                            std::int64_t word_cap) {
  Enveloping env;
  env.pres = pres;
  if (truncation_override) env.pres.truncation = *truncation_override;
  const int N = env.pres.truncation;
  const int d = env.pres.num_generators();

  for (const auto& rel : env.pres.relations) {
    if (rel.degree > N)
      throw AlgebraError("relation of degree " + std::to_string(rel.degree) +
                         " does not fit truncation " + std::to_string(N));
    Vec v = expand_expr(rel, d, env.pres.field);
    if (!v.is_zero()) env.expanded_relations[rel.degree].push_back(std::move(v));
  }
  env.algebra = std::make_shared<TensorQuotientAlgebra>(
      env.pres.field, env.pres.generators, N, env.expanded_relations, word_cap);
  return env;
}

std::vector<Subspace> bracket_closure(const GradedAlgebra& a, const Subspace& degree_one) {
  const int N = a.bound();
  if (degree_one.ambient_dim() != a.dim(1))
    throw AlgebraError("degree-1 subspace has wrong ambient dimension");
  std::vector<Subspace> fam;
  fam.reserve(static_cast<std::size_t>(N) + 1);
  fam.push_back(Subspace::zero(a.field(), a.dim(0) > 0 ? a.dim(0) : 0));  // unused
  fam.push_back(degree_one);
  for (int n = 2; n <= N; ++n) {
    std::vector<Vec> span;
    for (int k = 1; 2 * k <= n; ++k) {
      const Subspace& u = fam[static_cast<std::size_t>(k)];
      const Subspace& v = fam[static_cast<std::size_t>(n - k)];
      for (std::int64_t i = 0; i < u.dim(); ++i) {
        for (std::int64_t j = 0; j < v.dim(); ++j) {
          if (k == n - k && j <= i) continue;  // antisymmetry
          span.push_back(a.bracket(k, u.basis_row(i), n - k, v.basis_row(j)));
        }
      }
    }
    fam.push_back(Subspace::span(a.field(), a.dim(n), span));
  }
  return fam;
}

std::vector<Subspace> lie_components(const Enveloping& env) {
  return bracket_closure(env.alg(), Subspace::full(env.field(), env.alg().dim(1)));
}

std::vector<std::int64_t> family_dims(const std::vector<Subspace>& family) {
  std::vector<std::int64_t> dims;
  dims.reserve(family.size());
  for (const auto& s : family) dims.push_back(s.dim());
  return dims;
}

bool bracket_closed(const GradedAlgebra& a, const std::vector<Subspace>& family) {
  const int N = a.bound();
  for (int i = 1; i < static_cast<int>(family.size()); ++i) {
    for (int j = i; i + j <= N && j < static_cast<int>(family.size()); ++j) {
      const Subspace& u = family[static_cast<std::size_t>(i)];
      const Subspace& v = family[static_cast<std::size_t>(j)];
      for (std::int64_t r = 0; r < u.dim(); ++r) {
        for (std::int64_t s = 0; s < v.dim(); ++s) {
          Vec br = a.bracket(i, u.basis_row(r), j, v.basis_row(s));
          if (!family[static_cast<std::size_t>(i + j)].contains(br)) return false;
        }
      }
    }
  }
  return true;
}

PbwReport pbw_hilbert_check(const std::vector<std::int64_t>& algebra_dims,
                            const std::vector<std::int64_t>& lie_dims, int bound) {
  PbwReport rep;
  std::vector<mpz_class> series = pbw_series(lie_dims, bound);
  for (int n = 0; n <= bound; ++n) {
    rep.expected.push_back(series[static_cast<std::size_t>(n)]);
    rep.actual.push_back(n < static_cast<int>(algebra_dims.size())
                             ? algebra_dims[static_cast<std::size_t>(n)]
                             : 0);
    if (rep.pass && rep.expected.back() != rep.actual.back()) {
      rep.pass = false;
      rep.first_fail = n;
    }
  }
  return rep;
}

PbwReport pbw_hilbert_check(const Enveloping& env) {
  auto fam = lie_components(env);
  return pbw_hilbert_check(env.alg().dims(), family_dims(fam), env.bound());
}

}  // namespace grlie
