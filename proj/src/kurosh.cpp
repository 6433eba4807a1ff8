#include "grlie/kurosh.hpp"

#include "grlie/products.hpp"
#include "grlie/resolution.hpp"

namespace grlie {

namespace {

mpq_class scalar_to_rational(const Scalar& s) {
  if (s.is_rational_kind()) return s.rational_value();
  return mpq_class(static_cast<unsigned long>(s.residue_value()));
}

// [e_t, v] = e_t (x) v - v (x) e_t in the tensor word space on r letters.
Vec letter_bracket(int t, const Vec& v, int r, int deg_v, const Field& f) {
  Vec out;
  for (const auto& [w, c] : v) out.add_scaled(Vec::unit(words::concat(t, w, r, deg_v), c), Scalar::one(f));
  for (const auto& [w, c] : v) out.add_scaled(Vec::unit(words::concat(w, t, r, 1), c), -Scalar::one(f));
  return out;
}

}  // namespace

std::vector<std::int64_t> generate_subalgebra(const Enveloping& env, const Subspace& seed) {
  return family_dims(bracket_closure(env.alg(), seed));
}

SubalgebraReport subalgebra_presentation(const Enveloping& env, const Subspace& seed) {
  const GradedAlgebra& alg = env.alg();
  const Field& f = env.field();
  const int N = env.bound();
  const std::int64_t r = seed.dim();

  SubalgebraReport rep{seed,
                       std::vector<std::int64_t>(static_cast<std::size_t>(N) + 1, 0),
                       std::vector<std::int64_t>(static_cast<std::size_t>(N) + 1, 0),
                       true,
                       LiePresentation{}};
  rep.presentation.name = "sub";
  rep.presentation.field = f;
  rep.presentation.truncation = N;
  for (std::int64_t i = 1; i <= r; ++i)
    rep.presentation.generators.push_back("s" + std::to_string(i));
  if (r == 0) return rep;

  HallBasis hall(static_cast<int>(r), N);

  // phi: FreeLie(S) -> U(L), evaluated on hall elements degree by degree
  std::vector<std::vector<Vec>> value(static_cast<std::size_t>(N) + 1);
  value[1].reserve(static_cast<std::size_t>(r));
  for (std::int64_t i = 0; i < r; ++i) value[1].push_back(seed.basis_row(i));
  for (int n = 2; n <= N; ++n) {
    value[static_cast<std::size_t>(n)].reserve(static_cast<std::size_t>(hall.count(n)));
    for (int k = 0; k < hall.count(n); ++k) {
      BracketPtr w = hall.bracket(n, k);
      auto eval = [&](auto&& self, const BracketTree& t) -> Vec {
        if (t.is_leaf()) return seed.basis_row(t.gen());
        Vec l = self(self, t.left());
        Vec rr = self(self, t.right());
        return alg.bracket(t.left().degree(), l, t.right().degree(), rr);
      };
      value[static_cast<std::size_t>(n)].push_back(eval(eval, *w));
    }
  }

  // kernel of phi in hall coordinates, and its tensor-space image
  std::vector<Subspace> ker_tensor;  // degree-indexed, in T(S)_n coordinates
  ker_tensor.push_back(Subspace::zero(f, 1));
  ker_tensor.push_back(Subspace::zero(f, r));
  std::vector<Subspace> consequences;  // ideal of lower relations, tensor coords
  consequences.assign(2, Subspace::zero(f, 0));

  for (int n = 1; n <= N; ++n) {
    const std::int64_t hn = hall.count(n);
    // r <= dim A_1, so r^n is within the cap the algebra build already passed
    const std::int64_t tn = words::count(static_cast<int>(r), n);
    std::vector<Vec> cols(value[static_cast<std::size_t>(n)]);
    Matrix phi(f, hn);
    {  // transpose columns into rows over A_n coordinates
      std::vector<std::vector<Vec::Entry>> rows(static_cast<std::size_t>(alg.dim(n)));
      for (std::int64_t c = 0; c < hn; ++c)
        for (const auto& [row, v] : cols[static_cast<std::size_t>(c)])
          rows[static_cast<std::size_t>(row)].emplace_back(c, v);
      for (auto& entries : rows) {
        Vec row;
        for (auto& [i, s] : entries) row.append(i, std::move(s));
        phi.add_row(std::move(row));
      }
    }
    Subspace ker_hall = kernel(phi);
    rep.dims[static_cast<std::size_t>(n)] = hn - ker_hall.dim();

    // hall expansions, for the tensor-space picture and coordinate extraction
    std::vector<Vec> expansion;
    expansion.reserve(static_cast<std::size_t>(hn));
    for (std::int64_t k = 0; k < hn; ++k)
      expansion.push_back(hall.tensor_expansion(n, static_cast<int>(k), f));

    if (n >= 2) {
      std::vector<Vec> ker_vecs;
      for (std::int64_t i = 0; i < ker_hall.dim(); ++i) {
        Vec v;
        for (const auto& [k, c] : ker_hall.basis_row(i))
          v.add_scaled(expansion[static_cast<std::size_t>(k)], c);
        ker_vecs.push_back(std::move(v));
      }
      ker_tensor.push_back(Subspace::span(f, tn, ker_vecs));

      // consequences of relations of lower degree
      if (n == 2) {
        consequences.push_back(Subspace::zero(f, tn));
      } else {
        std::vector<Vec> span;
        Subspace lower = sum(consequences[static_cast<std::size_t>(n - 1)],
                             ker_tensor[static_cast<std::size_t>(n - 1)]);
        for (int t = 0; t < static_cast<int>(r); ++t)
          for (std::int64_t i = 0; i < lower.dim(); ++i)
            span.push_back(letter_bracket(t, lower.basis_row(i), static_cast<int>(r), n - 1, f));
        consequences.push_back(Subspace::span(f, tn, span));
      }

      Subspace fresh = complement(consequences[static_cast<std::size_t>(n)],
                                  ker_tensor[static_cast<std::size_t>(n)]);
      rep.relation_counts[static_cast<std::size_t>(n)] = fresh.dim();
      if (fresh.dim() > 0 && n > 2) rep.quadratic = false;

      if (fresh.dim() > 0) {
        // express each new relation in hall coordinates
        Echelon aug(f, tn + hn);
        for (std::int64_t k = 0; k < hn; ++k) {
          Vec row = expansion[static_cast<std::size_t>(k)];
          row.set(tn + k, Scalar::one(f));
          aug.insert(std::move(row));
        }
        for (std::int64_t i = 0; i < fresh.dim(); ++i) {
          Vec residue = aug.reduce(fresh.basis_row(i));
          LieExpr e;
          e.degree = n;
          for (const auto& [idx, c] : residue) {
            if (idx < tn)
              throw AlgebraError("relation vector escaped the free Lie subspace");
            e.terms.push_back({scalar_to_rational(-c),
                               hall.bracket(n, static_cast<int>(idx - tn))});
          }
          rep.presentation.relations.push_back(std::move(e));
        }
      }
    }
  }
  return rep;
}

DistinguishedBasis distinguished_basis(const Subspace& h1, std::int64_t dim_a,
                                       std::int64_t dim_b) {
  const Field& f = h1.field();
  if (h1.ambient_dim() != dim_a + dim_b)
    throw AlgebraError("H1 must live in the tagged direct sum A_1 + B_1");
  std::vector<Vec> a_rows, b_rows;
  for (std::int64_t i = 0; i < dim_a; ++i) a_rows.push_back(Vec::unit(i, Scalar::one(f)));
  for (std::int64_t i = 0; i < dim_b; ++i)
    b_rows.push_back(Vec::unit(dim_a + i, Scalar::one(f)));
  Subspace block_a = Subspace::span(f, h1.ambient_dim(), a_rows);
  Subspace block_b = Subspace::span(f, h1.ambient_dim(), b_rows);

  DistinguishedBasis out;
  Subspace ha = intersect(h1, block_a);
  Subspace hb = intersect(h1, block_b);
  for (std::int64_t i = 0; i < ha.dim(); ++i) out.in_a.push_back(ha.basis_row(i));
  for (std::int64_t i = 0; i < hb.dim(); ++i) out.in_b.push_back(hb.basis_row(i));
  Subspace mixed = complement(sum(ha, hb), h1);
  for (std::int64_t i = 0; i < mixed.dim(); ++i) out.mixed.push_back(mixed.basis_row(i));

  auto project = [&](const Vec& v, bool to_a) {
    Vec p;
    for (const auto& [i, c] : v)
      if ((i < dim_a) == to_a) p.append(to_a ? i : i - dim_a, c);
    return p;
  };
  // both projections of every mixed vector are nonzero, and the projections
  // together with the matching factor part stay independent
  for (bool side : {true, false}) {
    Echelon ech(f, side ? dim_a : dim_b);
    for (const auto& v : side ? out.in_a : out.in_b) {
      if (!ech.insert(project(v, side)))
        throw AlgebraError("distinguished basis invariant failed: factor part dependent");
    }
    for (const auto& v : out.mixed) {
      Vec p = project(v, side);
      if (p.is_zero())
        throw AlgebraError("distinguished basis invariant failed: zero projection");
      if (!ech.insert(std::move(p)))
        throw AlgebraError("distinguished basis invariant failed: dependent projection");
    }
  }
  return out;
}

FreenessReport freeness_check(const LiePresentation& pres,
                              std::optional<int> truncation_override, std::int64_t word_cap) {
  Enveloping env = build_enveloping(pres, truncation_override, word_cap);
  FreenessReport rep;
  rep.bound = env.bound();
  BettiTable t = minimal_resolution(TrivialModule(env.algebra));
  for (int j = 0; j <= rep.bound; ++j) {
    if (t.at(2, j) != 0) {
      rep.free_up_to_bound = false;
      rep.witness = BettiTable::Witness{2, j, t.at(2, j)};
      break;
    }
  }
  rep.dims = family_dims(lie_components(env));
  const int rank = env.pres.num_generators();
  rep.necklace.push_back(0);
  for (int n = 1; n <= rep.bound; ++n) rep.necklace.push_back(necklace_count(rank, n));
  rep.necklace_match = rep.dims == rep.necklace;
  return rep;
}

IntersectionReport intersection_triviality_check(const Enveloping& product_env,
                                                 std::int64_t dim_a, std::int64_t dim_b,
                                                 const Subspace& h1, bool a_side) {
  const TensorQuotientAlgebra& u = product_env.alg();
  const Field& f = product_env.field();
  if (u.dim(1) != dim_a + dim_b) throw AlgebraError("factor dimensions do not add up");
  const std::int64_t lo = a_side ? 0 : dim_a;
  const std::int64_t hi = a_side ? dim_a : dim_a + dim_b;
  {
    std::vector<Vec> rows;
    for (std::int64_t i = lo; i < hi; ++i) rows.push_back(Vec::unit(i, Scalar::one(f)));
    Subspace block = Subspace::span(f, u.dim(1), rows);
    if (intersect(h1, block).dim() != 0)
      throw AlgebraError("precondition H1 ∩ factor = 0 violated");
  }

  IntersectionReport rep;
  auto closure = bracket_closure(u, h1);
  const int d = u.num_generators();
  for (int n = 1; n <= u.bound(); ++n) {
    // span of the images of pure-factor words of degree n
    std::vector<Vec> rows;
    if (hi > lo) {
      std::vector<int> digit(static_cast<std::size_t>(n), 0);
      for (;;) {
        std::int64_t w = 0;
        for (int g : digit) w = w * d + (lo + g);
        rows.push_back(u.reduce_word(n, w));
        int i = n - 1;
        while (i >= 0 && digit[static_cast<std::size_t>(i)] == static_cast<int>(hi - lo) - 1)
          digit[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++digit[static_cast<std::size_t>(i)];
      }
    }
    Subspace pure = Subspace::span(f, u.dim(n), rows);
    if (intersect(closure[static_cast<std::size_t>(n)], pure).dim() != 0) {
      rep.pass = false;
      rep.first_fail = n;
      return rep;
    }
  }
  return rep;
}

KuroshDecomposition kurosh_decompose(const LiePresentation& a, const LiePresentation& b,
                                     const Subspace& h1, const SubspaceStrategy& strategy,
                                     std::optional<int> truncation_override, int jobs,
                                     std::int64_t word_cap) {
  const int N = truncation_override.value_or(std::min(a.truncation, b.truncation));
  const Field& f = h1.field();
  KuroshDecomposition out;
  out.bound = N;

  Enveloping env_a = build_enveloping(a, N, word_cap);
  Enveloping env_b = build_enveloping(b, N, word_cap);
  for (const auto* env : {&env_a, &env_b}) {
    BlochKatoReport bk = is_bloch_kato(*env, strategy, jobs, word_cap);
    if (!bk.verdict)
      throw AlgebraError("factor '" + env->pres.name + "' is not Bloch-Kato (" + bk.reason +
                         "); the decomposition theorem does not apply");
    if (bk.sampled) {
      out.conditional = true;
      out.conditional_reason =
          "Bloch-Kato hypothesis only sampled (" + strategy.label() + ")";
    }
  }

  const std::int64_t da = env_a.alg().dim(1), db = env_b.alg().dim(1);
  out.h1_ambient = da + db;
  out.basis = distinguished_basis(h1, da, db);

  // factor intersections live inside the factors
  auto factor_seed = [&](const std::vector<Vec>& rows, bool a_side) {
    std::vector<Vec> shifted;
    for (const Vec& v : rows) shifted.push_back(a_side ? v : v.shifted(-da));
    return Subspace::span(f, a_side ? da : db, shifted);
  };
  SubalgebraReport sub_a = subalgebra_presentation(env_a, factor_seed(out.basis.in_a, true));
  SubalgebraReport sub_b = subalgebra_presentation(env_b, factor_seed(out.basis.in_b, false));
  sub_a.presentation.name = "ha";
  sub_b.presentation.name = "hb";
  for (auto& g : sub_a.presentation.generators) g = "a" + g.substr(1);
  for (auto& g : sub_b.presentation.generators) g = "b" + g.substr(1);

  LiePresentation free_w;
  free_w.name = "w";
  free_w.field = f;
  free_w.truncation = N;
  for (std::size_t i = 1; i <= out.basis.mixed.size(); ++i)
    free_w.generators.push_back("w" + std::to_string(i));

  out.model = free_product_lie(free_product_lie(sub_a.presentation, sub_b.presentation), free_w);
  out.model.name = "model";
  out.model.truncation = N;

  Enveloping env_l = build_enveloping(free_product_lie(a, b), N, word_cap);
  out.subalgebra_dims = family_dims(bracket_closure(env_l.alg(), h1));
  Enveloping env_model = build_enveloping(out.model, N, word_cap);
  out.model_dims = family_dims(lie_components(env_model));

  out.verified = true;
  for (int n = 1; n <= N; ++n) {
    if (out.subalgebra_dims[static_cast<std::size_t>(n)] !=
        out.model_dims[static_cast<std::size_t>(n)]) {
      out.verified = false;
      out.first_mismatch = n;
      break;
    }
  }

  // injectivity ladder: U(H) -> ind_F(F) + ind_P(F) inside U(L), degrees <= 2,
  // plus the cokernel dimensions (expected those of the trivial module)
  {
    const GradedAlgebra& u = env_l.alg();
    const Scalar one = Scalar::one(f);
    Subspace f1 = Subspace::span(f, u.dim(1), out.basis.mixed);
    std::vector<Vec> prows = out.basis.in_a;
    prows.insert(prows.end(), out.basis.in_b.begin(), out.basis.in_b.end());
    Subspace p1 = Subspace::span(f, u.dim(1), prows);
    if (intersect(f1, p1).dim() != 0 || sum(f1, p1).dim() != h1.dim())
      throw AlgebraError("distinguished basis does not split H1");

    // U(H)_n = span of length-n products of H1 elements
    std::vector<Subspace> uh;
    uh.push_back(Subspace::full(f, u.dim(0)));
    uh.push_back(h1);
    for (int n = 2; n <= N; ++n) {
      std::vector<Vec> span;
      const Subspace& prev = uh[static_cast<std::size_t>(n - 1)];
      for (std::int64_t i = 0; i < h1.dim(); ++i)
        for (std::int64_t j = 0; j < prev.dim(); ++j)
          span.push_back(u.mul(1, h1.basis_row(i), n - 1, prev.basis_row(j)));
      uh.push_back(Subspace::span(f, u.dim(n), span));
    }
    // R_X,n = sum_k U(H)_{n-k} * X_k for the two inner subalgebras
    auto right_ideal = [&](const Subspace& seed) {
      std::vector<Subspace> comps = bracket_closure(u, seed);
      std::vector<Subspace> fam;
      fam.push_back(Subspace::zero(f, u.dim(0)));
      for (int n = 1; n <= N; ++n) {
        std::vector<Vec> span;
        for (int k = 1; k <= n; ++k) {
          const Subspace& x = comps[static_cast<std::size_t>(k)];
          const Subspace& uu = uh[static_cast<std::size_t>(n - k)];
          for (std::int64_t i = 0; i < uu.dim(); ++i)
            for (std::int64_t j = 0; j < x.dim(); ++j)
              span.push_back(u.mul(n - k, uu.basis_row(i), k, x.basis_row(j)));
        }
        fam.push_back(Subspace::span(f, u.dim(n), span));
      }
      return fam;
    };
    auto rf = right_ideal(f1);
    auto rp = right_ideal(p1);
    out.injective_low_degrees =
        intersect(rf[1], rp[1]).dim() == 0 &&
        (N < 2 || intersect(rf[2], rp[2]).dim() == 0);
    out.cokernel_dims.push_back(1);
    for (int n = 1; n <= N; ++n) {
      const std::int64_t un = uh[static_cast<std::size_t>(n)].dim();
      const std::int64_t ind_f = un - rf[static_cast<std::size_t>(n)].dim();
      const std::int64_t ind_p = un - rp[static_cast<std::size_t>(n)].dim();
      const std::int64_t image =
          un - intersect(rf[static_cast<std::size_t>(n)], rp[static_cast<std::size_t>(n)]).dim();
      out.cokernel_dims.push_back(ind_f + ind_p - image);
    }
  }
  return out;
}

}  // namespace grlie
