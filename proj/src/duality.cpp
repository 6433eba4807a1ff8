#include "grlie/duality.hpp"

#include <map>

namespace grlie {

namespace {

std::string dual_name(const std::string& n) {
  if (!n.empty() && n.back() == '\'') return n.substr(0, n.size() - 1);
  return n + "'";
}

mpq_class scalar_to_rational(const Scalar& s) {
  if (s.is_rational_kind()) return s.rational_value();
  return mpq_class(static_cast<unsigned long>(s.residue_value()));
}

}  // namespace

QuadraticData quadratic_dual(const QuadraticData& q) {
  const int d = q.dim_v();
  Matrix rows(q.field, static_cast<std::int64_t>(d) * d);
  for (std::int64_t r = 0; r < q.relations.dim(); ++r) rows.add_row(q.relations.basis_row(r));
  QuadraticData out;
  out.field = q.field;
  for (const auto& n : q.gen_names) out.gen_names.push_back(dual_name(n));
  out.relations = kernel(rows);
  return out;
}

std::shared_ptr<TensorQuotientAlgebra> build_quadratic_algebra(const QuadraticData& q,
                                                               int bound,
                                                               std::int64_t word_cap) {
  std::map<int, std::vector<Vec>> rels;
  for (std::int64_t r = 0; r < q.relations.dim(); ++r)
    rels[2].push_back(q.relations.basis_row(r));
  return std::make_shared<TensorQuotientAlgebra>(q.field, q.gen_names, bound, rels, word_cap);
}

QuadraticModuleData quadratic_dual_module(const QuadraticModuleData& m,
                                          const QuadraticData& q) {
  Matrix rows(q.field, static_cast<std::int64_t>(q.dim_v()) * m.h_dim);
  for (std::int64_t r = 0; r < m.relations.dim(); ++r) rows.add_row(m.relations.basis_row(r));
  return QuadraticModuleData{m.h_dim, kernel(rows)};
}

std::shared_ptr<FreeQuotientModule> build_quadratic_module(
    std::shared_ptr<const GradedAlgebra> a, const QuadraticModuleData& m) {
  // relation coordinates a*h + k agree with the generator-major free layout
  // k*dim(A_1) + a after transposition
  std::vector<Vec> seeds;
  for (std::int64_t r = 0; r < m.relations.dim(); ++r) {
    Vec seed;
    for (const auto& [idx, c] : m.relations.basis_row(r)) {
      const std::int64_t gen = idx % m.h_dim, pos = idx / m.h_dim;
      seed.set(gen * a->dim(1) + pos, c);
    }
    seeds.push_back(std::move(seed));
  }
  return std::make_shared<FreeQuotientModule>(a, m.h_dim, seeds);
}

QuadraticData quadratic_data_of(const Enveloping& env) {
  for (const auto& rel : env.pres.relations) {
    if (rel.degree != 2)
      throw AlgebraError("presentation is not quadratic: relation of degree " +
                         std::to_string(rel.degree));
  }
  const int d = env.pres.num_generators();
  std::vector<Vec> rows;
  if (auto it = env.expanded_relations.find(2); it != env.expanded_relations.end())
    rows = it->second;
  QuadraticData q;
  q.field = env.field();
  q.gen_names = env.pres.generators;
  q.relations = Subspace::span(q.field, static_cast<std::int64_t>(d) * d, rows);
  return q;
}

LieToCommResult lie_to_comm(const LiePresentation& pres,
                            std::optional<int> truncation_override, std::int64_t word_cap) {
  Enveloping env = build_enveloping(pres, truncation_override, word_cap);
  LieToCommResult out;
  out.dual = quadratic_dual(quadratic_data_of(env));
  out.algebra = build_quadratic_algebra(out.dual, env.bound(), word_cap);
  if (!out.algebra->graded_commutative())
    throw AlgebraError("dual of the envelope is not graded-commutative");
  return out;
}

SeriesCheck koszul_series_check(const Enveloping& env, std::int64_t word_cap) {
  auto dual = build_quadratic_algebra(quadratic_dual(quadratic_data_of(env)), env.bound(),
                                      word_cap);
  return koszul_series_check(hilbert_series(env.alg()), hilbert_series(*dual), env.bound());
}

LiePresentation comm_to_lie(const QuadraticData& c, int truncation) {
  const Field& f = c.field;
  const int d = c.dim_v();
  const std::int64_t dd = static_cast<std::int64_t>(d) * d;
  const Scalar one = Scalar::one(f);

  // squares span: alpha (x) alpha for all alpha = e_ii and e_ij + e_ji
  std::vector<Vec> sq;
  for (int i = 0; i < d; ++i) sq.push_back(Vec::unit(i * d + i, one));
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      Vec v;
      v.set(static_cast<std::int64_t>(i) * d + j, one);
      v.set(static_cast<std::int64_t>(j) * d + i, one);
      sq.push_back(std::move(v));
    }
  }
  Subspace squares = Subspace::span(f, dd, sq);
  if (!c.relations.contains(squares))
    throw AlgebraError("input is not an exterior-algebra quotient: squares not in relations");

  // lifted basis of Omega = R / squares
  Subspace omega = complement(squares, c.relations);
  const std::int64_t m = omega.dim();

  // wedge coordinates: pairs (a<b) in lex order
  std::vector<std::pair<int, int>> wedges;
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) wedges.emplace_back(a, b);

  // evaluation on antisymmetrized tensors: E[i][(ab)] = w_i(e_ab) - w_i(e_ba)
  Matrix eval(f, static_cast<std::int64_t>(wedges.size()));
  for (std::int64_t i = 0; i < m; ++i) {
    const Vec& w = omega.basis_row(i);
    Vec row;
    for (std::size_t k = 0; k < wedges.size(); ++k) {
      auto [a, b] = wedges[k];
      Scalar s;
      if (const Scalar* x = w.coeff(static_cast<std::int64_t>(a) * d + b)) s += *x;
      if (const Scalar* y = w.coeff(static_cast<std::int64_t>(b) * d + a)) s -= *y;
      if (!s.is_zero()) row.append(static_cast<std::int64_t>(k), s);
    }
    eval.add_row(std::move(row));
  }

  // right inverse: beta_j in wedge coordinates with E beta_j = e_j,
  // free coordinates set to zero (pivot-greedy determinism)
  std::vector<Vec> beta(static_cast<std::size_t>(m));
  {
    Matrix aug(f, static_cast<std::int64_t>(wedges.size()) + m);
    for (std::int64_t i = 0; i < m; ++i) {
      Vec row = eval.row(i);
      row.set(static_cast<std::int64_t>(wedges.size()) + i, one);
      aug.add_row(std::move(row));
    }
    RrefResult r = rref(aug);
    for (std::int64_t i = 0; i < r.mat.rows(); ++i) {
      const Vec& row = r.mat.row(i);
      if (row.lead() >= static_cast<std::int64_t>(wedges.size()))
        throw AlgebraError("degenerate relation space: pairing not solvable");
      for (std::int64_t j = 0; j < m; ++j) {
        if (const Scalar* cc = row.coeff(static_cast<std::int64_t>(wedges.size()) + j))
          beta[static_cast<std::size_t>(j)].set(row.lead(), *cc);
      }
    }
  }

  LiePresentation out;
  out.name = "lie_of_" + std::to_string(d) + "gens";
  out.field = f;
  out.truncation = truncation;
  for (const auto& n : c.gen_names) out.generators.push_back(dual_name(n));

  for (std::size_t k = 0; k < wedges.size(); ++k) {
    auto [a, b] = wedges[k];
    // formal coefficients on basis brackets [v_p, v_q], p < q
    std::map<std::pair<int, int>, mpq_class> coeffs;
    coeffs[{a, b}] = 1;
    for (std::int64_t i = 0; i < m; ++i) {
      const Scalar* c_ab = eval.row(i).coeff(static_cast<std::int64_t>(k));
      if (!c_ab) continue;
      for (const auto& [widx, bc] : beta[static_cast<std::size_t>(i)]) {
        auto [p, q] = wedges[static_cast<std::size_t>(widx)];
        coeffs[{p, q}] -= scalar_to_rational(*c_ab * bc);
      }
    }
    LieExpr e;
    e.degree = 2;
    for (const auto& [pq, coeff] : coeffs) {
      if (Scalar::of(f, coeff).is_zero()) continue;
      e.terms.push_back({coeff, BracketTree::node(BracketTree::leaf(pq.first),
                                                  BracketTree::leaf(pq.second))});
    }
    if (!e.terms.empty()) out.relations.push_back(std::move(e));
  }

  // the produced ideal must equal R-perp in degree 2
  std::vector<Vec> expanded;
  for (const auto& rel : out.relations) {
    Vec v = expand_expr(rel, d, f);
    if (!v.is_zero()) expanded.push_back(std::move(v));
  }
  Subspace w_lie = Subspace::span(f, dd, expanded);
  Matrix rel_rows(f, dd);
  for (std::int64_t r = 0; r < c.relations.dim(); ++r)
    rel_rows.add_row(c.relations.basis_row(r));
  if (!(w_lie == kernel(rel_rows)))
    throw AlgebraError("dual construction mismatch: relation span differs from R-perp");
  return out;
}

std::shared_ptr<TableAlgebra> skew_extension(const GradedAlgebra& a) {
  if (!a.graded_commutative())
    throw AlgebraError("skew extension requires a graded-commutative algebra");
  const int N = a.bound();
  const Field& f = a.field();
  std::vector<std::int64_t> dims;
  std::vector<std::string> labels;
  for (int n = 0; n <= N; ++n) {
    dims.push_back(a.dim(n) + a.dim(n - 1));
    for (std::int64_t k = 0; k < a.dim(n); ++k) labels.push_back(a.basis_label(n, k));
    for (std::int64_t k = 0; k < a.dim(n - 1); ++k)
      labels.push_back(n == 1 ? "x" : a.basis_label(n - 1, k) + ".x");
  }
  auto out = std::make_shared<TableAlgebra>(f, N, dims, labels);
  for (int i = 1; i <= N - 1; ++i) {
    for (int j = 1; i + j <= N; ++j) {
      const std::int64_t xoff_i = a.dim(i), xoff_j = a.dim(j), xoff_out = a.dim(i + j);
      for (std::int64_t p = 0; p < dims[static_cast<std::size_t>(i)]; ++p) {
        const bool p_x = p >= xoff_i;
        for (std::int64_t q = 0; q < dims[static_cast<std::size_t>(j)]; ++q) {
          const bool q_x = q >= xoff_j;
          Vec prod;
          if (!p_x && !q_x) {
            prod = a.mul_basis(i, p, j, q);
          } else if (!p_x && q_x) {
            prod = a.mul_basis(i, p, j - 1, q - xoff_j).shifted(xoff_out);
          } else if (p_x && !q_x) {
            prod = a.mul_basis(i - 1, p - xoff_i, j, q).shifted(xoff_out);
            if (j % 2 != 0) prod.scale(Scalar::of(f, -1));
          }  // x-times-x vanishes
          out->set_product(i, p, j, q, std::move(prod));
        }
      }
    }
  }
  out->finish();
  return out;
}

std::shared_ptr<TableAlgebra> direct_sum(const GradedAlgebra& a, const GradedAlgebra& b) {
  if (!(a.field() == b.field())) throw AlgebraError("direct sum needs one common field");
  if (!a.graded_commutative() || !b.graded_commutative())
    throw AlgebraError("direct sum requires graded-commutative factors");
  const int N = std::min(a.bound(), b.bound());
  const Field& f = a.field();
  std::vector<std::int64_t> dims{1};
  std::vector<std::string> labels{"1"};
  for (int n = 1; n <= N; ++n) {
    dims.push_back(a.dim(n) + b.dim(n));
    for (std::int64_t k = 0; k < a.dim(n); ++k) labels.push_back("a:" + a.basis_label(n, k));
    for (std::int64_t k = 0; k < b.dim(n); ++k) labels.push_back("b:" + b.basis_label(n, k));
  }
  auto out = std::make_shared<TableAlgebra>(f, N, dims, labels);
  for (int i = 1; i <= N - 1; ++i) {
    for (int j = 1; i + j <= N; ++j) {
      for (std::int64_t p = 0; p < dims[static_cast<std::size_t>(i)]; ++p) {
        const bool p_a = p < a.dim(i);
        for (std::int64_t q = 0; q < dims[static_cast<std::size_t>(j)]; ++q) {
          const bool q_a = q < a.dim(j);
          Vec prod;
          if (p_a && q_a) {
            prod = a.mul_basis(i, p, j, q);
          } else if (!p_a && !q_a) {
            prod = b.mul_basis(i, p - a.dim(i), j, q - a.dim(j)).shifted(a.dim(i + j));
          }  // cross products vanish
          out->set_product(i, p, j, q, std::move(prod));
        }
      }
    }
  }
  out->finish();
  return out;
}

}  // namespace grlie
