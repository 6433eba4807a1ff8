#include "grlie/products.hpp"

#include <set>

#include "grlie/resolution.hpp"

namespace grlie {

LiePresentation free_product_lie(const LiePresentation& p, const LiePresentation& q) {
  if (!(p.field == q.field))
    throw AlgebraError("free product requires matching ground fields");
  LiePresentation out;
  out.name = p.name + "*" + q.name;
  out.field = p.field;
  out.truncation = std::min(p.truncation, q.truncation);

  std::set<std::string> pnames(p.generators.begin(), p.generators.end());
  bool clash = false;
  for (const auto& g : q.generators) clash = clash || pnames.count(g) > 0;
  std::string prefix_p = p.name.empty() ? "a" : p.name;
  std::string prefix_q = q.name.empty() ? "b" : q.name;
  if (prefix_p == prefix_q) {
    prefix_p = "a_" + prefix_p;
    prefix_q = "b_" + prefix_q;
  }
  auto rename = [&](const LiePresentation& src, const std::string& prefix) {
    for (const auto& g : src.generators)
      out.generators.push_back(clash ? prefix + "_" + g : g);
  };
  rename(p, prefix_p);
  rename(q, prefix_q);
  std::set<std::string> all(out.generators.begin(), out.generators.end());
  if (all.size() != out.generators.size())
    throw AlgebraError("generator name clash persists after prefixing");

  auto shift_word = [](const BracketPtr& w, int offset) {
    auto rec = [offset](auto&& self, const BracketTree& t) -> BracketPtr {
      if (t.is_leaf()) return BracketTree::leaf(t.gen() + offset);
      return BracketTree::node(self(self, t.left()), self(self, t.right()));
    };
    return rec(rec, *w);
  };
  for (const auto& rel : p.relations) out.relations.push_back(rel);
  for (const auto& rel : q.relations) {
    LieExpr e;
    e.degree = rel.degree;
    for (const auto& t : rel.terms)
      e.terms.push_back({t.coeff, shift_word(t.word, p.num_generators())});
    out.relations.push_back(std::move(e));
  }
  return out;
}

FreeProductAlgebra::FreeProductAlgebra(std::shared_ptr<const GradedAlgebra> a,
                                       std::shared_ptr<const GradedAlgebra> b)
    : GradedAlgebra(a->field(), std::min(a->bound(), b->bound())),
      a_(std::move(a)),
      b_(std::move(b)) {
  if (!(a_->field() == b_->field()))
    throw AlgebraError("free product requires matching ground fields");
  const int N = bound_;
  words_.resize(static_cast<std::size_t>(N) + 1);
  index_.resize(static_cast<std::size_t>(N) + 1);
  words_[0].push_back({});
  index_[0].emplace(Word{}, 0);

  // extend alternating words letter by letter, last letter first in recursion
  std::vector<std::int64_t> dims{1};
  for (int n = 1; n <= N; ++n) {
    auto& out = words_[static_cast<std::size_t>(n)];
    Word cur;
    auto emit = [&](auto&& self, int remaining, int last_factor) -> void {
      if (remaining == 0) {
        index_[static_cast<std::size_t>(n)].emplace(cur, static_cast<std::int64_t>(out.size()));
        out.push_back(cur);
        return;
      }
      for (std::int8_t fac = 0; fac <= 1; ++fac) {
        if (fac == last_factor) continue;
        const GradedAlgebra& f = fac == 0 ? *a_ : *b_;
        for (int d = 1; d <= remaining; ++d) {
          for (std::int64_t k = 0; k < f.dim(d); ++k) {
            cur.push_back({fac, static_cast<std::int16_t>(d), static_cast<std::int32_t>(k)});
            self(self, remaining - d, fac);
            cur.pop_back();
          }
        }
      }
    };
    emit(emit, n, -1);
    dims.push_back(static_cast<std::int64_t>(out.size()));
  }
  set_dims(std::move(dims));
  one_generated_ = a_->one_generated() && b_->one_generated();
  graded_commutative_ = compute_graded_commutative();
}

const FreeProductAlgebra::Word& FreeProductAlgebra::word_at(int n, std::int64_t k) const {
  return words_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

std::int64_t FreeProductAlgebra::word_index(int n, const Word& w) const {
  return index_[static_cast<std::size_t>(n)].at(w);
}

Vec FreeProductAlgebra::mul_basis(int i, std::int64_t a, int j, std::int64_t b) const {
  const Word& u = word_at(i, a);
  const Word& v = word_at(j, b);
  const int n = i + j;
  if (u.empty() || v.empty()) {
    const Word& w = u.empty() ? v : u;
    return Vec::unit(word_index(n, w), Scalar::one(field_));
  }
  if (u.back().factor != v.front().factor) {
    Word w = u;
    w.insert(w.end(), v.begin(), v.end());
    return Vec::unit(word_index(n, w), Scalar::one(field_));
  }
  // fuse the adjacent same-factor letters through the factor product
  const Letter& x = u.back();
  const Letter& y = v.front();
  const GradedAlgebra& f = x.factor == 0 ? *a_ : *b_;
  Vec fused = f.mul_basis(x.degree, x.index, y.degree, y.index);
  Vec out;
  for (const auto& [k, c] : fused) {
    Word w(u.begin(), u.end() - 1);
    w.push_back({x.factor, static_cast<std::int16_t>(x.degree + y.degree),
                 static_cast<std::int32_t>(k)});
    w.insert(w.end(), v.begin() + 1, v.end());
    out.add_scaled(Vec::unit(word_index(n, w), Scalar::one(field_)), c);
  }
  return out;
}

std::string FreeProductAlgebra::basis_label(int n, std::int64_t k) const {
  const Word& w = word_at(n, k);
  if (w.empty()) return "1";
  std::string s;
  for (const Letter& l : w) {
    if (!s.empty()) s += "|";
    s += (l.factor == 0 ? a_->basis_label(l.degree, l.index)
                        : b_->basis_label(l.degree, l.index));
  }
  return s;
}

std::shared_ptr<FreeProductAlgebra> free_product_algebra(
    std::shared_ptr<const GradedAlgebra> a, std::shared_ptr<const GradedAlgebra> b) {
  return std::make_shared<FreeProductAlgebra>(std::move(a), std::move(b));
}

std::shared_ptr<QuotientModule> induced_module(const Enveloping& env, const Subspace& h1) {
  return std::make_shared<QuotientModule>(
      env.algebra, right_ideal_of_subalgebra(env.alg(), h1));
}

MayerVietorisReport mayer_vietoris_check(const Enveloping& env, const Subspace& part_a,
                                         const Subspace& part_b) {
  const GradedAlgebra& u = env.alg();
  if (sum(part_a, part_b).dim() != u.dim(1))
    throw AlgebraError("the two parts do not generate the algebra in degree 1");
  MayerVietorisReport rep;
  auto ra = right_ideal_of_subalgebra(u, part_a);
  auto rb = right_ideal_of_subalgebra(u, part_b);
  for (int n = 1; n <= u.bound(); ++n) {
    const Subspace& sa = ra[static_cast<std::size_t>(n)];
    const Subspace& sb = rb[static_cast<std::size_t>(n)];
    Subspace meet = intersect(sa, sb);
    Subspace join = sum(sa, sb);
    MayerVietorisReport::Degree deg;
    deg.n = n;
    deg.dim_u = u.dim(n);
    deg.dim_ind_a = u.dim(n) - sa.dim();
    deg.dim_ind_b = u.dim(n) - sb.dim();
    deg.dim_intersection = meet.dim();
    deg.dim_sum = join.dim();
    deg.exact = meet.dim() == 0 && join.dim() == u.dim(n);
    if (!deg.exact && rep.pass) {
      rep.pass = false;
      rep.first_fail = n;
    }
    rep.degrees.push_back(deg);
  }
  return rep;
}

CohomologySumReport cohomology_sum_check(const LiePresentation& a, const LiePresentation& b,
                                         std::optional<int> truncation_override,
                                         std::int64_t word_cap) {
  auto env_a = build_enveloping(a, truncation_override, word_cap);
  auto env_b = build_enveloping(b, truncation_override, word_cap);
  auto env_ab = build_enveloping(free_product_lie(a, b), truncation_override, word_cap);
  CohomologySumReport rep{true, minimal_resolution(TrivialModule(env_ab.algebra)),
                          minimal_resolution(TrivialModule(env_a.algebra)),
                          minimal_resolution(TrivialModule(env_b.algebra))};
  const int N = rep.product_table.bound();
  for (int i = 0; i <= N && rep.pass; ++i) {
    for (int j = 0; j <= N && rep.pass; ++j) {
      const std::int64_t expected =
          i == 0 ? (j == 0 ? 1 : 0) : rep.a_table.at(i, j) + rep.b_table.at(i, j);
      rep.pass = rep.product_table.at(i, j) == expected;
    }
  }
  return rep;
}

}  // namespace grlie
