#include "grlie/module.hpp"

#include "grlie/enveloping.hpp"

namespace grlie {

Vec TruncatedModule::act(int i, const Vec& x, int j, const Vec& v) const {
  Vec out;
  for (const auto& [a, ca] : x) {
    for (const auto& [m, cm] : v) {
      out.add_scaled(act_basis(i, a, j, m), ca * cm);
    }
  }
  return out;
}

TrivialModule::TrivialModule(std::shared_ptr<const GradedAlgebra> alg)
    : TruncatedModule(alg, alg->bound()) {
  std::vector<std::int64_t> dims(static_cast<std::size_t>(bound_) + 1, 0);
  dims[0] = 1;
  set_dims(std::move(dims));
}

Vec TrivialModule::act_basis(int i, std::int64_t, int j, std::int64_t m) const {
  if (i == 0 && j == 0) return Vec::unit(m, Scalar::one(alg_->field()));
  return Vec{};
}

AlgebraModule::AlgebraModule(std::shared_ptr<const GradedAlgebra> alg)
    : TruncatedModule(alg, alg->bound()) {
  set_dims(alg_->dims());
}

Vec AlgebraModule::act_basis(int i, std::int64_t a, int j, std::int64_t m) const {
  return alg_->mul_basis(i, a, j, m);
}

QuotientModule::QuotientModule(std::shared_ptr<const GradedAlgebra> alg,
                               std::vector<Subspace> family)
    : TruncatedModule(alg, alg->bound()), family_(std::move(family)) {
  if (static_cast<int>(family_.size()) != bound_ + 1)
    throw AlgebraError("quotient family must cover degrees 0..bound");
  std::vector<std::int64_t> dims;
  nonpivot_.resize(family_.size());
  for (int n = 0; n <= bound_; ++n) {
    const Subspace& s = family_[static_cast<std::size_t>(n)];
    if (s.ambient_dim() != alg_->dim(n)) throw AlgebraError("quotient family ambient mismatch");
    std::vector<bool> pivot(static_cast<std::size_t>(alg_->dim(n)), false);
    for (auto p : s.pivots()) pivot[static_cast<std::size_t>(p)] = true;
    for (std::int64_t k = 0; k < alg_->dim(n); ++k)
      if (!pivot[static_cast<std::size_t>(k)]) nonpivot_[static_cast<std::size_t>(n)].push_back(k);
    dims.push_back(static_cast<std::int64_t>(nonpivot_[static_cast<std::size_t>(n)].size()));
  }
  set_dims(std::move(dims));
}

Vec QuotientModule::project(int n, const Vec& algebra_vec) const {
  Vec residue = family_[static_cast<std::size_t>(n)].reduce(algebra_vec);
  const auto& np = nonpivot_[static_cast<std::size_t>(n)];
  Vec out;
  for (const auto& [k, c] : residue) {
    auto it = std::lower_bound(np.begin(), np.end(), k);
    out.append(static_cast<std::int64_t>(it - np.begin()), c);
  }
  return out;
}

Vec QuotientModule::representative(int n, std::int64_t m) const {
  return Vec::unit(nonpivot_[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)],
                   Scalar::one(alg_->field()));
}

Vec QuotientModule::act_basis(int i, std::int64_t a, int j, std::int64_t m) const {
  Vec prod = alg_->mul(i, Vec::unit(a, Scalar::one(alg_->field())), j, representative(j, m));
  return project(i + j, prod);
}

SubmoduleOfAlgebra::SubmoduleOfAlgebra(std::shared_ptr<const GradedAlgebra> alg,
                                       std::vector<Subspace> family)
    : TruncatedModule(alg, alg->bound()), family_(std::move(family)) {
  if (static_cast<int>(family_.size()) != bound_ + 1)
    throw AlgebraError("submodule family must cover degrees 0..bound");
  std::vector<std::int64_t> dims;
  for (int n = 0; n <= bound_; ++n) dims.push_back(family_[static_cast<std::size_t>(n)].dim());
  set_dims(std::move(dims));
}

Vec SubmoduleOfAlgebra::embed(int n, const Vec& module_vec) const {
  Vec out;
  const Subspace& s = family_[static_cast<std::size_t>(n)];
  for (const auto& [k, c] : module_vec) out.add_scaled(s.basis_row(k), c);
  return out;
}

Vec SubmoduleOfAlgebra::coordinates(int n, const Vec& algebra_vec) const {
  return family_[static_cast<std::size_t>(n)].coordinates(algebra_vec);
}

Vec SubmoduleOfAlgebra::act_basis(int i, std::int64_t a, int j, std::int64_t m) const {
  Vec prod = alg_->mul(i, Vec::unit(a, Scalar::one(alg_->field())), j,
                       family_[static_cast<std::size_t>(j)].basis_row(m));
  return coordinates(i + j, prod);
}

FreeQuotientModule::FreeQuotientModule(std::shared_ptr<const GradedAlgebra> alg,
                                       std::int64_t num_generators,
                                       const std::vector<Vec>& degree_one_seeds)
    : TruncatedModule(alg, alg->bound()), h_(num_generators) {
  const GradedAlgebra& a = *alg_;
  const int N = bound_;
  const Scalar one = Scalar::one(a.field());
  family_.push_back(Subspace::zero(a.field(), free_dim(0)));
  if (N >= 1) family_.push_back(Subspace::span(a.field(), free_dim(1), degree_one_seeds));
  for (int n = 2; n <= N; ++n) {
    std::vector<Vec> span;
    const Subspace& prev = family_[static_cast<std::size_t>(n - 1)];
    for (std::int64_t g = 0; g < a.dim(1); ++g) {
      Vec x = Vec::unit(g, one);
      for (std::int64_t r = 0; r < prev.dim(); ++r) {
        // act blockwise on each generator component
        Vec out;
        for (std::int64_t k = 0; k < h_; ++k) {
          const std::int64_t lo = k * a.dim(n - 1), hi = lo + a.dim(n - 1);
          Vec block;
          for (const auto& [idx, c] : prev.basis_row(r))
            if (idx >= lo && idx < hi) block.append(idx - lo, c);
          if (block.is_zero()) continue;
          out.add_scaled(a.mul(1, x, n - 1, block).shifted(k * a.dim(n)), one);
        }
        span.push_back(std::move(out));
      }
    }
    family_.push_back(Subspace::span(a.field(), free_dim(n), span));
  }
  std::vector<std::int64_t> dims;
  nonpivot_.resize(family_.size());
  for (int n = 0; n <= N; ++n) {
    const Subspace& s = family_[static_cast<std::size_t>(n)];
    std::vector<bool> pivot(static_cast<std::size_t>(free_dim(n)), false);
    for (auto p : s.pivots()) pivot[static_cast<std::size_t>(p)] = true;
    for (std::int64_t k = 0; k < free_dim(n); ++k)
      if (!pivot[static_cast<std::size_t>(k)]) nonpivot_[static_cast<std::size_t>(n)].push_back(k);
    dims.push_back(static_cast<std::int64_t>(nonpivot_[static_cast<std::size_t>(n)].size()));
  }
  set_dims(std::move(dims));
}

Vec FreeQuotientModule::act_basis(int i, std::int64_t a, int j, std::int64_t m) const {
  const GradedAlgebra& alg = *alg_;
  const std::int64_t free_idx =
      nonpivot_[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)];
  const std::int64_t gen = free_idx / alg.dim(j);
  const std::int64_t pos = free_idx % alg.dim(j);
  Vec prod = alg.mul_basis(i, a, j, pos).shifted(gen * alg.dim(i + j));
  Vec residue = family_[static_cast<std::size_t>(i + j)].reduce(prod);
  const auto& np = nonpivot_[static_cast<std::size_t>(i + j)];
  Vec out;
  for (const auto& [k, c] : residue) {
    auto it = std::lower_bound(np.begin(), np.end(), k);
    out.append(static_cast<std::int64_t>(it - np.begin()), c);
  }
  return out;
}

ShiftedModule::ShiftedModule(std::shared_ptr<const TruncatedModule> base, int shift)
    : TruncatedModule(
          std::shared_ptr<const GradedAlgebra>(base, &base->algebra()),
          std::min(base->algebra().bound(), base->bound() - shift)),
      base_(base),
      shift_(shift) {
  if (shift > 0) throw AlgebraError("only upward shifts (s <= 0) are representable");
  std::vector<std::int64_t> dims;
  for (int n = 0; n <= bound_; ++n) dims.push_back(base_->dim(n + shift_));
  set_dims(std::move(dims));
}

Vec ShiftedModule::act_basis(int i, std::int64_t a, int j, std::int64_t m) const {
  return base_->act_basis(i, a, j + shift_, m);
}

std::vector<Subspace> ideal_family(const GradedAlgebra& a, const Subspace& degree_one_seed,
                                   bool two_sided) {
  const int N = a.bound();
  std::vector<Subspace> fam;
  fam.push_back(Subspace::zero(a.field(), a.dim(0)));
  fam.push_back(degree_one_seed);
  const Scalar one = Scalar::one(a.field());
  for (int n = 2; n <= N; ++n) {
    std::vector<Vec> span;
    const Subspace& prev = fam[static_cast<std::size_t>(n - 1)];
    for (std::int64_t g = 0; g < a.dim(1); ++g) {
      for (std::int64_t r = 0; r < prev.dim(); ++r) {
        span.push_back(a.mul(1, Vec::unit(g, one), n - 1, prev.basis_row(r)));
        if (two_sided)
          span.push_back(a.mul(n - 1, prev.basis_row(r), 1, Vec::unit(g, one)));
      }
    }
    fam.push_back(Subspace::span(a.field(), a.dim(n), span));
  }
  return fam;
}

std::vector<Subspace> right_ideal_of_subalgebra(const GradedAlgebra& a,
                                                const Subspace& degree_one_seed) {
  const int N = a.bound();
  std::vector<Subspace> comps = bracket_closure(a, degree_one_seed);
  std::vector<Subspace> fam;
  fam.push_back(Subspace::zero(a.field(), a.dim(0)));
  fam.push_back(degree_one_seed);
  const Scalar one = Scalar::one(a.field());
  for (int n = 2; n <= N; ++n) {
    std::vector<Vec> span;
    const Subspace& prev = fam[static_cast<std::size_t>(n - 1)];
    for (std::int64_t g = 0; g < a.dim(1); ++g) {
      for (std::int64_t r = 0; r < prev.dim(); ++r)
        span.push_back(a.mul(1, Vec::unit(g, one), n - 1, prev.basis_row(r)));
    }
    const Subspace& h = comps[static_cast<std::size_t>(n)];
    for (std::int64_t r = 0; r < h.dim(); ++r) span.push_back(h.basis_row(r));
    fam.push_back(Subspace::span(a.field(), a.dim(n), span));
  }
  return fam;
}

Vec ModuleMap::apply(int n, const Vec& v) const {
  Vec out;
  const Matrix& m = mats[static_cast<std::size_t>(n)];
  for (std::int64_t r = 0; r < m.rows(); ++r) {
    Scalar s;
    for (const auto& [j, c] : m.row(r)) {
      if (const Scalar* vc = v.coeff(j)) s += c * *vc;
    }
    if (!s.is_zero()) out.append(r, std::move(s));
  }
  return out;
}

bool ModuleMap::is_a_linear(int max_degree) const {
  const GradedAlgebra& a = src->algebra();
  const Scalar one = Scalar::one(a.field());
  for (int i = 0; i <= max_degree; ++i) {
    for (int j = 0; i + j <= max_degree; ++j) {
      for (std::int64_t x = 0; x < a.dim(i); ++x) {
        for (std::int64_t m = 0; m < src->dim(j); ++m) {
          Vec lhs = apply(i + j, src->act_basis(i, x, j, m));
          Vec rhs = dst->act(i, Vec::unit(x, one), j, apply(j, Vec::unit(m, one)));
          if (!(lhs == rhs)) return false;
        }
      }
    }
  }
  return true;
}

SesReport verify_ses(const ModuleMap& incl, const ModuleMap& proj, int bound) {
  SesReport rep;
  for (int n = 0; n <= bound; ++n) {
    const std::int64_t dl = incl.src->dim(n);
    const std::int64_t dm = incl.dst->dim(n);
    const std::int64_t dn = proj.dst->dim(n);
    // injective, surjective, dimensions match, composite vanishes, exact mid
    bool ok = rank(incl.mats[static_cast<std::size_t>(n)]) == dl &&
              rank(proj.mats[static_cast<std::size_t>(n)]) == dn && dl + dn == dm;
    if (ok) {
      for (std::int64_t m = 0; m < dl && ok; ++m) {
        Vec img = incl.apply(n, Vec::unit(m, Scalar::one(incl.src->algebra().field())));
        ok = proj.apply(n, img).is_zero();
      }
    }
    if (!ok) {
      rep.exact = false;
      rep.first_fail = n;
      return rep;
    }
  }
  return rep;
}

}  // namespace grlie
