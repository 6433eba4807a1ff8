#include "grlie/deciders.hpp"

#include "grlie/kurosh.hpp"

namespace grlie {

KoszulCertificate is_koszul(std::shared_ptr<const GradedAlgebra> a) {
  if (!a->one_generated()) {
    // the b[1][j] generator scan below needs the resolution machinery, which
    // itself requires degree-1 generation; the flag is the same criterion
    return KoszulCertificate{KoszulCertificate::Verdict::NotOneGenerated, a->bound(),
                             std::nullopt, BettiTable(a->bound())};
  }
  BettiTable t = minimal_resolution(TrivialModule(a));
  KoszulCertificate cert{KoszulCertificate::Verdict::KoszulUpToBound, a->bound(), std::nullopt,
                         t};
  for (int j = 2; j <= t.bound(); ++j) {
    if (t.at(1, j) != 0) {
      cert.verdict = KoszulCertificate::Verdict::NotOneGenerated;
      cert.witness = BettiTable::Witness{1, j, t.at(1, j)};
      return cert;
    }
  }
  if (auto w = t.first_off_diagonal()) {
    cert.verdict = KoszulCertificate::Verdict::Fails;
    cert.witness = w;
  }
  return cert;
}

std::shared_ptr<QuotientModule> quotient_by_degree_one_ideal(
    std::shared_ptr<const GradedAlgebra> a, const Subspace& i1) {
  const bool two_sided = !a->graded_commutative();
  return std::make_shared<QuotientModule>(a, ideal_family(*a, i1, two_sided));
}

BettiTable ext_of_quotient(std::shared_ptr<const GradedAlgebra> a, const Subspace& i1) {
  return minimal_resolution(*quotient_by_degree_one_ideal(a, i1));
}

UniversalKoszulReport is_universally_koszul(std::shared_ptr<const GradedAlgebra> a,
                                            const SubspaceStrategy& strategy, int jobs) {
  if (!a->graded_commutative())
    throw AlgebraError("universal Koszulity is defined for graded-commutative algebras");
  UniversalKoszulReport rep;
  rep.sampled = strategy.sampled();
  rep.bound = a->bound();
  std::vector<Subspace> seeds = enumerate_subspaces(a->field(), a->dim(1), strategy);
  rep.checked = static_cast<std::int64_t>(seeds.size());
  std::vector<char> ok(seeds.size(), 1);
  parallel_for(seeds.size(), jobs, [&](std::size_t k) {
    ok[k] = ext_of_quotient(a, seeds[k]).diagonal() ? 1 : 0;
  });
  for (std::size_t k = 0; k < seeds.size(); ++k) {
    if (!ok[k]) {
      rep.verdict = false;
      rep.witness = seeds[k];
      break;
    }
  }
  return rep;
}

BlochKatoReport is_bloch_kato(const Enveloping& env, const SubspaceStrategy& strategy,
                              int jobs, std::int64_t word_cap) {
  BlochKatoReport rep;
  rep.sampled = strategy.sampled();
  rep.bound = env.bound();
  const Field& f = env.field();
  std::vector<Subspace> seeds = enumerate_subspaces(f, env.alg().dim(1), strategy);
  rep.checked = static_cast<std::int64_t>(seeds.size());
  std::vector<std::string> why(seeds.size());
  parallel_for(seeds.size(), jobs, [&](std::size_t k) {
    SubalgebraReport sub = subalgebra_presentation(env, seeds[k]);
    if (!sub.quadratic) {
      why[k] = "non-quadratic subalgebra";  // Koszul algebras are quadratic
      return;
    }
    auto sub_env = build_enveloping(sub.presentation, env.bound(), word_cap);
    if (!is_koszul(sub_env.algebra).koszul()) why[k] = "off-diagonal ext";
  });
  for (std::size_t k = 0; k < seeds.size(); ++k) {
    if (!why[k].empty()) {
      rep.verdict = false;
      rep.witness = seeds[k];
      rep.reason = why[k];
      break;
    }
  }
  return rep;
}

EulerCheckReport les_euler_check(const TruncatedModule& l, const TruncatedModule& mm,
                                 const TruncatedModule& n, const ModuleMap& incl,
                                 const ModuleMap& proj) {
  EulerCheckReport rep;
  const int N = std::min({l.bound(), mm.bound(), n.bound()});
  SesReport ses = verify_ses(incl, proj, N);
  if (!ses.exact) {
    rep.input_exact = false;
    rep.pass = false;
    rep.first_fail = ses.first_fail;
    return rep;
  }
  BettiTable bl = minimal_resolution(l);
  BettiTable bm = minimal_resolution(mm);
  BettiTable bn = minimal_resolution(n);
  for (int j = 0; j <= N; ++j) {
    std::int64_t acc = 0;
    for (int i = 0; i <= j; ++i) {
      const std::int64_t term = bl.at(i, j) - bm.at(i, j) + bn.at(i, j);
      acc += (i % 2 == 0) ? term : -term;
    }
    if (acc != 0) {
      rep.pass = false;
      rep.first_fail = j;
      return rep;
    }
  }
  return rep;
}

}  // namespace grlie
