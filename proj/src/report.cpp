#include "grlie/report.hpp"

namespace grlie {

nlohmann::json report_base(const RunConfig& cfg, double wall_ms) {
  return {
      {"schema", kSchemaVersion},
      {"version", kToolVersion},
      {"command", cfg.command},
      {"field", cfg.field.name()},
      {"truncation", cfg.truncation},
      {"strategy", cfg.strategy.label()},
      {"seed", cfg.seed},
      {"wall_time_ms", wall_ms},
  };
}

nlohmann::json betti_to_json(const BettiTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i <= t.bound(); ++i) {
    for (int j = 0; j <= t.bound(); ++j) {
      if (t.at(i, j) != 0) rows.push_back({{"i", i}, {"j", j}, {"b", t.at(i, j)}});
    }
  }
  return {{"bound", t.bound()}, {"rows", rows}};
}

BettiTable betti_from_json(const nlohmann::json& j) {
  BettiTable t(j.at("bound").get<int>());
  for (const auto& row : j.at("rows"))
    t.set(row.at("i").get<int>(), row.at("j").get<int>(), row.at("b").get<std::int64_t>());
  return t;
}

nlohmann::json vec_to_json(const Vec& v, std::int64_t ambient) {
  nlohmann::json out = nlohmann::json::array();
  for (std::int64_t i = 0; i < ambient; ++i) {
    const Scalar* c = v.coeff(i);
    out.push_back(c ? c->str() : "0");
  }
  return out;
}

nlohmann::json subspace_to_json(const Subspace& s) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::int64_t i = 0; i < s.dim(); ++i)
    rows.push_back(vec_to_json(s.basis_row(i), s.ambient_dim()));
  return {{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"basis", rows}};
}

nlohmann::json kurosh_to_json(const KuroshDecomposition& d) {
  auto vecs = [&](const std::vector<Vec>& rows, std::int64_t amb) {
    nlohmann::json out = nlohmann::json::array();
    for (const Vec& v : rows) out.push_back(vec_to_json(v, amb));
    return out;
  };
  const std::int64_t amb = d.h1_ambient;
  nlohmann::json per_degree = nlohmann::json::array();
  for (int n = 1; n < static_cast<int>(d.subalgebra_dims.size()); ++n) {
    per_degree.push_back({{"n", n},
                          {"dim_subalgebra", d.subalgebra_dims[static_cast<std::size_t>(n)]},
                          {"dim_model", d.model_dims[static_cast<std::size_t>(n)]}});
  }
  nlohmann::json flags = nlohmann::json::array();
  if (d.conditional) flags.push_back(d.conditional_reason);
  return {{"B_A", vecs(d.basis.in_a, amb)},
          {"B_B", vecs(d.basis.in_b, amb)},
          {"W", vecs(d.basis.mixed, amb)},
          {"model_presentation", d.model.str()},
          {"per_degree", per_degree},
          {"verdict", d.verified ? "verified" : "mismatch"},
          {"first_mismatch", d.first_mismatch},
          {"injective_low_degrees", d.injective_low_degrees},
          {"cokernel_dims", d.cokernel_dims},
          {"conditional_flags", flags},
          {"bound", d.bound}};
}

std::string scalar_list_str(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace grlie
