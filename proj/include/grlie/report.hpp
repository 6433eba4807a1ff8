#pragma once

#include <json.hpp>

#include "grlie/betti.hpp"
#include "grlie/kurosh.hpp"
#include "grlie/strategy.hpp"

namespace grlie {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

struct RunConfig {
  std::string command;
  Field field;
  int truncation = 6;
  SubspaceStrategy strategy;
  std::uint64_t seed = 1;
  int jobs = 1;
  std::int64_t cap = 1'000'000;
  std::string format = "table";  // "table" | "json"
};

// every report embeds tool version, field, bound, strategy, seed, wall time
nlohmann::json report_base(const RunConfig& cfg, double wall_ms);

nlohmann::json betti_to_json(const BettiTable& t);
BettiTable betti_from_json(const nlohmann::json& j);  // round-trip support

nlohmann::json subspace_to_json(const Subspace& s);
nlohmann::json vec_to_json(const Vec& v, std::int64_t ambient);

nlohmann::json kurosh_to_json(const KuroshDecomposition& d);

std::string scalar_list_str(const std::vector<std::int64_t>& v);

}  // namespace grlie
