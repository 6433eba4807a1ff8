#include "grlie/strategy.hpp"

#include <atomic>
#include <functional>
#include <thread>

namespace grlie {

SubspaceStrategy SubspaceStrategy::parse(const std::string& text, std::uint64_t seed) {
  if (text == "exhaustive") return exhaustive();
  if (text == "coordinate") return coordinate();
  const std::string prefix = "coordinate+random(";
  if (text.rfind(prefix, 0) == 0 && text.back() == ')') {
    int k = std::stoi(text.substr(prefix.size(), text.size() - prefix.size() - 1));
    return coordinate_random(k, seed);
  }
  throw std::invalid_argument("unknown strategy '" + text +
                              "' (expected exhaustive, coordinate, coordinate+random(k))");
}

SubspaceStrategy SubspaceStrategy::default_for(const Field& f, std::uint64_t seed) {
  if (f.is_rational()) return coordinate_random(8, seed);
  return exhaustive();
}

std::string SubspaceStrategy::label() const {
  switch (kind) {
    case Kind::Exhaustive:
      return "exhaustive";
    case Kind::Coordinate:
      return "coordinate";
    case Kind::CoordinateRandom:
      return "coordinate+random(" + std::to_string(samples) + ")";
  }
  return "?";
}

std::vector<Subspace> all_subspaces(const Field& f, std::int64_t ambient) {
  if (f.is_rational())
    throw std::invalid_argument("exhaustive subspace enumeration needs a finite field");
  const std::int64_t p = static_cast<std::int64_t>(f.modulus());
  std::vector<Subspace> out;
  out.push_back(Subspace::zero(f, ambient));

  // enumerate reduced echelon bases: pivot sets, then free entries
  std::vector<std::int64_t> pivots;
  std::function<void(std::int64_t, std::int64_t)> choose = [&](std::int64_t start,
                                                               std::int64_t left) {
    if (left == 0) {
      const std::int64_t r = static_cast<std::int64_t>(pivots.size());
      // free positions: (row t, col c) with c > pivot_t and c not a pivot
      std::vector<std::pair<std::int64_t, std::int64_t>> free_pos;
      std::vector<bool> is_pivot(static_cast<std::size_t>(ambient), false);
      for (auto p_ : pivots) is_pivot[static_cast<std::size_t>(p_)] = true;
      for (std::int64_t t = 0; t < r; ++t)
        for (std::int64_t c = pivots[static_cast<std::size_t>(t)] + 1; c < ambient; ++c)
          if (!is_pivot[static_cast<std::size_t>(c)]) free_pos.emplace_back(t, c);
      std::vector<std::int64_t> fill(free_pos.size(), 0);
      for (;;) {
        std::vector<Vec> rows(static_cast<std::size_t>(r));
        for (std::int64_t t = 0; t < r; ++t)
          rows[static_cast<std::size_t>(t)].set(pivots[static_cast<std::size_t>(t)],
                                                Scalar::one(f));
        for (std::size_t k = 0; k < free_pos.size(); ++k)
          rows[static_cast<std::size_t>(free_pos[k].first)].set(
              free_pos[k].second, Scalar::of(f, static_cast<long>(fill[k])));
        out.push_back(Subspace::span(f, ambient, rows));
        std::size_t k = 0;
        while (k < fill.size() && fill[k] == p - 1) fill[k++] = 0;
        if (k == fill.size()) break;
        ++fill[k];
      }
      return;
    }
    for (std::int64_t c = start; c <= ambient - left; ++c) {
      pivots.push_back(c);
      choose(c + 1, left - 1);
      pivots.pop_back();
    }
  };
  for (std::int64_t r = 1; r <= ambient; ++r) choose(0, r);
  return out;
}

Subspace random_subspace(const Field& f, std::int64_t ambient, std::mt19937_64& rng) {
  if (ambient == 0) return Subspace::zero(f, 0);
  std::int64_t k = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(ambient));
  std::vector<Vec> rows;
  for (std::int64_t i = 0; i < k; ++i) {
    Vec v;
    for (std::int64_t c = 0; c < ambient; ++c) {
      long x = f.is_rational() ? static_cast<long>(rng() % 5) - 2
                               : static_cast<long>(rng() % f.modulus());
      if (x != 0) v.append(c, Scalar::of(f, x));
    }
    rows.push_back(std::move(v));
  }
  return Subspace::span(f, ambient, rows);
}

std::vector<Subspace> enumerate_subspaces(const Field& f, std::int64_t ambient,
                                          const SubspaceStrategy& strategy) {
  if (strategy.kind == SubspaceStrategy::Kind::Exhaustive) return all_subspaces(f, ambient);

  std::vector<Subspace> out;
  if (ambient > 20)
    throw std::invalid_argument("coordinate strategy needs ambient dimension <= 20, got " +
                                std::to_string(ambient));
  // coordinate subspaces: spans of subsets of the standard basis
  for (std::uint64_t mask = 0; mask < (1ull << ambient); ++mask) {
    std::vector<Vec> rows;
    for (std::int64_t c = 0; c < ambient; ++c)
      if (mask & (1ull << c)) rows.push_back(Vec::unit(c, Scalar::one(f)));
    out.push_back(Subspace::span(f, ambient, rows));
  }
  if (strategy.kind == SubspaceStrategy::Kind::CoordinateRandom) {
    std::mt19937_64 rng(strategy.seed);
    for (int s = 0; s < strategy.samples; ++s) out.push_back(random_subspace(f, ambient, rng));
  }
  return out;
}

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lk(error_mu);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const int k = std::min<int>(jobs, static_cast<int>(n));
  pool.reserve(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace grlie
