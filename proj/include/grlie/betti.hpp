#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace grlie {

// Bigraded table b[i][j], 0 <= i <= j <= bound. All verdicts derived from a
// table are certified only up to its bound.
class BettiTable {
public:
  explicit BettiTable(int bound)
      : bound_(bound),
        b_(static_cast<std::size_t>(bound + 1),
           std::vector<std::int64_t>(static_cast<std::size_t>(bound + 1), 0)) {}

  int bound() const { return bound_; }
  std::int64_t at(int i, int j) const {
    return (i < 0 || j < 0 || i > bound_ || j > bound_)
               ? 0
               : b_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  void set(int i, int j, std::int64_t v) {
    b_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
  }

  struct Witness {
    int i, j;
    std::int64_t b;
  };
  // first nonzero entry off the diagonal, scanning j then i
  std::optional<Witness> first_off_diagonal() const;
  bool diagonal() const { return !first_off_diagonal().has_value(); }
  std::vector<std::int64_t> diagonal_dims() const;  // b[i][i], i = 0..bound

  bool operator==(const BettiTable& o) const { return bound_ == o.bound_ && b_ == o.b_; }
  // entrywise equality on the common bound range
  bool agree_up_to(const BettiTable& o, int bound) const;

  std::string text() const;  // fixed-width table

private:
  int bound_;
  std::vector<std::vector<std::int64_t>> b_;
};

}  // namespace grlie
