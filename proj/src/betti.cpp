#include "grlie/betti.hpp"

#include <sstream>

namespace grlie {

std::optional<BettiTable::Witness> BettiTable::first_off_diagonal() const {
  for (int j = 0; j <= bound_; ++j) {
    for (int i = 0; i <= bound_; ++i) {
      if (i != j && at(i, j) != 0) return Witness{i, j, at(i, j)};
    }
  }
  return std::nullopt;
}

std::vector<std::int64_t> BettiTable::diagonal_dims() const {
  std::vector<std::int64_t> d;
  for (int i = 0; i <= bound_; ++i) d.push_back(at(i, i));
  return d;
}

bool BettiTable::agree_up_to(const BettiTable& o, int bound) const {
  for (int i = 0; i <= bound; ++i)
    for (int j = 0; j <= bound; ++j)
      if (at(i, j) != o.at(i, j)) return false;
  return true;
}

std::string BettiTable::text() const {
  std::ostringstream os;
  int maxrow = 0;
  for (int i = 0; i <= bound_; ++i)
    for (int j = 0; j <= bound_; ++j)
      if (at(i, j) != 0) maxrow = std::max(maxrow, i);
  os << "  j:";
  for (int j = 0; j <= bound_; ++j) os << ' ' << j << (j < 10 ? "    " : "   ");
  os << '\n';
  for (int i = 0; i <= maxrow; ++i) {
    os << "i=" << i << ":";
    for (int j = 0; j <= bound_; ++j) {
      std::string cell = at(i, j) == 0 ? "." : std::to_string(at(i, j));
      os << ' ' << cell;
      for (std::size_t s = cell.size(); s < 5; ++s) os << ' ';
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace grlie
