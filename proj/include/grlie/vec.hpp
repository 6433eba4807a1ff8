#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "grlie/field.hpp"

namespace grlie {

// Sparse coordinate vector: sorted (index, coefficient) pairs, no zeros stored.
class Vec {
public:
  using Entry = std::pair<std::int64_t, Scalar>;

  Vec() = default;
  static Vec unit(std::int64_t i, Scalar c);

  bool is_zero() const { return e_.empty(); }
  std::size_t nnz() const { return e_.size(); }
  std::int64_t lead() const { return e_.empty() ? -1 : e_.front().first; }
  const Scalar& lead_coeff() const { return e_.front().second; }
  const Scalar* coeff(std::int64_t i) const;

  // append an entry with index strictly greater than the current last one
  void append(std::int64_t i, Scalar c);
  // arbitrary-position write (insert or overwrite; erases on zero)
  void set(std::int64_t i, Scalar c);

  void add_scaled(const Vec& w, const Scalar& c);  // *this += c*w
  void scale(const Scalar& c);
  void negate();
  Vec scaled(const Scalar& c) const;
  Vec shifted(std::int64_t delta) const;  // translate all indices by delta

  bool operator==(const Vec& o) const;

  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }
  const Entry& entry(std::size_t k) const { return e_[k]; }

  std::string str() const;

private:
  std::vector<Entry> e_;
};

}  // namespace grlie
