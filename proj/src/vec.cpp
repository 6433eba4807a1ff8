#include "grlie/vec.hpp"

#include <algorithm>
#include <cassert>

namespace grlie {

Vec Vec::unit(std::int64_t i, Scalar c) {
  Vec v;
  if (!c.is_zero()) v.e_.emplace_back(i, std::move(c));
  return v;
}

const Scalar* Vec::coeff(std::int64_t i) const {
  auto it = std::lower_bound(e_.begin(), e_.end(), i,
                             [](const Entry& e, std::int64_t k) { return e.first < k; });
  if (it == e_.end() || it->first != i) return nullptr;
  return &it->second;
}

void Vec::append(std::int64_t i, Scalar c) {
  if (c.is_zero()) return;
  assert(e_.empty() || e_.back().first < i);
  e_.emplace_back(i, std::move(c));
}

void Vec::set(std::int64_t i, Scalar c) {
  auto it = std::lower_bound(e_.begin(), e_.end(), i,
                             [](const Entry& e, std::int64_t k) { return e.first < k; });
  if (it != e_.end() && it->first == i) {
    if (c.is_zero())
      e_.erase(it);
    else
      it->second = std::move(c);
  } else if (!c.is_zero()) {
    e_.emplace(it, i, std::move(c));
  }
}

void Vec::add_scaled(const Vec& w, const Scalar& c) {
  if (c.is_zero() || w.e_.empty()) return;
  std::vector<Entry> out;
  out.reserve(e_.size() + w.e_.size());
  auto a = e_.begin();
  auto b = w.e_.begin();
  while (a != e_.end() && b != w.e_.end()) {
    if (a->first < b->first) {
      out.push_back(*a++);
    } else if (a->first > b->first) {
      out.emplace_back(b->first, b->second * c);
      if (out.back().second.is_zero()) out.pop_back();
      ++b;
    } else {
      Scalar s = a->second + b->second * c;
      if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  out.insert(out.end(), a, e_.end());
  for (; b != w.e_.end(); ++b) {
    Scalar s = b->second * c;
    if (!s.is_zero()) out.emplace_back(b->first, std::move(s));
  }
  e_ = std::move(out);
}

void Vec::scale(const Scalar& c) {
  if (c.is_zero()) {
    e_.clear();
    return;
  }
  for (auto& [i, s] : e_) s *= c;
}

void Vec::negate() {
  for (auto& [i, s] : e_) s = -s;
}

Vec Vec::scaled(const Scalar& c) const {
  Vec v = *this;
  v.scale(c);
  return v;
}

Vec Vec::shifted(std::int64_t delta) const {
  Vec v = *this;
  for (auto& [i, s] : v.e_) i += delta;
  return v;
}

bool Vec::operator==(const Vec& o) const {
  if (e_.size() != o.e_.size()) return false;
  for (std::size_t k = 0; k < e_.size(); ++k)
    if (e_[k].first != o.e_[k].first || !(e_[k].second == o.e_[k].second)) return false;
  return true;
}

std::string Vec::str() const {
  if (e_.empty()) return "0";
  std::string s;
  for (const auto& [i, c] : e_) {
    if (!s.empty()) s += " + ";
    s += c.str() + "*e" + std::to_string(i);
  }
  return s;
}

}  // namespace grlie
