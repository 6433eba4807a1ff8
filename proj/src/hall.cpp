#include "grlie/hall.hpp"

namespace grlie {

namespace words {

std::int64_t checked_count(int d, int n, std::int64_t cap) {
  std::int64_t c = 1;
  for (int i = 0; i < n; ++i) {
    c *= d;
    if (c > cap)
      throw CapError("word space " + std::to_string(d) + "^" + std::to_string(n) +
                     " exceeds the resource cap " + std::to_string(cap));
  }
  return c;
}

std::vector<int> digits(std::int64_t w, int d, int n) {
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = static_cast<int>(w % d);
    w /= d;
  }
  return out;
}

std::int64_t from_digits(const std::vector<int>& ds, int d) {
  std::int64_t w = 0;
  for (int g : ds) w = w * d + g;
  return w;
}

std::string label(std::int64_t w, int d, int n, const std::vector<std::string>& names) {
  if (n == 0) return "1";
  std::string s;
  for (int g : digits(w, d, n)) {
    if (!s.empty()) s += ".";
    s += names[static_cast<std::size_t>(g)];
  }
  return s;
}

}  // namespace words

HallBasis::HallBasis(int num_generators, int max_degree)
    : d_(num_generators), bound_(max_degree) {
  by_degree_.resize(static_cast<std::size_t>(max_degree) + 1);
  for (int g = 0; g < d_; ++g) {
    by_degree_[1].push_back(static_cast<int>(elems_.size()));
    elems_.push_back({1, g, -1, -1});
  }
  for (int n = 2; n <= bound_; ++n) {
    for (int du = 1; 2 * du <= n; ++du) {
      const int dv = n - du;
      for (int u : by_degree_[static_cast<std::size_t>(du)]) {
        for (int v : by_degree_[static_cast<std::size_t>(dv)]) {
          if (du == dv && u >= v) continue;  // need u < v; cross-degree pairs are automatic
          const Elem& ve = elems_[static_cast<std::size_t>(v)];
          if (ve.left >= 0) {
            // v = [a,b]: require a <= u in the (degree, creation) order
            const Elem& a = elems_[static_cast<std::size_t>(ve.left)];
            if (a.degree > du || (a.degree == du && ve.left > u)) continue;
          }
          by_degree_[static_cast<std::size_t>(n)].push_back(static_cast<int>(elems_.size()));
          elems_.push_back({n, -1, u, v});
        }
      }
    }
  }
}

BracketPtr HallBasis::bracket(int degree, int k) const {
  int idx = by_degree_[static_cast<std::size_t>(degree)][static_cast<std::size_t>(k)];
  // iterative memo over all elements up to idx would be overkill; recurse
  std::vector<BracketPtr> memo(elems_.size());
  auto build = [&](auto&& self, int i) -> BracketPtr {
    auto& m = memo[static_cast<std::size_t>(i)];
    if (m) return m;
    const Elem& e = elems_[static_cast<std::size_t>(i)];
    m = e.gen >= 0 ? BracketTree::leaf(e.gen)
                   : BracketTree::node(self(self, e.left), self(self, e.right));
    return m;
  };
  return build(build, idx);
}

Vec HallBasis::tensor_expansion(int degree, int k, const Field& f) const {
  return expand_bracket(*bracket(degree, k), d_, f);
}

std::int64_t necklace_count(int d, int n) {
  auto moebius = [](int m) {
    int result = 1;
    for (int p = 2; p * p <= m; ++p) {
      if (m % p == 0) {
        m /= p;
        if (m % p == 0) return 0;
        result = -result;
      }
    }
    if (m > 1) result = -result;
    return result;
  };
  std::int64_t total = 0;
  for (int k = 1; k <= n; ++k) {
    if (n % k != 0) continue;
    std::int64_t pw = 1;
    for (int i = 0; i < n / k; ++i) pw *= d;
    total += moebius(k) * pw;
  }
  return total / n;
}

Vec expand_bracket(const BracketTree& w, int d, const Field& f) {
  if (w.is_leaf()) return Vec::unit(w.gen(), Scalar::one(f));
  Vec a = expand_bracket(w.left(), d, f);
  Vec b = expand_bracket(w.right(), d, f);
  const int da = w.left().degree(), db = w.right().degree();
  std::vector<Vec::Entry> entries;
  for (const auto& [wa, ca] : a) {
    for (const auto& [wb, cb] : b) {
      entries.emplace_back(words::concat(wa, wb, d, db), ca * cb);
      entries.emplace_back(words::concat(wb, wa, d, da), -(ca * cb));
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const Vec::Entry& x, const Vec::Entry& y) { return x.first < y.first; });
  Vec out;
  for (auto& [i, c] : entries) {
    if (!out.is_zero() && out.entry(out.nnz() - 1).first == i) {
      Scalar s = out.entry(out.nnz() - 1).second + c;
      out.set(i, std::move(s));
    } else {
      out.append(i, std::move(c));
    }
  }
  return out;
}

Vec expand_expr(const LieExpr& e, int d, const Field& f) {
  Vec out;
  for (const auto& t : e.terms) {
    Scalar c = Scalar::of(f, t.coeff);
    if (c.is_zero()) continue;
    out.add_scaled(expand_bracket(*t.word, d, f), c);
  }
  return out;
}

}  // namespace grlie
