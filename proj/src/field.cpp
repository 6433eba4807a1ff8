#include "grlie/field.hpp"

namespace grlie {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw FieldError("division by zero in F" + std::to_string(p));
  // extended Euclid on signed 128-bit to be safe for large p
  __int128 t = 0, newt = 1, r = static_cast<__int128>(p), newr = static_cast<__int128>(a);
  while (newr != 0) {
    __int128 q = r / newr;
    __int128 tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw FieldError("non-invertible residue mod " + std::to_string(p));
  if (t < 0) t += static_cast<__int128>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
    if (p == d) return true;
    if (p % d == 0) return false;
  }
  for (std::uint64_t d = 11; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

Field Field::prime_field(std::uint64_t p) {
  if (p >= (1ull << 31)) throw FieldError("modulus too large: " + std::to_string(p));
  if (!is_prime_u64(p)) throw FieldError("modulus is not prime: " + std::to_string(p));
  Field f;
  f.p_ = p;
  return f;
}

Scalar Scalar::rational(mpq_class v) {
  Scalar s;
  v.canonicalize();
  s.q_ = std::move(v);
  return s;
}

Scalar Scalar::residue(std::uint64_t v, std::uint64_t p) {
  Scalar s;
  s.p_ = p;
  s.r_ = v % p;
  return s;
}

Scalar Scalar::of(const Field& f, long num, long den) {
  if (den == 0) throw FieldError("zero denominator");
  if (f.is_rational()) return rational(mpq_class(num, den));
  const std::uint64_t p = f.modulus();
  auto red = [p](long x) {
    long long m = static_cast<long long>(x) % static_cast<long long>(p);
    if (m < 0) m += static_cast<long long>(p);
    return static_cast<std::uint64_t>(m);
  };
  std::uint64_t n = red(num), d = red(den);
  return residue(mulmod(n, invmod(d, p), p), p);
}

Scalar Scalar::of(const Field& f, const mpq_class& v) {
  if (f.is_rational()) return rational(v);
  const std::uint64_t p = f.modulus();
  mpz_class num = v.get_num(), den = v.get_den();
  mpz_class pm(static_cast<unsigned long>(p));
  mpz_class n = num % pm, d = den % pm;
  if (n < 0) n += pm;
  if (d < 0) d += pm;
  std::uint64_t nu = n.get_ui(), du = d.get_ui();
  return residue(mulmod(nu, invmod(du, p), p), p);
}

bool Scalar::is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }

namespace {
[[noreturn]] void mixed_error() { throw FieldError("mixed-field scalar arithmetic"); }
}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (p_ != o.p_) mixed_error();
  if (p_ == 0) return rational(q_ + o.q_);
  return residue(r_ + o.r_ >= p_ ? r_ + o.r_ - p_ : r_ + o.r_, p_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  if (p_ == 0) return rational(-q_);
  return residue(r_ == 0 ? 0 : p_ - r_, p_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_zero()) return *this;
  if (o.is_zero()) return o;
  if (p_ != o.p_) mixed_error();
  if (p_ == 0) return rational(q_ * o.q_);
  return residue(mulmod(r_, o.r_, p_), p_);
}

Scalar Scalar::inverse() const {
  if (p_ == 0) {
    if (q_ == 0) throw FieldError("division by zero");
    return rational(1 / q_);
  }
  return residue(invmod(r_, p_), p_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  if (is_zero() && o.is_zero()) return true;
  if (p_ != o.p_) return false;
  return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
  return p_ == 0 ? q_.get_str() : std::to_string(r_);
}

}  // namespace grlie
