#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace grlie {

struct FieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ground field tag: the rationals, or F_p for a machine-word prime p.
class Field {
public:
  Field() = default;  // rationals
  static Field rationals() { return Field{}; }
  static Field prime_field(std::uint64_t p);  // throws FieldError unless p is prime

  bool is_rational() const { return p_ == 0; }
  std::uint64_t modulus() const { return p_; }
  std::uint64_t characteristic() const { return p_; }
  bool operator==(const Field&) const = default;
  std::string name() const { return is_rational() ? "Q" : "F" + std::to_string(p_); }

private:
  std::uint64_t p_ = 0;
};

// Exact field element. Rational values are GMP rationals; residues carry
// their modulus so that arithmetic needs no external context. Elements of
// different fields never mix, except that an exact zero combines with
// anything (empty sums start from a plain zero).
class Scalar {
public:
  Scalar() = default;  // rational zero, acts as the neutral zero of any field
  static Scalar rational(mpq_class v);
  static Scalar residue(std::uint64_t v, std::uint64_t p);
  static Scalar of(const Field& f, long num, long den = 1);
  static Scalar of(const Field& f, const mpq_class& v);
  static Scalar zero(const Field& f) { return of(f, 0); }
  static Scalar one(const Field& f) { return of(f, 1); }

  bool is_zero() const;
  bool is_rational_kind() const { return p_ == 0; }
  const mpq_class& rational_value() const { return q_; }
  std::uint64_t residue_value() const { return r_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inverse() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

private:
  mpq_class q_ = 0;        // valid when p_ == 0
  std::uint64_t r_ = 0;    // valid when p_ != 0
  std::uint64_t p_ = 0;
};

bool is_prime_u64(std::uint64_t p);

}  // namespace grlie
