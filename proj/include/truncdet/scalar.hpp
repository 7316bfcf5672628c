#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace truncdet {

class field_mismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class not_invertible : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

bool is_prime_u32(std::uint32_t n);

class Scalar;

/// Identifies the base field: the rationals, or F_p for a prime 2 <= p < 2^31.
class FieldRef {
public:
  static FieldRef rationals() { return FieldRef(0); }
  static FieldRef prime(std::uint32_t p);

  bool is_rationals() const { return p_ == 0; }
  bool is_prime_field() const { return p_ != 0; }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_mpq(const mpq_class& v) const;

  friend bool operator==(FieldRef a, FieldRef b) { return a.p_ == b.p_; }
  friend bool operator!=(FieldRef a, FieldRef b) { return a.p_ != b.p_; }

private:
  explicit FieldRef(std::uint32_t p) : p_(p) {}
  std::uint32_t p_; // 0 encodes the rationals
};

/// Exact field element. Arithmetic between different fields throws
/// field_mismatch; nothing here ever rounds.
class Scalar {
public:
  Scalar() = default; // rational zero
  static Scalar rational(mpq_class v);
  static Scalar mod_p(std::uint32_t p, long long v);

  FieldRef field() const { return p_ == 0 ? FieldRef::rationals() : FieldRef::prime(p_); }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const; // throws not_invertible on zero divisor
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inverse() const;
  Scalar pow(long long e) const; // negative e inverts first

  /// Carry a rational into this scalar's field (identity on Q; reduction
  /// mod p on F_p, rejecting denominators divisible by p).
  Scalar to_field(FieldRef f) const;

  const mpq_class& rational_value() const;
  std::uint32_t residue() const;

  std::string to_string() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
  Scalar(std::uint32_t p, std::uint32_t r) : p_(p), r_(r) {}
  explicit Scalar(mpq_class q) : p_(0), r_(0), q_(std::move(q)) {}
  void check_same_field(const Scalar& o) const;

  std::uint32_t p_ = 0; // 0 = rationals
  std::uint32_t r_ = 0; // residue in [0,p) when p_ != 0
  mpq_class q_;         // value when p_ == 0
};

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);

} // namespace truncdet
