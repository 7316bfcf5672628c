#include "truncdet/scalar.hpp"

#include <utility>

namespace truncdet {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldRef FieldRef::prime(std::uint32_t p) {
  if (p < 2 || p >= (1u << 31) || !is_prime_u32(p))
    throw std::invalid_argument("characteristic must be a prime below 2^31, got " + std::to_string(p));
  return FieldRef(p);
}

std::string FieldRef::name() const {
  return p_ == 0 ? "Q" : "F_" + std::to_string(p_);
}

Scalar FieldRef::zero() const { return from_int(0); }
Scalar FieldRef::one() const { return from_int(1); }

Scalar FieldRef::from_int(long long v) const {
  if (p_ == 0) return Scalar::rational(mpq_class(static_cast<long>(v)));
  return Scalar::mod_p(p_, v);
}

Scalar FieldRef::from_mpq(const mpq_class& v) const {
  return Scalar::rational(v).to_field(*this);
}

Scalar Scalar::rational(mpq_class v) {
  v.canonicalize();
  return Scalar(std::move(v));
}

Scalar Scalar::mod_p(std::uint32_t p, long long v) {
  FieldRef::prime(p); // validates
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += p;
  return Scalar(p, static_cast<std::uint32_t>(r));
}

bool Scalar::is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

void Scalar::check_same_field(const Scalar& o) const {
  if (p_ != o.p_)
    throw field_mismatch("mixed arithmetic between " + field().name() + " and " + o.field().name());
}

Scalar Scalar::operator-() const {
  if (p_ == 0) return Scalar(mpq_class(-q_));
  return Scalar(p_, r_ == 0 ? 0 : p_ - r_);
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  if (p_ == 0) return Scalar(mpq_class(q_ + o.q_));
  std::uint64_t s = static_cast<std::uint64_t>(r_) + o.r_;
  if (s >= p_) s -= p_;
  return Scalar(p_, static_cast<std::uint32_t>(s));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  if (p_ == 0) return Scalar(mpq_class(q_ * o.q_));
  return Scalar(p_, static_cast<std::uint32_t>(static_cast<std::uint64_t>(r_) * o.r_ % p_));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  // extended Euclid on (a, p); p prime and a != 0 mod p
  std::int64_t t = 0, newt = 1, r = p, newr = a % p;
  while (newr != 0) {
    std::int64_t q = r / newr;
    t = std::exchange(newt, t - q * newt);
    r = std::exchange(newr, r - q * newr);
  }
  if (r != 1) throw not_invertible("no inverse of " + std::to_string(a) + " mod " + std::to_string(p));
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw not_invertible("division by zero in " + field().name());
  if (p_ == 0) return Scalar(mpq_class(1 / q_));
  return Scalar(p_, mod_inverse(r_, p_));
}

Scalar Scalar::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar acc = field().one();
  Scalar base = *this;
  for (; e > 0; e >>= 1) {
    if (e & 1) acc = acc * base;
    base = base * base;
  }
  return acc;
}

Scalar Scalar::to_field(FieldRef f) const {
  if (field() == f) return *this;
  if (p_ != 0 || !f.is_prime_field())
    throw field_mismatch("cannot carry " + field().name() + " into " + f.name());
  std::uint32_t p = f.characteristic();
  mpz_class num = q_.get_num(), den = q_.get_den();
  std::uint32_t dn = static_cast<std::uint32_t>(mpz_fdiv_ui(den.get_mpz_t(), p));
  if (dn == 0) throw not_invertible("denominator vanishes mod " + std::to_string(p));
  std::uint32_t nm = static_cast<std::uint32_t>(mpz_fdiv_ui(num.get_mpz_t(), p));
  return Scalar(p, static_cast<std::uint32_t>(static_cast<std::uint64_t>(nm) * mod_inverse(dn, p) % p));
}

const mpq_class& Scalar::rational_value() const {
  if (p_ != 0) throw field_mismatch("rational_value() on an F_p element");
  return q_;
}

std::uint32_t Scalar::residue() const {
  if (p_ == 0) throw field_mismatch("residue() on a rational");
  return r_;
}

std::string Scalar::to_string() const {
  return p_ == 0 ? q_.get_str() : std::to_string(r_);
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) return false;
  return a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
}

} // namespace truncdet
