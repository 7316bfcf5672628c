#pragma once

#include <map>
#include <string>
#include <vector>

#include "truncdet/monomial.hpp"
#include "truncdet/scalar.hpp"

namespace truncdet {

using Assignment = std::map<VarId, Scalar, VarChainLess>;

/// Sparse multivariate polynomial over Q or F_p. Terms are kept in strictly
/// decreasing grevlex order with nonzero coefficients, so equal polynomials
/// have identical representations and serialize identically.
class Polynomial {
public:
  struct Term {
    Monomial mono;
    Scalar coeff;
  };

  static Polynomial zero(FieldRef f) { return Polynomial(f); }
  static Polynomial constant(Scalar c);
  static Polynomial variable(VarId v, FieldRef f);
  static Polynomial from_terms(FieldRef f, std::vector<Term> terms);

  FieldRef field() const { return field_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Monomial& leading_monomial() const;
  const Scalar& leading_coefficient() const;
  int total_degree() const; // -1 for the zero polynomial

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

  Polynomial scaled(const Scalar& c) const;
  /// this * c * m in one pass; term order survives monomial multiplication.
  Polynomial times_term(const Scalar& c, const Monomial& m) const;

  /// Map coefficients into another field (Q -> F_p, or identity).
  Polynomial to_field(FieldRef f) const;

  /// Evaluate at a point; every variable occurring here must be assigned
  /// and values must live in this polynomial's field.
  Scalar eval(const Assignment& values) const;

  std::string to_string() const;
  /// Inverse of to_string, also accepting unnormalized input such as
  /// "2*x[1,1,0] - 3/2*x[2,2,1]^2 + 1".
  static Polynomial parse(const std::string& text, FieldRef f = FieldRef::rationals());

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
  explicit Polynomial(FieldRef f) : field_(f) {}

  FieldRef field_;
  std::vector<Term> terms_;
};

} // namespace truncdet
