#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "truncdet/scalar.hpp"

namespace truncdet {

class truncation_mismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Element of C[t]/(t^K) over a coefficient ring C, stored as the dense
/// list of coefficients of t^0 .. t^{K-1}. C must provide +, *, unary -.
template <class Ring>
class Series {
public:
  explicit Series(std::vector<Ring> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("truncation order must be at least 1");
  }

  int order() const { return static_cast<int>(c_.size()); }
  const Ring& operator[](int l) const { return c_.at(l); }
  Ring& operator[](int l) { return c_.at(l); }
  const std::vector<Ring>& coeffs() const { return c_; }

  Series operator-() const {
    std::vector<Ring> c;
    c.reserve(c_.size());
    for (const Ring& x : c_) c.push_back(-x);
    return Series(std::move(c));
  }

  friend Series operator+(const Series& a, const Series& b) {
    same_order(a, b);
    std::vector<Ring> c;
    c.reserve(a.c_.size());
    for (std::size_t l = 0; l < a.c_.size(); ++l) c.push_back(a.c_[l] + b.c_[l]);
    return Series(std::move(c));
  }

  friend Series operator-(const Series& a, const Series& b) {
    same_order(a, b);
    std::vector<Ring> c;
    c.reserve(a.c_.size());
    for (std::size_t l = 0; l < a.c_.size(); ++l) c.push_back(a.c_[l] + (-b.c_[l]));
    return Series(std::move(c));
  }

  friend Series operator*(const Series& a, const Series& b) {
    same_order(a, b);
    std::vector<Ring> c;
    c.reserve(a.c_.size());
    for (int l = 0; l < a.order(); ++l) {
      Ring s = a.c_[0] * b.c_[static_cast<std::size_t>(l)];
      for (int i = 1; i <= l; ++i) s = s + a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(l - i)];
      c.push_back(std::move(s));
    }
    return Series(std::move(c));
  }

private:
  static void same_order(const Series& a, const Series& b) {
    if (a.c_.size() != b.c_.size())
      throw truncation_mismatch("series truncated at t^" + std::to_string(a.c_.size()) +
                                " combined with t^" + std::to_string(b.c_.size()));
  }

  std::vector<Ring> c_;
};

using ScalarSeries = Series<Scalar>;

inline ScalarSeries series_constant(const Scalar& a0, int order) {
  std::vector<Scalar> c(static_cast<std::size_t>(order), a0.field().zero());
  c.at(0) = a0;
  return ScalarSeries(std::move(c));
}

inline bool series_is_unit(const ScalarSeries& a) { return !a[0].is_zero(); }

inline bool series_is_zero(const ScalarSeries& a) {
  for (const Scalar& c : a.coeffs())
    if (!c.is_zero()) return false;
  return true;
}

/// Multiplicative inverse in F[t]/(t^K); requires an invertible constant term.
inline ScalarSeries series_inverse(const ScalarSeries& a) {
  if (!series_is_unit(a))
    throw not_invertible("series with zero constant term has no inverse mod t^" + std::to_string(a.order()));
  Scalar u = a[0].inverse();
  std::vector<Scalar> b{u};
  for (int l = 1; l < a.order(); ++l) {
    Scalar s = a[1] * b[static_cast<std::size_t>(l - 1)];
    for (int i = 2; i <= l; ++i) s += a[i] * b[static_cast<std::size_t>(l - i)];
    b.push_back(-(u * s));
  }
  return ScalarSeries(std::move(b));
}

inline bool operator==(const ScalarSeries& a, const ScalarSeries& b) {
  return a.coeffs() == b.coeffs();
}

} // namespace truncdet
