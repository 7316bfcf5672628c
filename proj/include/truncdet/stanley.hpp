#pragma once

#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace truncdet {

class budget_exceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Description of a simplicial complex: a full simplex C_l, the boundary
/// skeleton S_l (every proper subset of l vertices), or a join of factors
/// on disjoint vertex sets.
struct ComplexSpec {
  enum class Kind { FullSimplex, Skeleton, Join };
  Kind kind = Kind::FullSimplex;
  int size = 0;
  std::vector<ComplexSpec> factors;

  static ComplexSpec full_simplex(int l);
  static ComplexSpec skeleton(int l);
  static ComplexSpec join(std::vector<ComplexSpec> factors);

  int vertex_count() const;
};

/// f[i] = number of i-dimensional faces; empty for the complex {emptyset}.
struct FVector {
  std::vector<mpz_class> f;

  friend bool operator==(const FVector& a, const FVector& b) { return a.f == b.f; }
};

/// Face-count polynomial: coefficient of x^c is the number of faces with c
/// vertices, so index 0 is always 1.
std::vector<mpz_class> f_polynomial(const ComplexSpec& spec);

/// f-vector of S_m^k, read off the k-th power of
/// 1 + m x + C(m,2) x^2 + ... + C(m,m-1) x^{m-1}.
FVector fvector_skeleton_power(int m, int k);

/// f-vector of S_m^k * C_b with b = k(m^2 - m); the ambient complex whose
/// Stanley-Reisner ring matches the lead-term ideal of d_0..d_{k-1}.
FVector fvector_full(int m, int k);

/// Brute-force face enumeration; vertex budget 24.
FVector fvector_enumerate(const ComplexSpec& spec);

/// H(d) = sum_i f_i C(d-1, i) for d >= 1, H(0) = 1, over fvector_full(m,k).
mpz_class hilbert_function(int m, int k, int d);

/// The f_i of fvector_full, i.e. the coefficients the Hilbert polynomial is
/// assembled from.
FVector hilbert_polynomial(int m, int k);

/// Degree-d monomials in the k m^2 variables divisible by none of the k
/// lead monomials lm(d_i). Inclusion-exclusion over subsets of the lead
/// monomials is exact because they are squarefree and pairwise coprime.
mpz_class standard_monomial_count(int m, int k, int d);

/// m^k, the degree of the maximal-minor variety in the square case.
mpz_class degree(int m, int k);

} // namespace truncdet
