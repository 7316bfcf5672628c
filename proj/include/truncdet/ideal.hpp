#pragma once

#include <utility>
#include <vector>

#include "truncdet/polynomial.hpp"
#include "truncdet/series.hpp"

namespace truncdet {

struct MatrixShape {
  int m; // rows
  int n; // cols
  int r; // minor size
  int k; // truncation order

  /// Throws invalid_argument naming the violated condition.
  void validate() const;
  long long variable_count() const { return static_cast<long long>(m) * n * k; }

  friend bool operator==(const MatrixShape& a, const MatrixShape& b) {
    return a.m == b.m && a.n == b.n && a.r == b.r && a.k == b.k;
  }
};

struct Generator {
  std::vector<int> rows; // strictly increasing r-subset of 1..m
  std::vector<int> cols; // strictly increasing r-subset of 1..n
  int w;                 // t-power, 0..k-1
  Polynomial poly;
};

/// The ideal I^{m,n}_{r,k}: coefficients of t^0..t^{k-1} of every r x r
/// minor of the generic matrix, in (rows, cols, w) order.
struct GeneratorSet {
  MatrixShape shape;
  std::vector<Generator> gens;
};

/// All r-subsets of {1..n}, ascending, in lexicographic order.
std::vector<std::vector<int>> index_subsets(int n, int r);

/// Coefficients of t^0..t^{k-1} of the minor on the given row/column sets,
/// computed in F[x][t]/(t^k) by cofactor expansion.
std::vector<Polynomial> minor_coefficients(const MatrixShape& shape, const std::vector<int>& rows,
                                           const std::vector<int>& cols,
                                           FieldRef field = FieldRef::rationals());

GeneratorSet generate_ideal(const MatrixShape& shape, FieldRef field = FieldRef::rationals());

/// d_0..d_{k-1} for the square maximal case r = m, built independently of
/// minor_coefficients by the mu_s permutation expansion:
/// d_s = sum_sigma sgn(sigma) sum_{l_1+..+l_m = s} prod_i x^{(l_i)}_{sigma(i),i}.
std::vector<Polynomial> det_coefficients(int m, int k, FieldRef field = FieldRef::rationals());

/// One t-weight slice of the (r+1)-fold wedge of the chosen rows: all
/// C(n, r+1) Pluecker coordinates of the coefficient of t^w.
struct ApBundle {
  int w;
  std::vector<std::pair<std::vector<int>, Polynomial>> components; // cols -> coordinate
};

/// Coefficients of t^0..t^{2k-1} of u_{j1}(t) ^ ... ^ u_{j_{r+1}}(t).
/// The wedge is expanded at truncation order 2k, not k: the content of the
/// rank argument lives in t^{2k} wedge^{r+1} M, so weights k..2k-1 carry
/// equations that truncating at k would silently discard.
std::vector<ApBundle> ap_equations(const MatrixShape& shape, const std::vector<int>& rows);

/// One Pluecker coordinate of a (k(r-1)+1)-fold wedge of the constant
/// vectors u_i^{(l)}; empty when k(r-1)+1 > n.
struct WedgeEquation {
  std::vector<std::pair<int, int>> vectors; // (row i, level l), ascending
  std::vector<int> cols;
  Polynomial poly;
};

std::vector<WedgeEquation> extra_wedge_equations(const MatrixShape& shape,
                                                 FieldRef field = FieldRef::rationals());

} // namespace truncdet
