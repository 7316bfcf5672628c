#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "truncdet/ideal.hpp"
#include "truncdet/series.hpp"

namespace truncdet {

class cap_exceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A complete assignment of field values to every x[i,j,l] of a shape.
struct PointAssignment {
  MatrixShape shape;
  FieldRef field;
  Assignment values;

  void validate() const;
  const Scalar& at(int i, int j, int l) const;
};

PointAssignment zero_point(const MatrixShape& shape, FieldRef field);

/// True iff every generator vanishes at the point. Generators over Q are
/// reduced into the point's field first.
bool evaluate_membership(const PointAssignment& pt, const GeneratorSet& gens);

enum class CountMethod { VariableLevel, RingLevel };

struct CountResult {
  MatrixShape shape;
  std::uint32_t q;
  mpz_class count;
  mpz_class enumerated; // search-space size q^{mnk}
  CountMethod method;
};

/// Exhaustive count of F_q-points of Z^{m,n}_{r,k}, one field value per
/// variable. Generators are compiled to flat evaluation tapes and the
/// candidate range is split into contiguous blocks processed concurrently;
/// the total is independent of the partitioning.
CountResult count_points(const MatrixShape& shape, std::uint32_t q,
                         std::uint64_t cap = 1ull << 26, unsigned threads = 0);

/// The same count computed the way the variety is defined: enumerate
/// matrices over F_q[t]/(t^k) and test every r x r minor with truncated
/// series arithmetic. Shares no evaluation code with count_points.
CountResult count_points_ringlevel(const MatrixShape& shape, std::uint32_t q,
                                   std::uint64_t cap = 1ull << 26);

/// The first `limit` variety points in odometer order (deterministic).
std::vector<PointAssignment> collect_points(const MatrixShape& shape, std::uint32_t q,
                                            std::size_t limit, std::uint64_t cap = 1ull << 26);

/// Border data for the rank-one lift: the new last row and last column as
/// series, with an invertible corner row[n-1] = x_{m,n}(t).
struct BorderSeries {
  std::vector<ScalarSeries> row; // x_{m,j}(t), j = 1..n
  std::vector<ScalarSeries> col; // x_{i,n}(t), i = 1..m-1
};

/// Inverse of the corner localization: from z on (m-1,n-1,r-1,k) and a
/// border, build x_{i,j}(t) = z_{i,j}(t) + x_{m,j}(t) x_{i,n}(t) x_{m,n}(t)^{-1}
/// on (m,n,r,k). Membership carries over exactly.
PointAssignment lift_point(const PointAssignment& z, const BorderSeries& border);

struct SeparationWitness {
  PointAssignment point;
  int s, alpha;
  int w; // the designated wedge weight 2(k-2s)-1
  bool membership;
  bool ap_nonzero;
};

/// The component-separating point u_1^{(s+alpha)} = e1,
/// u_2^{(k-s-alpha)} = e2, u_3^{(k-1-s)} = e3, everything else zero,
/// together with its two checks: it satisfies the whole ideal, yet the
/// weight-(2(k-2s)-1) wedge bundle of rows (1,2,3), taken on levels >= s,
/// does not vanish on it. alpha = floor(k/2)-s is the Y_L variant.
SeparationWitness separation_witness(int m, int n, int k, int s, int alpha, FieldRef field);

enum class WeightRule {
  ByLevel,  // x^{(l)} -> lambda^l x^{(l)}
  ByCoLevel // x^{(l)} -> lambda^{k-1-l} x^{(l)}
};

PointAssignment scale_point(const PointAssignment& pt, const Scalar& lambda, WeightRule rule);

struct IntersectionWitness {
  PointAssignment point;
  std::string locus_a, locus_b;
  bool membership;
  bool locus_a_ok;
  bool locus_b_ok;
  /// For k <= 3 the X_0 certificate is a curve: ByCoLevel scalings of the
  /// all-levels point, members with nonzero degree-0 part, degenerating to
  /// `point` at lambda = 0.
  std::vector<PointAssignment> curve;
};

/// A point in two distinct component loci: for k >= 4 the level-(k-1) point
/// in X_1 and Y_L; for k in {2,3} the limit of the scaling curve, in X_0
/// and Y_1.
IntersectionWitness intersection_witness(int m, int n, int k, FieldRef field);

} // namespace truncdet
