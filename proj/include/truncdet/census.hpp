#pragma once

#include <string>
#include <vector>

namespace truncdet {

enum class CountExactness { Exact, LowerBound };

struct Component {
  std::string label; // X_s, Y_L, Z, tangent-Y
  int s_index;
  long long codim;
  std::string description;
};

struct ComponentReport {
  int m, n, r, k;
  std::vector<Component> components;
  long long variety_codim = 0;
  CountExactness exactness = CountExactness::Exact;
  /// Number of irreducible components when Exact; otherwise the proven
  /// lower bound 1 + floor(k/2).
  long long component_count = 0;
};

/// Codimension of Z^{m,n}_{r,k} by the recursion: r=m and r=1 closed forms,
/// the classical k=1 value, the k<r rank-one reduction, and otherwise the
/// minimum of c_s + s*m*n over the strata. Memoized; accepts r=1.
long long variety_codim(int m, int n, int r, int k);

/// r = m: one irreducible component of codimension k(n-m+1).
ComponentReport census_maximal(int m, int n, int k);

/// r = 2 < m: the X_0..X_{L-1}, Y_L stratification with exact count L+1.
ComponentReport census_2xk(int m, int n, int k);

/// k = 2, 2 <= r < m: exactly two components (tangent-bundle case).
ComponentReport census_tangent(int m, int n, int r);

/// Any 2 <= r <= m <= n, k >= 1, via the recursion; exactness tracked.
ComponentReport census_general(int m, int n, int r, int k);

} // namespace truncdet
