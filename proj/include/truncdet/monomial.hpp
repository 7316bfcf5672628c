#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace truncdet {

/// The variable x^{(l)}_{i,j}: coefficient of t^l in the (i,j) entry of the
/// generic matrix. Rows and columns are 1-based, levels 0-based.
struct VarId {
  int row;
  int col;
  int level;

  friend bool operator==(VarId a, VarId b) {
    return a.row == b.row && a.col == b.col && a.level == b.level;
  }
  friend bool operator!=(VarId a, VarId b) { return !(a == b); }
};

/// Position in the variable chain: level descending, then row ascending,
/// then column ascending. Negative when a precedes b, i.e. a is the larger
/// variable. Independent of the matrix shape.
int chain_cmp(VarId a, VarId b);

struct VarChainLess {
  bool operator()(VarId a, VarId b) const { return chain_cmp(a, b) < 0; }
};

std::string var_name(VarId v); // "x[i,j,l]"

enum class Cmp { Less, Equal, Greater };

/// Power product of variables. Factors are kept sorted by chain position,
/// largest variable first, with positive exponents.
class Monomial {
public:
  using Factor = std::pair<VarId, std::uint32_t>;

  Monomial() = default; // the monomial 1
  static Monomial variable(VarId v, std::uint32_t e = 1);
  static Monomial from_factors(std::vector<Factor> factors);

  int degree() const { return deg_; }
  bool is_one() const { return f_.empty(); }
  const std::vector<Factor>& factors() const { return f_; }
  std::uint32_t exponent(VarId v) const;
  bool squarefree() const;

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// Exact quotient this / d; requires d.divides(*this).
  Monomial divided_by(const Monomial& d) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime_with(const Monomial& o) const;

  std::string to_string() const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.f_ == b.f_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
  std::vector<Factor> f_;
  int deg_ = 0;
};

/// Graded reverse lexicographic order on the chain above: higher degree
/// wins; on equal degree the monomial whose exponent deficit sits on the
/// smaller variables wins.
Cmp grevlex_cmp(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grevlex_cmp(a, b) == Cmp::Greater;
  }
};

} // namespace truncdet
