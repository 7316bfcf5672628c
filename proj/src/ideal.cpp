#include "truncdet/ideal.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>

namespace truncdet {

void MatrixShape::validate() const {
  if (r < 1) throw std::invalid_argument("1 <= r required");
  if (r > m) throw std::invalid_argument("r <= m required");
  if (m > n) throw std::invalid_argument("m <= n required");
  if (k < 1) throw std::invalid_argument("k >= 1 required");
}

std::vector<std::vector<int>> index_subsets(int n, int r) {
  std::vector<std::vector<int>> out;
  if (r < 0 || r > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  for (;;) {
    out.push_back(cur);
    int i = r - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - (r - 1 - i)) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

namespace {

void check_subset(const std::vector<int>& s, int bound, int size, const char* what) {
  if (static_cast<int>(s.size()) != size)
    throw std::invalid_argument(std::string(what) + " must have exactly " + std::to_string(size) + " entries");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > bound)
      throw std::invalid_argument(std::string(what) + " index " + std::to_string(s[i]) + " out of range 1.." + std::to_string(bound));
    if (i > 0 && s[i] <= s[i - 1])
      throw std::invalid_argument(std::string(what) + " must be strictly increasing");
  }
}

// Cofactor expansion along successive rows, memoized on the set of columns
// still in play. The row is determined by the mask size, so the mask alone
// keys the table. R is any ring with +, -, *.
template <class R>
class MinorTable {
public:
  MinorTable(std::vector<std::vector<R>> entries, R one) : e_(std::move(entries)), one_(std::move(one)) {}

  const R& det(std::uint32_t mask) {
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    R value = one_;
    if (mask != 0) {
      std::size_t row = e_.size() - static_cast<std::size_t>(__builtin_popcount(mask));
      bool first = true, positive = true;
      for (std::size_t b = 0; b < e_.size(); ++b) {
        if (!(mask & (1u << b))) continue;
        R term = e_[row][b] * det(mask & ~(1u << b));
        if (first)
          value = positive ? std::move(term) : -term;
        else
          value = positive ? value + term : value - term;
        first = false;
        positive = !positive;
      }
    }
    return memo_.emplace(mask, std::move(value)).first->second;
  }

private:
  std::vector<std::vector<R>> e_;
  R one_;
  std::map<std::uint32_t, R> memo_;
};

using PolySeries = Series<Polynomial>;

// Entry (i,j) of the generic matrix as a polynomial-coefficient series of
// the given truncation order; levels >= k are zero.
PolySeries generic_entry(int i, int j, int k, int order, FieldRef field) {
  std::vector<Polynomial> c;
  c.reserve(static_cast<std::size_t>(order));
  for (int l = 0; l < order; ++l)
    c.push_back(l < k ? Polynomial::variable(VarId{i, j, l}, field) : Polynomial::zero(field));
  return PolySeries(std::move(c));
}

PolySeries series_minor(const MatrixShape& shape, const std::vector<int>& rows,
                        const std::vector<int>& cols, int order, FieldRef field) {
  std::size_t sz = rows.size();
  std::vector<std::vector<PolySeries>> e;
  e.reserve(sz);
  for (std::size_t a = 0; a < sz; ++a) {
    std::vector<PolySeries> line;
    line.reserve(sz);
    for (std::size_t b = 0; b < sz; ++b)
      line.push_back(generic_entry(rows[a], cols[b], shape.k, order, field));
    e.push_back(std::move(line));
  }
  std::vector<Polynomial> one(static_cast<std::size_t>(order), Polynomial::zero(field));
  one[0] = Polynomial::constant(field.one());
  MinorTable<PolySeries> table(std::move(e), PolySeries(std::move(one)));
  return table.det((1u << sz) - 1);
}

} // namespace

std::vector<Polynomial> minor_coefficients(const MatrixShape& shape, const std::vector<int>& rows,
                                           const std::vector<int>& cols, FieldRef field) {
  shape.validate();
  check_subset(rows, shape.m, shape.r, "rows");
  check_subset(cols, shape.n, shape.r, "cols");
  return series_minor(shape, rows, cols, shape.k, field).coeffs();
}

GeneratorSet generate_ideal(const MatrixShape& shape, FieldRef field) {
  shape.validate();
  GeneratorSet out{shape, {}};
  for (const auto& rows : index_subsets(shape.m, shape.r))
    for (const auto& cols : index_subsets(shape.n, shape.r)) {
      std::vector<Polynomial> cs = minor_coefficients(shape, rows, cols, field);
      for (int w = 0; w < shape.k; ++w) out.gens.push_back({rows, cols, w, cs[static_cast<std::size_t>(w)]});
    }
  return out;
}

namespace {

void level_splits(int positions, int total, std::vector<int>& cur, const std::function<void()>& emit) {
  if (positions == 1) {
    cur.push_back(total);
    emit();
    cur.pop_back();
    return;
  }
  for (int first = 0; first <= total; ++first) {
    cur.push_back(first);
    level_splits(positions - 1, total - first, cur, emit);
    cur.pop_back();
  }
}

} // namespace

std::vector<Polynomial> det_coefficients(int m, int k, FieldRef field) {
  MatrixShape{m, m, m, k}.validate();
  std::vector<std::vector<Polynomial::Term>> terms(static_cast<std::size_t>(k));

  std::vector<int> perm(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
      for (std::size_t b = a + 1; b < perm.size(); ++b)
        if (perm[a] > perm[b]) ++inversions;
    Scalar sign = field.from_int(inversions % 2 == 0 ? 1 : -1);

    for (int s = 0; s < k; ++s) {
      std::vector<int> levels;
      level_splits(m, s, levels, [&] {
        std::vector<Monomial::Factor> f;
        for (int c = 0; c < m; ++c)
          f.push_back({VarId{perm[static_cast<std::size_t>(c)], c + 1, levels[static_cast<std::size_t>(c)]}, 1});
        terms[static_cast<std::size_t>(s)].push_back({Monomial::from_factors(std::move(f)), sign});
      });
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Polynomial> out;
  out.reserve(static_cast<std::size_t>(k));
  for (int s = 0; s < k; ++s) out.push_back(Polynomial::from_terms(field, std::move(terms[static_cast<std::size_t>(s)])));
  return out;
}

std::vector<ApBundle> ap_equations(const MatrixShape& shape, const std::vector<int>& rows) {
  shape.validate();
  if (shape.r + 1 > shape.m) throw std::invalid_argument("r + 1 <= m required for the wedge equations");
  check_subset(rows, shape.m, shape.r + 1, "rows");
  FieldRef field = FieldRef::rationals();
  int order = 2 * shape.k;

  std::vector<ApBundle> bundles;
  bundles.reserve(static_cast<std::size_t>(order));
  for (int w = 0; w < order; ++w) bundles.push_back({w, {}});

  for (const auto& cols : index_subsets(shape.n, shape.r + 1)) {
    PolySeries d = series_minor(shape, rows, cols, order, field);
    for (int w = 0; w < order; ++w) bundles[static_cast<std::size_t>(w)].components.push_back({cols, d[w]});
  }
  return bundles;
}

std::vector<WedgeEquation> extra_wedge_equations(const MatrixShape& shape, FieldRef field) {
  shape.validate();
  int q = shape.k * (shape.r - 1) + 1;
  std::vector<WedgeEquation> out;
  if (q > shape.n) return out; // the wedge statement is vacuous here

  std::vector<std::pair<int, int>> all;
  for (int i = 1; i <= shape.m; ++i)
    for (int l = 0; l < shape.k; ++l) all.push_back({i, l});

  for (const auto& vsel : index_subsets(static_cast<int>(all.size()), q)) {
    std::vector<std::pair<int, int>> vecs;
    for (int v : vsel) vecs.push_back(all[static_cast<std::size_t>(v - 1)]);
    for (const auto& cols : index_subsets(shape.n, q)) {
      std::vector<std::vector<Polynomial>> e;
      for (const auto& [i, l] : vecs) {
        std::vector<Polynomial> line;
        for (int c : cols) line.push_back(Polynomial::variable(VarId{i, c, l}, field));
        e.push_back(std::move(line));
      }
      MinorTable<Polynomial> table(std::move(e), Polynomial::constant(field.one()));
      out.push_back({vecs, cols, table.det((1u << q) - 1)});
    }
  }
  return out;
}

} // namespace truncdet
