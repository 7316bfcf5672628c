#include "truncdet/points.hpp"

#include <algorithm>
#include <future>
#include <thread>
#include <utility>

namespace truncdet {

namespace {

int var_slot(const MatrixShape& sh, VarId v) {
  return ((v.row - 1) * sh.n + (v.col - 1)) * sh.k + v.level;
}

VarId slot_var(const MatrixShape& sh, int slot) {
  int level = slot % sh.k;
  int cell = slot / sh.k;
  return VarId{cell / sh.n + 1, cell % sh.n + 1, level};
}

/// Flat evaluation program for one generator over F_p: [term count], then
/// per term [coefficient residue, factor count, variable slot...] with
/// exponents expanded into repeated slots.
struct Tape {
  std::vector<std::uint32_t> code;
};

std::vector<Tape> compile_tapes(const GeneratorSet& gens) {
  std::vector<Tape> tapes;
  tapes.reserve(gens.gens.size());
  for (const Generator& g : gens.gens) {
    Tape t;
    t.code.push_back(static_cast<std::uint32_t>(g.poly.term_count()));
    for (const Polynomial::Term& term : g.poly.terms()) {
      t.code.push_back(term.coeff.residue());
      t.code.push_back(static_cast<std::uint32_t>(term.mono.degree()));
      for (const Monomial::Factor& f : term.mono.factors())
        for (std::uint32_t c = 0; c < f.second; ++c)
          t.code.push_back(static_cast<std::uint32_t>(var_slot(gens.shape, f.first)));
    }
    tapes.push_back(std::move(t));
  }
  return tapes;
}

bool tapes_vanish(const std::vector<Tape>& tapes, const std::vector<std::uint32_t>& digit,
                  std::uint64_t p) {
  for (const Tape& t : tapes) {
    std::uint64_t acc = 0;
    std::size_t pos = 0;
    const std::uint32_t nterms = t.code[pos++];
    for (std::uint32_t i = 0; i < nterms; ++i) {
      std::uint64_t v = t.code[pos++];
      const std::uint32_t nfactors = t.code[pos++];
      for (std::uint32_t f = 0; f < nfactors; ++f) v = v * digit[t.code[pos++]] % p;
      acc = (acc + v) % p;
    }
    if (acc != 0) return false;
  }
  return true;
}

void decode_digits(std::uint64_t idx, std::uint32_t q, std::vector<std::uint32_t>& digit) {
  for (std::size_t d = digit.size(); d-- > 0;) {
    digit[d] = static_cast<std::uint32_t>(idx % q);
    idx /= q;
  }
}

void advance_digits(std::uint32_t q, std::vector<std::uint32_t>& digit) {
  for (std::size_t d = digit.size(); d-- > 0;) {
    if (++digit[d] < q) return;
    digit[d] = 0;
  }
}

std::uint64_t count_block(const std::vector<Tape>& tapes, std::size_t nvars, std::uint32_t q,
                          std::uint64_t begin, std::uint64_t end) {
  std::vector<std::uint32_t> digit(nvars, 0);
  decode_digits(begin, q, digit);
  std::uint64_t hits = 0;
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    if (tapes_vanish(tapes, digit, q)) ++hits;
    advance_digits(q, digit);
  }
  return hits;
}

mpz_class search_space(const MatrixShape& shape, std::uint32_t q) {
  mpz_class total;
  mpz_ui_pow_ui(total.get_mpz_t(), q, static_cast<unsigned long>(shape.variable_count()));
  return total;
}

void check_cap(const mpz_class& total, std::uint64_t cap, const char* what) {
  if (total > cap)
    throw cap_exceeded(std::string(what) + " needs " + total.get_str() +
                       " candidates, over the cap of " + std::to_string(cap));
}

bool levels_below_vanish(const PointAssignment& pt, int s) {
  for (const auto& [v, val] : pt.values)
    if (v.level < s && !val.is_zero()) return false;
  return true;
}

ScalarSeries series_zero(FieldRef f, int order) { return series_constant(f.zero(), order); }

ScalarSeries series_det(const std::vector<std::vector<ScalarSeries>>& a) {
  const std::size_t r = a.size();
  if (r == 1) return a[0][0];
  ScalarSeries acc = series_zero(a[0][0][0].field(), a[0][0].order());
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<std::vector<ScalarSeries>> sub;
    sub.reserve(r - 1);
    for (std::size_t i = 1; i < r; ++i) {
      std::vector<ScalarSeries> row;
      row.reserve(r - 1);
      for (std::size_t jj = 0; jj < r; ++jj)
        if (jj != j) row.push_back(a[i][jj]);
      sub.push_back(std::move(row));
    }
    ScalarSeries term = a[0][j] * series_det(sub);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

} // namespace

void PointAssignment::validate() const {
  shape.validate();
  if (static_cast<long long>(values.size()) != shape.variable_count())
    throw std::invalid_argument("point assigns " + std::to_string(values.size()) +
                                " values, the shape has " + std::to_string(shape.variable_count()) +
                                " variables");
  for (const auto& [v, val] : values) {
    if (v.row < 1 || v.row > shape.m || v.col < 1 || v.col > shape.n || v.level < 0 ||
        v.level >= shape.k)
      throw std::invalid_argument(var_name(v) + " lies outside the shape's grid");
    if (val.field() != field)
      throw field_mismatch("point over " + field.name() + " holds a " + val.field().name() +
                           " value at " + var_name(v));
  }
}

const Scalar& PointAssignment::at(int i, int j, int l) const {
  auto it = values.find(VarId{i, j, l});
  if (it == values.end())
    throw std::invalid_argument(var_name(VarId{i, j, l}) + " is not assigned");
  return it->second;
}

PointAssignment zero_point(const MatrixShape& shape, FieldRef field) {
  shape.validate();
  PointAssignment pt{shape, field, {}};
  for (int i = 1; i <= shape.m; ++i)
    for (int j = 1; j <= shape.n; ++j)
      for (int l = 0; l < shape.k; ++l) pt.values.emplace(VarId{i, j, l}, field.zero());
  return pt;
}

bool evaluate_membership(const PointAssignment& pt, const GeneratorSet& gens) {
  pt.validate();
  if (gens.shape.m != pt.shape.m || gens.shape.n != pt.shape.n || gens.shape.k != pt.shape.k)
    throw std::invalid_argument("point grid does not match the ideal's grid");
  for (const Generator& g : gens.gens) {
    const Polynomial p = g.poly.field() == pt.field ? g.poly : g.poly.to_field(pt.field);
    if (!p.eval(pt.values).is_zero()) return false;
  }
  return true;
}

CountResult count_points(const MatrixShape& shape, std::uint32_t q, std::uint64_t cap,
                         unsigned threads) {
  shape.validate();
  const FieldRef fq = FieldRef::prime(q);
  const mpz_class space = search_space(shape, q);
  check_cap(space, cap, "counting");
  const std::uint64_t total = space.get_ui();

  const GeneratorSet gens = generate_ideal(shape, fq);
  const std::vector<Tape> tapes = compile_tapes(gens);
  const std::size_t nvars = static_cast<std::size_t>(shape.variable_count());

  const unsigned hw = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t blocks = std::min<std::uint64_t>(hw, total);
  std::vector<std::future<std::uint64_t>> parts;
  parts.reserve(blocks);
  for (std::uint64_t b = 0; b < blocks; ++b) {
    const std::uint64_t begin = total * b / blocks;
    const std::uint64_t end = total * (b + 1) / blocks;
    parts.push_back(std::async(std::launch::async, [&tapes, nvars, q, begin, end] {
      return count_block(tapes, nvars, q, begin, end);
    }));
  }
  mpz_class count = 0;
  for (std::future<std::uint64_t>& part : parts) count += static_cast<unsigned long>(part.get());
  return CountResult{shape, q, count, space, CountMethod::VariableLevel};
}

CountResult count_points_ringlevel(const MatrixShape& shape, std::uint32_t q, std::uint64_t cap) {
  shape.validate();
  const FieldRef fq = FieldRef::prime(q);
  const mpz_class space = search_space(shape, q);
  check_cap(space, cap, "ring-level counting");
  const std::uint64_t total = space.get_ui();

  std::vector<Scalar> elem;
  elem.reserve(q);
  for (std::uint32_t v = 0; v < q; ++v) elem.push_back(fq.from_int(v));
  const auto rowsets = index_subsets(shape.m, shape.r);
  const auto colsets = index_subsets(shape.n, shape.r);

  const std::size_t nvars = static_cast<std::size_t>(shape.variable_count());
  std::vector<std::uint32_t> digit(nvars, 0);
  mpz_class count = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx, advance_digits(q, digit)) {
    std::vector<std::vector<ScalarSeries>> mat;
    mat.reserve(shape.m);
    for (int i = 1; i <= shape.m; ++i) {
      std::vector<ScalarSeries> row;
      row.reserve(shape.n);
      for (int j = 1; j <= shape.n; ++j) {
        std::vector<Scalar> coeffs;
        coeffs.reserve(shape.k);
        for (int l = 0; l < shape.k; ++l)
          coeffs.push_back(elem[digit[var_slot(shape, VarId{i, j, l})]]);
        row.push_back(ScalarSeries(std::move(coeffs)));
      }
      mat.push_back(std::move(row));
    }
    bool on_variety = true;
    for (const auto& rows : rowsets) {
      for (const auto& cols : colsets) {
        std::vector<std::vector<ScalarSeries>> sub;
        sub.reserve(rows.size());
        for (int i : rows) {
          std::vector<ScalarSeries> row;
          row.reserve(cols.size());
          for (int j : cols) row.push_back(mat[i - 1][j - 1]);
          sub.push_back(std::move(row));
        }
        if (!series_is_zero(series_det(sub))) {
          on_variety = false;
          break;
        }
      }
      if (!on_variety) break;
    }
    if (on_variety) ++count;
  }
  return CountResult{shape, q, count, space, CountMethod::RingLevel};
}

std::vector<PointAssignment> collect_points(const MatrixShape& shape, std::uint32_t q,
                                            std::size_t limit, std::uint64_t cap) {
  shape.validate();
  const FieldRef fq = FieldRef::prime(q);
  const mpz_class space = search_space(shape, q);
  check_cap(space, cap, "point collection");
  const std::uint64_t total = space.get_ui();

  const GeneratorSet gens = generate_ideal(shape, fq);
  const std::vector<Tape> tapes = compile_tapes(gens);
  const std::size_t nvars = static_cast<std::size_t>(shape.variable_count());

  std::vector<PointAssignment> out;
  std::vector<std::uint32_t> digit(nvars, 0);
  for (std::uint64_t idx = 0; idx < total && out.size() < limit;
       ++idx, advance_digits(q, digit)) {
    if (!tapes_vanish(tapes, digit, q)) continue;
    PointAssignment pt = zero_point(shape, fq);
    for (std::size_t slot = 0; slot < nvars; ++slot)
      pt.values[slot_var(shape, static_cast<int>(slot))] = fq.from_int(digit[slot]);
    out.push_back(std::move(pt));
  }
  return out;
}

PointAssignment lift_point(const PointAssignment& z, const BorderSeries& border) {
  z.validate();
  const MatrixShape lifted{z.shape.m + 1, z.shape.n + 1, z.shape.r + 1, z.shape.k};
  lifted.validate();
  if (border.row.size() != static_cast<std::size_t>(lifted.n))
    throw std::invalid_argument("border row needs " + std::to_string(lifted.n) + " series, got " +
                                std::to_string(border.row.size()));
  if (border.col.size() != static_cast<std::size_t>(lifted.m - 1))
    throw std::invalid_argument("border column needs " + std::to_string(lifted.m - 1) +
                                " series, got " + std::to_string(border.col.size()));
  auto check_series = [&](const ScalarSeries& s) {
    if (s.order() != z.shape.k)
      throw truncation_mismatch("border series truncated at t^" + std::to_string(s.order()) +
                                " on a point of order " + std::to_string(z.shape.k));
    for (const Scalar& c : s.coeffs())
      if (c.field() != z.field)
        throw field_mismatch("border series over " + c.field().name() + " paired with a point over " +
                             z.field.name());
  };
  for (const ScalarSeries& s : border.row) check_series(s);
  for (const ScalarSeries& s : border.col) check_series(s);

  const ScalarSeries inv = series_inverse(border.row.back()); // corner x_{m,n}(t)

  PointAssignment out = zero_point(lifted, z.field);
  for (int i = 1; i <= z.shape.m; ++i) {
    for (int j = 1; j <= z.shape.n; ++j) {
      std::vector<Scalar> coeffs;
      coeffs.reserve(z.shape.k);
      for (int l = 0; l < z.shape.k; ++l) coeffs.push_back(z.at(i, j, l));
      const ScalarSeries lift =
          ScalarSeries(std::move(coeffs)) + border.row[j - 1] * border.col[i - 1] * inv;
      for (int l = 0; l < z.shape.k; ++l) out.values[VarId{i, j, l}] = lift[l];
    }
  }
  for (int j = 1; j <= lifted.n; ++j)
    for (int l = 0; l < lifted.k; ++l) out.values[VarId{lifted.m, j, l}] = border.row[j - 1][l];
  for (int i = 1; i < lifted.m; ++i)
    for (int l = 0; l < lifted.k; ++l) out.values[VarId{i, lifted.n, l}] = border.col[i - 1][l];
  return out;
}

SeparationWitness separation_witness(int m, int n, int k, int s, int alpha, FieldRef field) {
  const MatrixShape shape{m, n, 2, k};
  shape.validate();
  if (m < 3) throw std::invalid_argument("m >= 3 required for the three-row witness");
  if (k < 2) throw std::invalid_argument("k >= 2 required");
  const int cutoff = k / 2;
  if (s < 0 || s >= cutoff) throw std::invalid_argument("0 <= s < floor(k/2) required");
  if (alpha < 1 || alpha > cutoff - s)
    throw std::invalid_argument("1 <= alpha <= floor(k/2)-s required");

  PointAssignment pt = zero_point(shape, field);
  pt.values[VarId{1, 1, s + alpha}] = field.one();
  pt.values[VarId{2, 2, k - s - alpha}] = field.one();
  pt.values[VarId{3, 3, k - 1 - s}] = field.one();
  const bool member = evaluate_membership(pt, generate_ideal(shape, field));

  // Obstruction: drop the s vanishing levels and evaluate the top-weight
  // wedge bundle of the residual (m,n,2,k-2s) system.
  const int kk = k - 2 * s;
  const MatrixShape shifted{m, n, 2, kk};
  Assignment shifted_values;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j)
      for (int l = 0; l < kk; ++l) shifted_values[VarId{i, j, l}] = pt.at(i, j, l + s);
  const int w = 2 * kk - 1;
  bool nonzero = false;
  for (const ApBundle& bundle : ap_equations(shifted, {1, 2, 3})) {
    if (bundle.w != w) continue;
    for (const auto& [cols, poly] : bundle.components) {
      if (!poly.to_field(field).eval(shifted_values).is_zero()) {
        nonzero = true;
        break;
      }
    }
  }
  return SeparationWitness{std::move(pt), s, alpha, w, member, nonzero};
}

PointAssignment scale_point(const PointAssignment& pt, const Scalar& lambda, WeightRule rule) {
  pt.validate();
  if (lambda.field() != pt.field)
    throw field_mismatch("scaling a point over " + pt.field.name() + " by a " +
                         lambda.field().name() + " value");
  PointAssignment out = pt;
  for (auto& [v, val] : out.values) {
    const int e = rule == WeightRule::ByLevel ? v.level : pt.shape.k - 1 - v.level;
    val = val * lambda.pow(e);
  }
  return out;
}

IntersectionWitness intersection_witness(int m, int n, int k, FieldRef field) {
  const MatrixShape shape{m, n, 2, k};
  shape.validate();
  if (m < 3) throw std::invalid_argument("m >= 3 required for distinct components");
  if (k < 2) throw std::invalid_argument("k >= 2 required");
  const GeneratorSet gens = generate_ideal(shape, field);
  const int top = k / 2;

  if (k >= 4) {
    // Everything on the last level: in the closure of X_1 and of Y_{k/2}.
    PointAssignment pt = zero_point(shape, field);
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= n; ++j) pt.values[VarId{i, j, k - 1}] = field.one();
    const bool member = evaluate_membership(pt, gens);
    const bool a_ok = levels_below_vanish(pt, 1);
    const bool b_ok = levels_below_vanish(pt, top);
    return IntersectionWitness{std::move(pt), "X_1", "Y_" + std::to_string(top),
                               member,        a_ok,  b_ok,
                               {}};
  }

  // k = 2 or 3: the strata are X_0 and Y_1; exhibit a point of Y_1 reached
  // as a co-level scaling limit of points in the open X_0 locus.
  PointAssignment ray = zero_point(shape, field);
  for (int l = 0; l < k; ++l) ray.values[VarId{1, 1, l}] = field.one();
  PointAssignment limit = zero_point(shape, field);
  limit.values[VarId{1, 1, k - 1}] = field.one();

  std::vector<PointAssignment> curve;
  bool a_ok = true;
  for (long long c = 1; c <= 3 && curve.size() < 2; ++c) {
    const Scalar lambda = field.from_int(c);
    if (lambda.is_zero()) continue;
    bool fresh = true;
    for (long long prev = 1; prev < c; ++prev)
      if (field.from_int(prev) == lambda) fresh = false;
    if (!fresh) continue;
    PointAssignment sample = scale_point(ray, lambda, WeightRule::ByCoLevel);
    a_ok = a_ok && evaluate_membership(sample, gens) && !sample.at(1, 1, 0).is_zero();
    curve.push_back(std::move(sample));
  }
  a_ok = a_ok && scale_point(ray, field.zero(), WeightRule::ByCoLevel).values == limit.values;
  const bool member = evaluate_membership(limit, gens);
  const bool b_ok = levels_below_vanish(limit, 1);
  return IntersectionWitness{std::move(limit), "X_0", "Y_1", member, a_ok, b_ok,
                             std::move(curve)};
}

} // namespace truncdet
