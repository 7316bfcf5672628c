#include <doctest.h>

#include <algorithm>
#include <random>

#include "truncdet/ideal.hpp"

using namespace truncdet;

TEST_SUITE_BEGIN("ideal");

namespace {

long long binom(int n, int r) {
  if (r < 0 || r > n) return 0;
  long long v = 1;
  for (int i = 0; i < r; ++i) v = v * (n - i) / (i + 1);
  return v;
}

// Independent oracle for wedge coefficients: expand the t^w coefficient of
// u_{j1}(t) ^ ... ^ u_{jq}(t) as a sum over level splits l_1+..+l_q = w with
// every l_i < k, each split contributing the Leibniz determinant of the
// constant rows u_{j_a}^{(l_a)} restricted to the chosen columns. No series
// arithmetic and no cofactor recursion is involved.
Polynomial wedge_coeff_oracle(const MatrixShape& shape, const std::vector<int>& rows,
                              const std::vector<int>& cols, int w) {
  FieldRef field = FieldRef::rationals();
  int q = static_cast<int>(rows.size());
  std::vector<Polynomial::Term> terms;

  std::vector<int> perm(cols.size());
  std::vector<int> levels(static_cast<std::size_t>(q));
  std::function<void(int, int)> split = [&](int pos, int remaining) {
    if (pos == q) {
      if (remaining != 0) return;
      for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
      do {
        int inversions = 0;
        for (std::size_t a = 0; a < perm.size(); ++a)
          for (std::size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b]) ++inversions;
        std::vector<Monomial::Factor> f;
        for (int a = 0; a < q; ++a)
          f.push_back({VarId{rows[static_cast<std::size_t>(a)],
                             cols[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)])],
                             levels[static_cast<std::size_t>(a)]},
                       1});
        terms.push_back({Monomial::from_factors(std::move(f)), field.from_int(inversions % 2 ? -1 : 1)});
      } while (std::next_permutation(perm.begin(), perm.end()));
      return;
    }
    for (int l = 0; l < shape.k && l <= remaining; ++l) {
      levels[static_cast<std::size_t>(pos)] = l;
      split(pos + 1, remaining - l);
    }
  };
  split(0, w);
  return Polynomial::from_terms(field, std::move(terms));
}

int t_weight(const Monomial& mono) {
  int w = 0;
  for (const auto& [v, e] : mono.factors()) w += v.level * static_cast<int>(e);
  return w;
}

} // namespace

TEST_CASE("shape validation names the violated condition") {
  CHECK_THROWS_WITH_AS((MatrixShape{3, 2, 2, 1}.validate()), "m <= n required", std::invalid_argument);
  CHECK_THROWS_WITH_AS((MatrixShape{2, 3, 3, 1}.validate()), "r <= m required", std::invalid_argument);
  CHECK_THROWS_WITH_AS((MatrixShape{2, 3, 0, 1}.validate()), "1 <= r required", std::invalid_argument);
  CHECK_THROWS_WITH_AS((MatrixShape{2, 3, 2, 0}.validate()), "k >= 1 required", std::invalid_argument);
  CHECK_NOTHROW((MatrixShape{2, 3, 2, 1}.validate()));
}

TEST_CASE("index subsets are lexicographic") {
  auto s = index_subsets(4, 2);
  REQUIRE(s.size() == 6);
  CHECK(s.front() == std::vector<int>{1, 2});
  CHECK(s[1] == std::vector<int>{1, 3});
  CHECK(s.back() == std::vector<int>{3, 4});
  CHECK(index_subsets(3, 3).size() == 1);
  CHECK(index_subsets(2, 3).empty());
}

TEST_CASE("1x1 minor is the entry, coefficient by coefficient") {
  auto cs = minor_coefficients(MatrixShape{1, 1, 1, 2}, {1}, {1});
  REQUIRE(cs.size() == 2);
  CHECK(cs[0] == Polynomial::parse("x[1,1,0]"));
  CHECK(cs[1] == Polynomial::parse("x[1,1,1]"));
}

TEST_CASE("2x2 determinant at k=1 and its t-coefficient at k=2") {
  auto d = minor_coefficients(MatrixShape{2, 2, 2, 1}, {1, 2}, {1, 2});
  REQUIRE(d.size() == 1);
  CHECK(d[0] == Polynomial::parse("x[1,1,0]*x[2,2,0] - x[1,2,0]*x[2,1,0]"));

  auto d2 = minor_coefficients(MatrixShape{2, 2, 2, 2}, {1, 2}, {1, 2});
  REQUIRE(d2.size() == 2);
  CHECK(d2[1] == Polynomial::parse(
                     "x[1,1,0]*x[2,2,1] + x[1,1,1]*x[2,2,0] - x[1,2,0]*x[2,1,1] - x[1,2,1]*x[2,1,0]"));

  CHECK_THROWS_AS(minor_coefficients(MatrixShape{2, 2, 2, 1}, {2, 1}, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(minor_coefficients(MatrixShape{2, 2, 2, 1}, {1, 3}, {1, 2}), std::invalid_argument);
}

TEST_CASE("generator census: count, order, bidegree") {
  GeneratorSet gs = generate_ideal(MatrixShape{2, 3, 2, 2});
  CHECK(gs.gens.size() == 6);
  // (rows, cols, w) lexicographic
  CHECK(gs.gens[0].cols == std::vector<int>{1, 2});
  CHECK(gs.gens[0].w == 0);
  CHECK(gs.gens[1].cols == std::vector<int>{1, 2});
  CHECK(gs.gens[1].w == 1);
  CHECK(gs.gens[4].cols == std::vector<int>{2, 3});

  for (MatrixShape shape : {MatrixShape{2, 3, 2, 2}, MatrixShape{3, 3, 2, 2}, MatrixShape{2, 2, 1, 3},
                            MatrixShape{3, 4, 3, 2}, MatrixShape{1, 3, 1, 2}}) {
    GeneratorSet g = generate_ideal(shape);
    CHECK(static_cast<long long>(g.gens.size()) ==
          shape.k * binom(shape.m, shape.r) * binom(shape.n, shape.r));
    for (const Generator& gen : g.gens) {
      REQUIRE(!gen.poly.is_zero());
      for (const auto& term : gen.poly.terms()) {
        CHECK(term.mono.degree() == shape.r);
        CHECK(t_weight(term.mono) == gen.w);
      }
    }
  }
}

TEST_CASE("rank-one ideal is the variable list") {
  GeneratorSet gs = generate_ideal(MatrixShape{1, 2, 1, 2});
  REQUIRE(gs.gens.size() == 4);
  CHECK(gs.gens[0].poly == Polynomial::parse("x[1,1,0]"));
  CHECK(gs.gens[1].poly == Polynomial::parse("x[1,1,1]"));
  CHECK(gs.gens[2].poly == Polynomial::parse("x[1,2,0]"));
  CHECK(gs.gens[3].poly == Polynomial::parse("x[1,2,1]"));
}

TEST_CASE("determinant coefficients agree with the series minors") {
  for (int m = 1; m <= 4; ++m)
    for (int k = 1; k <= 4; ++k) {
      std::vector<Polynomial> mu = det_coefficients(m, k);
      std::vector<int> full(static_cast<std::size_t>(m));
      for (int i = 0; i < m; ++i) full[static_cast<std::size_t>(i)] = i + 1;
      std::vector<Polynomial> series = minor_coefficients(MatrixShape{m, m, m, k}, full, full);
      REQUIRE(mu.size() == series.size());
      for (std::size_t s = 0; s < mu.size(); ++s) CHECK(mu[s] == series[s]);
    }
  CHECK(det_coefficients(3, 1)[0].term_count() == 6);
}

TEST_CASE("torus grading: generator g_w picks up exactly lambda^w") {
  std::mt19937 rng(2024);
  FieldRef f = FieldRef::prime(101);
  for (MatrixShape shape : {MatrixShape{2, 2, 2, 2}, MatrixShape{2, 3, 2, 3}, MatrixShape{3, 3, 2, 2}}) {
    GeneratorSet gs = generate_ideal(shape, f);
    for (int trial = 0; trial < 20; ++trial) {
      Assignment pt, scaled;
      Scalar lambda = f.from_int(static_cast<long long>(rng() % 100) + 1);
      for (int i = 1; i <= shape.m; ++i)
        for (int j = 1; j <= shape.n; ++j)
          for (int l = 0; l < shape.k; ++l) {
            Scalar v = f.from_int(static_cast<long long>(rng() % 101));
            pt[VarId{i, j, l}] = v;
            scaled[VarId{i, j, l}] = v * lambda.pow(l);
          }
      for (const Generator& g : gs.gens)
        CHECK(g.poly.eval(scaled) == g.poly.eval(pt) * lambda.pow(g.w));
    }
  }
}

TEST_CASE("AP bundles against the level-split oracle, all weights up to 2k-1") {
  for (MatrixShape shape : {MatrixShape{3, 3, 2, 2}, MatrixShape{3, 4, 2, 2}, MatrixShape{4, 4, 3, 2},
                            MatrixShape{3, 3, 2, 3}}) {
    std::vector<int> rows(static_cast<std::size_t>(shape.r + 1));
    for (int i = 0; i <= shape.r; ++i) rows[static_cast<std::size_t>(i)] = i + 1;
    std::vector<ApBundle> bundles = ap_equations(shape, rows);
    REQUIRE(static_cast<int>(bundles.size()) == 2 * shape.k);
    for (const ApBundle& b : bundles) {
      REQUIRE(b.components.size() == static_cast<std::size_t>(binom(shape.n, shape.r + 1)));
      for (const auto& [cols, poly] : b.components)
        CHECK(poly == wedge_coeff_oracle(shape, rows, cols, b.w));
    }
  }
}

TEST_CASE("AP bundles with w < k are the (r+1)-minor generators") {
  MatrixShape shape{3, 4, 2, 2};
  std::vector<ApBundle> bundles = ap_equations(shape, {1, 2, 3});
  GeneratorSet bigger = generate_ideal(MatrixShape{shape.m, shape.n, shape.r + 1, shape.k});
  for (int w = 0; w < shape.k; ++w)
    for (const auto& [cols, poly] : bundles[static_cast<std::size_t>(w)].components) {
      auto it = std::find_if(bigger.gens.begin(), bigger.gens.end(), [&](const Generator& g) {
        return g.rows == std::vector<int>{1, 2, 3} && g.cols == cols && g.w == w;
      });
      REQUIRE(it != bigger.gens.end());
      CHECK(poly == it->poly);
    }
}

TEST_CASE("the weight-7 wedge detects the deep witness point") {
  // u_1^{(1)} = e1, u_2^{(3)} = e2, u_3^{(3)} = e3 at (m,n,k) = (3,3,4):
  // the only surviving split of w = 7 is 1+3+3, giving e1^e2^e3.
  MatrixShape shape{3, 3, 2, 4};
  std::vector<ApBundle> bundles = ap_equations(shape, {1, 2, 3});
  Assignment pt;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int l = 0; l < 4; ++l) pt[VarId{i, j, l}] = FieldRef::rationals().zero();
  pt[VarId{1, 1, 1}] = FieldRef::rationals().one();
  pt[VarId{2, 2, 3}] = FieldRef::rationals().one();
  pt[VarId{3, 3, 3}] = FieldRef::rationals().one();

  const ApBundle& b = bundles[7];
  REQUIRE(b.components.size() == 1);
  CHECK(b.components[0].second.eval(pt) == FieldRef::rationals().one());

  CHECK_THROWS_AS(ap_equations(MatrixShape{3, 3, 3, 2}, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("extra wedge equations") {
  // k=1, r=2, m=n=2: the single 2-fold wedge is the classical determinant
  auto w1 = extra_wedge_equations(MatrixShape{2, 2, 2, 1});
  REQUIRE(w1.size() == 1);
  CHECK(w1[0].poly == Polynomial::parse("x[1,1,0]*x[2,2,0] - x[1,2,0]*x[2,1,0]"));

  // k(r-1)+1 = 4 > n = 3: vacuous
  CHECK(extra_wedge_equations(MatrixShape{3, 3, 2, 3}).empty());

  // r=2, k=2, m=n=3: C(6,3) vector triples, one column set each
  auto w3 = extra_wedge_equations(MatrixShape{3, 3, 2, 2});
  CHECK(w3.size() == 20);
  for (const WedgeEquation& eq : w3) {
    CHECK(eq.vectors.size() == 3);
    CHECK(eq.cols == std::vector<int>{1, 2, 3});
    CHECK(eq.poly.total_degree() == 3);
  }
}

TEST_SUITE_END();
