#include "truncdet/stanley.hpp"

#include <cstdint>

namespace truncdet {

namespace {

mpz_class binom(unsigned long n, unsigned long r) {
  mpz_class v;
  mpz_bin_uiui(v.get_mpz_t(), n, r);
  return v;
}

std::vector<mpz_class> poly_mul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
  std::vector<mpz_class> c(a.size() + b.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// Drop the constant-term slot: face-count polynomial -> f-vector.
FVector to_fvector(std::vector<mpz_class> poly) {
  FVector out;
  out.f.assign(poly.begin() + 1, poly.end());
  while (!out.f.empty() && out.f.back() == 0) out.f.pop_back();
  return out;
}

std::vector<mpz_class> skeleton_poly(int m) {
  std::vector<mpz_class> p;
  for (int i = 0; i < m; ++i) p.push_back(binom(static_cast<unsigned long>(m), static_cast<unsigned long>(i)));
  return p;
}

} // namespace

ComplexSpec ComplexSpec::full_simplex(int l) {
  if (l < 0) throw std::invalid_argument("full simplex needs l >= 0");
  return {Kind::FullSimplex, l, {}};
}

ComplexSpec ComplexSpec::skeleton(int l) {
  if (l < 1) throw std::invalid_argument("skeleton needs l >= 1");
  return {Kind::Skeleton, l, {}};
}

ComplexSpec ComplexSpec::join(std::vector<ComplexSpec> factors) {
  ComplexSpec s;
  s.kind = Kind::Join;
  s.factors = std::move(factors);
  return s;
}

int ComplexSpec::vertex_count() const {
  if (kind != Kind::Join) return size;
  int total = 0;
  for (const ComplexSpec& f : factors) total += f.vertex_count();
  return total;
}

std::vector<mpz_class> f_polynomial(const ComplexSpec& spec) {
  switch (spec.kind) {
    case ComplexSpec::Kind::FullSimplex: {
      std::vector<mpz_class> p;
      for (int i = 0; i <= spec.size; ++i)
        p.push_back(binom(static_cast<unsigned long>(spec.size), static_cast<unsigned long>(i)));
      return p;
    }
    case ComplexSpec::Kind::Skeleton:
      return skeleton_poly(spec.size);
    case ComplexSpec::Kind::Join: {
      std::vector<mpz_class> p{1};
      for (const ComplexSpec& f : spec.factors) p = poly_mul(p, f_polynomial(f));
      return p;
    }
  }
  throw std::logic_error("unreachable");
}

FVector fvector_skeleton_power(int m, int k) {
  if (m < 1 || k < 1) throw std::invalid_argument("m, k >= 1 required");
  std::vector<mpz_class> p{1};
  for (int i = 0; i < k; ++i) p = poly_mul(p, skeleton_poly(m));
  return to_fvector(std::move(p));
}

FVector fvector_full(int m, int k) {
  if (m < 1 || k < 1) throw std::invalid_argument("m, k >= 1 required");
  int b = k * (m * m - m);
  std::vector<mpz_class> p{1};
  for (int i = 0; i < k; ++i) p = poly_mul(p, skeleton_poly(m));
  std::vector<mpz_class> simplex;
  for (int i = 0; i <= b; ++i)
    simplex.push_back(binom(static_cast<unsigned long>(b), static_cast<unsigned long>(i)));
  return to_fvector(poly_mul(p, simplex));
}

FVector fvector_enumerate(const ComplexSpec& spec) {
  int v = spec.vertex_count();
  if (v > 24) throw budget_exceeded("vertex budget 24 exceeded: " + std::to_string(v));

  // flatten leaves with their global vertex ranges
  struct Leaf {
    ComplexSpec::Kind kind;
    int size;
    std::uint32_t mask;
  };
  std::vector<Leaf> leaves;
  int next = 0;
  auto flatten = [&](auto&& self, const ComplexSpec& s) -> void {
    if (s.kind == ComplexSpec::Kind::Join) {
      for (const ComplexSpec& f : s.factors) self(self, f);
      return;
    }
    std::uint32_t mask = ((s.size >= 32 ? 0 : (1u << s.size)) - 1u) << next;
    leaves.push_back({s.kind, s.size, mask});
    next += s.size;
  };
  flatten(flatten, spec);

  std::vector<mpz_class> counts(static_cast<std::size_t>(v) + 1, mpz_class(0));
  for (std::uint32_t sub = 0; sub < (1u << v); ++sub) {
    bool face = true;
    for (const Leaf& leaf : leaves) {
      std::uint32_t part = sub & leaf.mask;
      if (leaf.kind == ComplexSpec::Kind::Skeleton &&
          __builtin_popcount(part) >= leaf.size) {
        face = false;
        break;
      }
    }
    if (face) ++counts[static_cast<std::size_t>(__builtin_popcount(sub))];
  }
  return to_fvector(std::move(counts));
}

mpz_class hilbert_function(int m, int k, int d) {
  if (d < 0) throw std::invalid_argument("d >= 0 required");
  if (d == 0) return 1;
  FVector fv = fvector_full(m, k);
  mpz_class h = 0;
  for (std::size_t i = 0; i < fv.f.size(); ++i)
    h += fv.f[i] * binom(static_cast<unsigned long>(d - 1), static_cast<unsigned long>(i));
  return h;
}

FVector hilbert_polynomial(int m, int k) { return fvector_full(m, k); }

mpz_class standard_monomial_count(int m, int k, int d) {
  if (d < 0) throw std::invalid_argument("d >= 0 required");
  if (d > 10 || k > 6) throw budget_exceeded("standard_monomial_count budget is d <= 10, k <= 6");
  long long nvars = static_cast<long long>(k) * m * m;
  mpz_class total = 0;
  for (int t = 0; t <= k; ++t) {
    long long rem = d - static_cast<long long>(t) * m;
    if (rem < 0) break;
    mpz_class ways = binom(static_cast<unsigned long>(rem + nvars - 1),
                           static_cast<unsigned long>(nvars - 1));
    total += (t % 2 == 0 ? 1 : -1) * binom(static_cast<unsigned long>(k), static_cast<unsigned long>(t)) * ways;
  }
  return total;
}

mpz_class degree(int m, int k) {
  mpz_class v;
  mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
  return v;
}

} // namespace truncdet
