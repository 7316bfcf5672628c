#pragma once

#include <cstdint>
#include <vector>

#include "truncdet/polynomial.hpp"

namespace truncdet {

/// Limits on the division/S-pair machinery. Exceeding a cap never yields a
/// wrong verdict; it yields Inconclusive.
struct ReductionCaps {
  std::uint64_t max_steps = 1'000'000;
  std::size_t max_terms = 4'000'000;
};

enum class CheckStatus { Verified, Failed, Inconclusive };

struct DivisionResult {
  Polynomial remainder;
  std::vector<Polynomial> quotients; // one per divisor, f = sum q_i g_i + remainder
  bool complete;                     // false iff a cap was hit
  std::uint64_t steps;
};

/// Multivariate division of f by the ordered list gens. When several lead
/// monomials divide the current term the divisor with the smallest index
/// wins (deterministic normal forms).
DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& gens,
                      const ReductionCaps& caps = {});

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Closed form for lm(d_{lambda*m+mu}): the level-lambda antidiagonal of the
/// leading (m-mu) x (m-mu) block times the level-(lambda+1) antidiagonal of
/// the trailing mu x mu block.
Monomial lm_formula(int m, int k, int index);

CheckStatus spair_reduce_check(const std::vector<Polynomial>& gens, const ReductionCaps& caps = {});

bool squarefree_lead_check(const std::vector<Polynomial>& gens);

struct BuchbergerResult {
  std::vector<Polynomial> basis;
  std::size_t added; // elements appended beyond the input
  bool complete;
};

/// Buchberger completion for tiny inputs; monic normal forms are appended
/// until all S-pairs reduce to zero or a cap trips.
BuchbergerResult buchberger_complete(std::vector<Polynomial> gens, const ReductionCaps& caps = {});

struct GBReport {
  int m = 0;
  int k = 0;
  std::vector<bool> lm_matches_formula; // per d_i
  bool pairwise_coprime = false;
  CheckStatus spairs_reduce_to_zero = CheckStatus::Inconclusive;
  bool lead_terms_squarefree = false;

  bool verified() const;
  bool inconclusive() const { return spairs_reduce_to_zero == CheckStatus::Inconclusive; }
};

/// Leading-monomial half of the Groebner verification: lm(d_i) against the
/// closed form, and pairwise coprimality of the lead monomials.
GBReport verify_lm(int m, int k);

/// Full verification for d_0..d_{k-1} over Q.
GBReport gb_check(int m, int k, const ReductionCaps& caps = {});

} // namespace truncdet
