#include "truncdet/groebner.hpp"

#include <stdexcept>

#include "truncdet/ideal.hpp"

namespace truncdet {

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& gens,
                      const ReductionCaps& caps) {
  for (const Polynomial& g : gens)
    if (g.is_zero()) throw std::invalid_argument("division by a zero generator");

  FieldRef field = f.field();
  DivisionResult out{Polynomial::zero(field), {}, true, 0};
  out.quotients.assign(gens.size(), Polynomial::zero(field));
  std::vector<Polynomial::Term> rem;

  Polynomial h = f;
  while (!h.is_zero()) {
    if (out.steps >= caps.max_steps || h.term_count() > caps.max_terms) {
      out.complete = false;
      break;
    }
    ++out.steps;
    const Monomial& t = h.leading_monomial();
    std::size_t idx = gens.size();
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (gens[i].leading_monomial().divides(t)) {
        idx = i;
        break;
      }
    if (idx == gens.size()) {
      rem.push_back({t, h.leading_coefficient()});
      h -= Polynomial::from_terms(field, {{t, h.leading_coefficient()}});
    } else {
      Scalar c = h.leading_coefficient() / gens[idx].leading_coefficient();
      Monomial q = t.divided_by(gens[idx].leading_monomial());
      h -= gens[idx].times_term(c, q);
      out.quotients[idx] += Polynomial::from_terms(field, {{q, c}});
    }
  }
  out.remainder = Polynomial::from_terms(field, std::move(rem)) + h; // h nonzero only on cap exit
  return out;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = f.times_term(f.leading_coefficient().inverse(), l.divided_by(f.leading_monomial()));
  Polynomial b = g.times_term(g.leading_coefficient().inverse(), l.divided_by(g.leading_monomial()));
  return a - b;
}

Monomial lm_formula(int m, int k, int index) {
  if (m < 1 || k < 1 || index < 0 || index >= k)
    throw std::invalid_argument("index must lie in 0..k-1");
  int lambda = index / m, mu = index % m;
  std::vector<Monomial::Factor> f;
  for (int i = 1; i <= m - mu; ++i) f.push_back({VarId{i, m - mu + 1 - i, lambda}, 1});
  for (int j = 1; j <= mu; ++j) f.push_back({VarId{m - mu + j, m - j + 1, lambda + 1}, 1});
  return Monomial::from_factors(std::move(f));
}

CheckStatus spair_reduce_check(const std::vector<Polynomial>& gens, const ReductionCaps& caps) {
  bool all_complete = true;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      DivisionResult d = divide(s_polynomial(gens[i], gens[j]), gens, caps);
      if (d.complete && !d.remainder.is_zero()) return CheckStatus::Failed;
      all_complete = all_complete && d.complete;
    }
  return all_complete ? CheckStatus::Verified : CheckStatus::Inconclusive;
}

bool squarefree_lead_check(const std::vector<Polynomial>& gens) {
  for (const Polynomial& g : gens)
    if (!g.leading_monomial().squarefree()) return false;
  return true;
}

BuchbergerResult buchberger_complete(std::vector<Polynomial> gens, const ReductionCaps& caps) {
  BuchbergerResult out{std::move(gens), 0, true};
  std::vector<std::pair<std::size_t, std::size_t>> queue;
  for (std::size_t i = 0; i < out.basis.size(); ++i)
    for (std::size_t j = i + 1; j < out.basis.size(); ++j) queue.push_back({i, j});

  constexpr std::size_t kMaxAdded = 256;
  while (!queue.empty()) {
    auto [i, j] = queue.back();
    queue.pop_back();
    DivisionResult d = divide(s_polynomial(out.basis[i], out.basis[j]), out.basis, caps);
    if (!d.complete) {
      out.complete = false;
      return out;
    }
    if (d.remainder.is_zero()) continue;
    Polynomial nf = d.remainder.scaled(d.remainder.leading_coefficient().inverse());
    out.basis.push_back(nf);
    ++out.added;
    if (out.added > kMaxAdded) {
      out.complete = false;
      return out;
    }
    for (std::size_t a = 0; a + 1 < out.basis.size(); ++a) queue.push_back({a, out.basis.size() - 1});
  }
  return out;
}

bool GBReport::verified() const {
  for (bool b : lm_matches_formula)
    if (!b) return false;
  return pairwise_coprime && lead_terms_squarefree && spairs_reduce_to_zero == CheckStatus::Verified;
}

GBReport verify_lm(int m, int k) {
  GBReport rep;
  rep.m = m;
  rep.k = k;
  std::vector<Polynomial> d = det_coefficients(m, k);
  for (int i = 0; i < k; ++i)
    rep.lm_matches_formula.push_back(d[static_cast<std::size_t>(i)].leading_monomial() == lm_formula(m, k, i));
  rep.pairwise_coprime = true;
  for (int i = 0; i < k && rep.pairwise_coprime; ++i)
    for (int j = i + 1; j < k; ++j)
      if (!d[static_cast<std::size_t>(i)].leading_monomial().coprime_with(
              d[static_cast<std::size_t>(j)].leading_monomial())) {
        rep.pairwise_coprime = false;
        break;
      }
  return rep;
}

GBReport gb_check(int m, int k, const ReductionCaps& caps) {
  GBReport rep = verify_lm(m, k);
  std::vector<Polynomial> d = det_coefficients(m, k);
  rep.spairs_reduce_to_zero = spair_reduce_check(d, caps);
  rep.lead_terms_squarefree = squarefree_lead_check(d);
  return rep;
}

} // namespace truncdet
