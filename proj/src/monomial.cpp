#include "truncdet/monomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace truncdet {

int chain_cmp(VarId a, VarId b) {
  if (a.level != b.level) return a.level > b.level ? -1 : 1;
  if (a.row != b.row) return a.row < b.row ? -1 : 1;
  if (a.col != b.col) return a.col < b.col ? -1 : 1;
  return 0;
}

std::string var_name(VarId v) {
  return "x[" + std::to_string(v.row) + "," + std::to_string(v.col) + "," +
         std::to_string(v.level) + "]";
}

Monomial Monomial::variable(VarId v, std::uint32_t e) {
  Monomial m;
  if (e > 0) {
    m.f_.push_back({v, e});
    m.deg_ = static_cast<int>(e);
  }
  return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return chain_cmp(a.first, b.first) < 0; });
  Monomial m;
  for (const Factor& f : factors) {
    if (f.second == 0) continue;
    if (!m.f_.empty() && m.f_.back().first == f.first)
      m.f_.back().second += f.second;
    else
      m.f_.push_back(f);
    m.deg_ += static_cast<int>(f.second);
  }
  return m;
}

std::uint32_t Monomial::exponent(VarId v) const {
  for (const Factor& f : f_)
    if (f.first == v) return f.second;
  return 0;
}

bool Monomial::squarefree() const {
  for (const Factor& f : f_)
    if (f.second > 1) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  m.f_.reserve(f_.size() + o.f_.size());
  std::size_t i = 0, j = 0;
  while (i < f_.size() || j < o.f_.size()) {
    int c = i == f_.size() ? 1 : j == o.f_.size() ? -1 : chain_cmp(f_[i].first, o.f_[j].first);
    if (c < 0)
      m.f_.push_back(f_[i++]);
    else if (c > 0)
      m.f_.push_back(o.f_[j++]);
    else {
      m.f_.push_back({f_[i].first, f_[i].second + o.f_[j].second});
      ++i, ++j;
    }
  }
  m.deg_ = deg_ + o.deg_;
  return m;
}

bool Monomial::divides(const Monomial& o) const {
  std::size_t j = 0;
  for (const Factor& f : f_) {
    while (j < o.f_.size() && chain_cmp(o.f_[j].first, f.first) < 0) ++j;
    if (j == o.f_.size() || o.f_[j].first != f.first || o.f_[j].second < f.second) return false;
  }
  return true;
}

Monomial Monomial::divided_by(const Monomial& d) const {
  Monomial m;
  std::size_t j = 0;
  for (const Factor& f : f_) {
    std::uint32_t e = f.second;
    if (j < d.f_.size() && d.f_[j].first == f.first) {
      if (d.f_[j].second > e) throw std::invalid_argument("monomial quotient is not exact");
      e -= d.f_[j].second;
      ++j;
    }
    if (e > 0) {
      m.f_.push_back({f.first, e});
      m.deg_ += static_cast<int>(e);
    }
  }
  if (j < d.f_.size()) throw std::invalid_argument("monomial quotient is not exact");
  return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  std::size_t i = 0, j = 0;
  while (i < a.f_.size() || j < b.f_.size()) {
    int c = i == a.f_.size() ? 1 : j == b.f_.size() ? -1 : chain_cmp(a.f_[i].first, b.f_[j].first);
    Factor f = c < 0 ? a.f_[i++] : c > 0 ? b.f_[j++] : Factor{a.f_[i].first, std::max(a.f_[i].second, b.f_[j].second)};
    if (c == 0) ++i, ++j;
    m.f_.push_back(f);
    m.deg_ += static_cast<int>(f.second);
  }
  return m;
}

bool Monomial::coprime_with(const Monomial& o) const {
  std::size_t i = 0, j = 0;
  while (i < f_.size() && j < o.f_.size()) {
    int c = chain_cmp(f_[i].first, o.f_[j].first);
    if (c == 0) return false;
    c < 0 ? ++i : ++j;
  }
  return true;
}

std::string Monomial::to_string() const {
  if (f_.empty()) return "1";
  // display factors by ascending (row, col, level), independent of the
  // chain order used internally
  std::vector<Factor> disp(f_);
  std::sort(disp.begin(), disp.end(), [](const Factor& a, const Factor& b) {
    return std::tie(a.first.row, a.first.col, a.first.level) <
           std::tie(b.first.row, b.first.col, b.first.level);
  });
  std::string s;
  for (const Factor& f : disp) {
    if (!s.empty()) s += "*";
    s += var_name(f.first);
    if (f.second > 1) s += "^" + std::to_string(f.second);
  }
  return s;
}

Cmp grevlex_cmp(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? Cmp::Greater : Cmp::Less;
  // Equal degree: find the chain-last variable where the exponents differ;
  // the monomial with the smaller exponent there is the larger one.
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  auto ia = fa.rbegin();
  auto ib = fb.rbegin();
  while (ia != fa.rend() || ib != fb.rend()) {
    if (ia == fa.rend()) return Cmp::Greater; // b alone occupies the chain-latest slot
    if (ib == fb.rend()) return Cmp::Less;
    int c = chain_cmp(ia->first, ib->first);
    if (c > 0) return Cmp::Less;  // a's variable sits later in the chain
    if (c < 0) return Cmp::Greater;
    if (ia->second != ib->second) return ia->second > ib->second ? Cmp::Less : Cmp::Greater;
    ++ia, ++ib;
  }
  return Cmp::Equal;
}

} // namespace truncdet
