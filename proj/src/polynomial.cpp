#include "truncdet/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace truncdet {

Polynomial Polynomial::constant(Scalar c) {
  Polynomial p(c.field());
  if (!c.is_zero()) p.terms_.push_back({Monomial(), std::move(c)});
  return p;
}

Polynomial Polynomial::variable(VarId v, FieldRef f) {
  Polynomial p(f);
  p.terms_.push_back({Monomial::variable(v), f.one()});
  return p;
}

Polynomial Polynomial::from_terms(FieldRef f, std::vector<Term> terms) {
  std::map<Monomial, Scalar, GrevlexGreater> acc;
  for (Term& t : terms) {
    if (t.coeff.field() != f)
      throw field_mismatch("term coefficient in " + t.coeff.field().name() + ", polynomial over " + f.name());
    auto [it, fresh] = acc.try_emplace(std::move(t.mono), t.coeff);
    if (!fresh) it->second += t.coeff;
  }
  Polynomial p(f);
  for (auto& [m, c] : acc)
    if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("leading monomial of the zero polynomial");
  return terms_.front().mono;
}

const Scalar& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
  return terms_.front().coeff;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(field_);
  p.terms_.reserve(terms_.size());
  for (const Term& t : terms_) p.terms_.push_back({t.mono, -t.coeff});
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (field_ != o.field_)
    throw field_mismatch("adding polynomials over " + field_.name() + " and " + o.field_.name());
  Polynomial p(field_);
  p.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    Cmp c = i == terms_.size()   ? Cmp::Less
            : j == o.terms_.size() ? Cmp::Greater
                                   : grevlex_cmp(terms_[i].mono, o.terms_[j].mono);
    if (c == Cmp::Greater)
      p.terms_.push_back(terms_[i++]);
    else if (c == Cmp::Less)
      p.terms_.push_back(o.terms_[j++]);
    else {
      Scalar s = terms_[i].coeff + o.terms_[j].coeff;
      if (!s.is_zero()) p.terms_.push_back({terms_[i].mono, std::move(s)});
      ++i, ++j;
    }
  }
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (field_ != o.field_)
    throw field_mismatch("multiplying polynomials over " + field_.name() + " and " + o.field_.name());
  std::map<Monomial, Scalar, GrevlexGreater> acc;
  for (const Term& a : terms_)
    for (const Term& b : o.terms_) {
      Monomial m = a.mono * b.mono;
      Scalar c = a.coeff * b.coeff;
      auto [it, fresh] = acc.try_emplace(std::move(m), c);
      if (!fresh) it->second += c;
    }
  Polynomial p(field_);
  for (auto& [m, c] : acc)
    if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (c.field() != field_)
    throw field_mismatch("scaling a polynomial over " + field_.name() + " by " + c.field().name());
  Polynomial p(field_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const Term& t : terms_) p.terms_.push_back({t.mono, t.coeff * c});
  return p;
}

Polynomial Polynomial::times_term(const Scalar& c, const Monomial& m) const {
  Polynomial p(field_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const Term& t : terms_) p.terms_.push_back({t.mono * m, t.coeff * c});
  return p;
}

Polynomial Polynomial::to_field(FieldRef f) const {
  Polynomial p(f);
  p.terms_.reserve(terms_.size());
  for (const Term& t : terms_) {
    Scalar c = t.coeff.to_field(f);
    if (!c.is_zero()) p.terms_.push_back({t.mono, std::move(c)});
  }
  return p;
}

Scalar Polynomial::eval(const Assignment& values) const {
  Scalar acc = field_.zero();
  for (const Term& t : terms_) {
    Scalar v = t.coeff;
    for (const auto& [var, e] : t.mono.factors()) {
      auto it = values.find(var);
      if (it == values.end()) throw std::invalid_argument("no value assigned to " + var_name(var));
      v *= it->second.pow(e);
    }
    acc += v;
  }
  return acc;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const Term& t : terms_) {
    Scalar c = t.coeff;
    if (s.empty()) {
      if (field_.is_rationals() && c.rational_value() < 0) {
        s += "-";
        c = -c;
      }
    } else {
      if (field_.is_rationals() && c.rational_value() < 0) {
        s += " - ";
        c = -c;
      } else {
        s += " + ";
      }
    }
    if (t.mono.is_one())
      s += c.to_string();
    else if (c.is_one())
      s += t.mono.to_string();
    else
      s += c.to_string() + "*" + t.mono.to_string();
  }
  return s;
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;
  FieldRef field;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("parse error at offset " + std::to_string(pos) + ": " + what);
  }

  long long integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected an integer");
    return std::stoll(s.substr(start, pos - start));
  }

  VarId var() {
    if (!eat('x') || !eat('[')) fail("expected a variable x[i,j,l]");
    int i = static_cast<int>(integer());
    if (!eat(',')) fail("expected ',' in variable");
    int j = static_cast<int>(integer());
    if (!eat(',')) fail("expected ',' in variable");
    int l = static_cast<int>(integer());
    if (!eat(']')) fail("expected ']' closing variable");
    return VarId{i, j, l};
  }

  // coefficient? factor (* factor)*, where coefficient is n or n/d
  Polynomial::Term term() {
    Scalar coeff = field.one();
    Monomial mono;
    bool saw_factor = false;
    skip_ws();
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      long long num = integer();
      mpq_class q(static_cast<long>(num));
      if (eat('/')) q /= static_cast<long>(integer());
      coeff = field.is_rationals() ? Scalar::rational(q) : field.from_mpq(q);
      saw_factor = true;
      if (!eat('*')) return {mono, coeff};
    }
    for (;;) {
      skip_ws();
      if (pos >= s.size() || s[pos] != 'x') {
        if (!saw_factor) fail("expected a term");
        break;
      }
      VarId v = var();
      std::uint32_t e = 1;
      if (eat('^')) e = static_cast<std::uint32_t>(integer());
      mono = mono * Monomial::variable(v, e);
      saw_factor = true;
      if (!eat('*')) break;
    }
    return {mono, coeff};
  }

  Polynomial parse() {
    std::vector<Polynomial::Term> terms;
    bool negative = eat('-');
    for (;;) {
      Polynomial::Term t = term();
      if (negative) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      skip_ws();
      if (pos >= s.size()) break;
      if (eat('+'))
        negative = false;
      else if (eat('-'))
        negative = true;
      else
        fail("expected '+' or '-' between terms");
    }
    return Polynomial::from_terms(field, std::move(terms));
  }
};

} // namespace

Polynomial Polynomial::parse(const std::string& text, FieldRef f) {
  Parser p{text, 0, f};
  return p.parse();
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.field_ != b.field_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

} // namespace truncdet
