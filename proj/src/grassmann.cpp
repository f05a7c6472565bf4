#include "gwc/grassmann.hpp"

#include <algorithm>

namespace gwc {

std::uint32_t FreeVariable::code() const {
  if (level < 0 || level > 0xFFFF || index < 0 || index > 0xFF) throw DomainError("variable out of range");
  return (static_cast<std::uint32_t>(family) << 24) | (static_cast<std::uint32_t>(index) << 16) |
         static_cast<std::uint32_t>(level);
}

FreeVariable FreeVariable::decode(std::uint32_t code) {
  return FreeVariable{static_cast<Family>(code >> 24), static_cast<int>((code >> 16) & 0xFF),
                      static_cast<int>(code & 0xFFFF)};
}

std::string FreeVariable::to_string() const {
  switch (family) {
    case Family::t0:
      return "t0_" + std::to_string(level);
    case Family::t1:
      return "t1_" + std::to_string(level);
    case Family::s:
      return "s" + std::to_string(index) + "_" + std::to_string(level);
    case Family::sbar:
      return "sbar" + std::to_string(index) + "_" + std::to_string(level);
  }
  return "?";
}

Rational monomial_factorial(const Monomial& m) {
  Integer r = 1;
  std::size_t i = 0;
  while (i < m.size()) {
    std::size_t j = i;
    while (j < m.size() && m[j] == m[i]) ++j;
    r *= factorial(static_cast<int>(j - i));
    i = j;
  }
  return Rational(r);
}

std::string monomial_to_string(const Monomial& m) {
  if (m.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += "*";
    s += FreeVariable::decode(m[i]).to_string();
  }
  return s;
}

namespace {

// number of odd codes in m strictly below c
int odd_below(const Monomial& m, std::uint32_t c) {
  int n = 0;
  for (std::uint32_t x : m) {
    if (x >= c) break;
    if (code_is_odd(x)) ++n;
  }
  return n;
}

// left multiplication by a variable; returns false when the product vanishes
bool multiply_left(Monomial& m, std::uint32_t c, Rational& coef) {
  auto pos = std::lower_bound(m.begin(), m.end(), c);
  if (code_is_odd(c)) {
    if (pos != m.end() && *pos == c) return false;
    if (odd_below(m, c) % 2) coef = -coef;
  }
  m.insert(pos, c);
  return true;
}

bool differentiate(Monomial& m, std::uint32_t c, Rational& coef) {
  auto lo = std::lower_bound(m.begin(), m.end(), c);
  if (lo == m.end() || *lo != c) return false;
  if (code_is_odd(c)) {
    if (odd_below(m, c) % 2) coef = -coef;
  } else {
    auto hi = std::upper_bound(lo, m.end(), c);
    coef *= static_cast<long>(hi - lo);
  }
  m.erase(lo);
  return true;
}

}  // namespace

GrassmannPolynomial GrassmannPolynomial::from_monomial(const Monomial& m, const Rational& c) {
  GrassmannPolynomial p;
  p.add(m, c);
  return p;
}

GrassmannPolynomial GrassmannPolynomial::from_product(const std::vector<FreeVariable>& vars, const Rational& c) {
  Monomial m;
  Rational coef = c;
  for (auto it = vars.rbegin(); it != vars.rend(); ++it)
    if (!multiply_left(m, it->code(), coef)) return {};
  return from_monomial(m, coef);
}

void GrassmannPolynomial::add(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational GrassmannPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

GrassmannPolynomial& GrassmannPolynomial::operator+=(const GrassmannPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

GrassmannPolynomial& GrassmannPolynomial::operator-=(const GrassmannPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

GrassmannPolynomial& GrassmannPolynomial::operator*=(const Rational& c) {
  if (c == 0) terms_.clear();
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

std::string GrassmannPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) s += " + ";
    first = false;
    s += gwc::to_string(c) + "*" + monomial_to_string(m);
  }
  return s;
}

void FormalOperator::add(OpTerm t) {
  if (t.coeff == 0) return;
  std::size_t idx = terms_.size();
  if (t.deriv.empty()) pure_.push_back(idx);
  else by_deriv_[t.deriv.back().code()].push_back(idx);
  terms_.push_back(std::move(t));
}

FormalOperator& FormalOperator::operator+=(const FormalOperator& o) {
  for (const auto& t : o.terms_) add(t);
  return *this;
}

FormalOperator& FormalOperator::operator*=(const Rational& c) {
  if (c == 0) {
    *this = FormalOperator();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

const std::vector<std::size_t>* FormalOperator::terms_for(std::uint32_t code) const {
  auto it = by_deriv_.find(code);
  return it == by_deriv_.end() ? nullptr : &it->second;
}

void apply_term(const OpTerm& t, const Monomial& m, const Rational& c, GrassmannPolynomial& out) {
  Monomial r = m;
  Rational coef = c * t.coeff;
  for (auto it = t.deriv.rbegin(); it != t.deriv.rend(); ++it)
    if (!differentiate(r, it->code(), coef)) return;
  for (auto it = t.mult.rbegin(); it != t.mult.rend(); ++it)
    if (!multiply_left(r, it->code(), coef)) return;
  out.add(r, coef);
}

GrassmannPolynomial apply(const FormalOperator& op, const GrassmannPolynomial& p) {
  GrassmannPolynomial out;
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t idx : op.pure_terms()) apply_term(op.terms()[idx], m, c, out);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i > 0 && m[i] == m[i - 1]) continue;
      if (const auto* list = op.terms_for(m[i]))
        for (std::size_t idx : *list) apply_term(op.terms()[idx], m, c, out);
    }
  }
  return out;
}

}  // namespace gwc
