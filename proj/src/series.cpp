#include "gwc/series.hpp"

#include <sstream>

namespace gwc {

namespace {
constexpr int kIterationGuard = 4096;
}

TruncatedSeries::TruncatedSeries(std::vector<SeriesVar> vars) : vars_(std::move(vars)) {
  for (const auto& v : vars_)
    if (v.lo > v.hi) throw ConfigError("series variable " + v.name + " has empty window");
}

TruncatedSeries TruncatedSeries::constant(std::vector<SeriesVar> vars, const Rational& c) {
  TruncatedSeries s(std::move(vars));
  s.add_term(Exponents(s.vars_.size(), 0), c);
  return s;
}

TruncatedSeries TruncatedSeries::variable(std::vector<SeriesVar> vars, std::size_t index) {
  TruncatedSeries s(std::move(vars));
  if (index >= s.vars_.size()) throw ConfigError("series variable index out of range");
  Exponents e(s.vars_.size(), 0);
  e[index] = 1;
  s.add_term(e, 1);
  return s;
}

TruncatedSeries TruncatedSeries::monomial(std::vector<SeriesVar> vars, const Exponents& e,
                                          const Rational& c) {
  TruncatedSeries s(std::move(vars));
  if (e.size() != s.vars_.size()) throw ConfigError("exponent vector has wrong length");
  s.add_term(e, c);
  return s;
}

TruncatedSeries TruncatedSeries::univariate(std::vector<SeriesVar> vars, std::size_t index,
                                            const std::vector<Rational>& coeffs, int shift) {
  TruncatedSeries s(std::move(vars));
  if (index >= s.vars_.size()) throw ConfigError("series variable index out of range");
  Exponents e(s.vars_.size(), 0);
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    e[index] = static_cast<int>(n) + shift;
    s.add_term(e, coeffs[n]);
  }
  return s;
}

std::size_t TruncatedSeries::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  throw ConfigError("unknown series variable " + name);
}

bool TruncatedSeries::in_window(const Exponents& e) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (e[i] < vars_[i].lo || e[i] > vars_[i].hi) return false;
  return true;
}

Rational TruncatedSeries::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TruncatedSeries::add_term(const Exponents& e, const Rational& c) {
  if (c == 0 || !in_window(e)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational TruncatedSeries::constant_term() const { return coefficient(Exponents(vars_.size(), 0)); }

void TruncatedSeries::check_compatible(const TruncatedSeries& o) const {
  if (vars_ != o.vars_) throw ConfigError("incompatible series variables or caps");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.check_compatible(b);
  TruncatedSeries r(a.vars_);
  Exponents e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r(*this);
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

TruncatedSeries TruncatedSeries::power_sum(const std::vector<Rational>& f, const char* what) const {
  if (constant_term() != 0) throw DomainError(std::string(what) + ": nonzero constant term");
  TruncatedSeries result = constant(vars_, f.empty() ? Rational(0) : f[0]);
  TruncatedSeries pw = constant(vars_, 1);
  for (std::size_t n = 1; n < f.size(); ++n) {
    pw = pw * *this;
    if (pw.is_zero()) return result;
    result += pw * f[n];
  }
  return result;
}

TruncatedSeries TruncatedSeries::compose(const std::vector<Rational>& f) const {
  return power_sum(f, "compose");
}

TruncatedSeries TruncatedSeries::exp() const {
  if (constant_term() != 0) throw DomainError("exp: nonzero constant term");
  TruncatedSeries result = constant(vars_, 1);
  TruncatedSeries pw = constant(vars_, 1);
  for (int n = 1; n <= kIterationGuard; ++n) {
    pw = pw * *this * Rational(1, n);
    if (pw.is_zero()) return result;
    result += pw;
  }
  throw DomainError("exp: series does not terminate within its caps");
}

TruncatedSeries TruncatedSeries::log() const {
  if (constant_term() != 1) throw DomainError("log: constant term must be 1");
  TruncatedSeries b = *this - constant(vars_, 1);
  TruncatedSeries result(vars_);
  TruncatedSeries pw = constant(vars_, 1);
  for (int n = 1; n <= kIterationGuard; ++n) {
    pw = pw * b;
    if (pw.is_zero()) return result;
    result += pw * Rational(n % 2 == 1 ? 1 : -1, n);
  }
  throw DomainError("log: series does not terminate within its caps");
}

TruncatedSeries TruncatedSeries::pow(const TruncatedSeries& exponent) const {
  check_compatible(exponent);
  return (exponent * log()).exp();
}

std::string TruncatedSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << gwc::to_string(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      out << "*" << vars_[i].name;
      if (e[i] != 1) out << "^" << e[i];
    }
  }
  return out.str();
}

TruncatedSeries series_exp_log(const TruncatedSeries& a, SeriesOp mode, const TruncatedSeries* exponent) {
  switch (mode) {
    case SeriesOp::exp:
      return a.exp();
    case SeriesOp::log:
      return a.log();
    case SeriesOp::power:
      if (!exponent) throw DomainError("power: missing exponent");
      return a.pow(*exponent);
  }
  throw DomainError("unknown series operation");
}

TruncatedSeries series_multiply(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

namespace univariate {

std::vector<Rational> exp_linear(const Rational& c, int order) {
  std::vector<Rational> r(order + 1);
  Rational term = 1;
  for (int n = 0; n <= order; ++n) {
    r[n] = term;
    term *= c;
    term /= n + 1;
  }
  return r;
}

std::vector<Rational> varsigma(int order) {
  // 2 sinh(z/2) = sum_{n odd} z^n / (2^{n-1} n!)
  std::vector<Rational> r(order + 1, Rational(0));
  for (int n = 1; n <= order; n += 2) {
    Integer two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(n - 1));
    r[n] = Rational(1) / Rational(two_pow * factorial(n));
  }
  return r;
}

std::vector<Rational> S(int order) {
  auto v = varsigma(order + 1);
  return std::vector<Rational>(v.begin() + 1, v.end());
}

std::vector<Rational> mul(const std::vector<Rational>& a, const std::vector<Rational>& b, int order) {
  std::vector<Rational> r(order + 1, Rational(0));
  for (std::size_t i = 0; i < a.size() && static_cast<int>(i) <= order; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && static_cast<int>(i + j) <= order; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

std::vector<Rational> pow_int(const std::vector<Rational>& a, int n, int order) {
  if (n < 0) throw DomainError("pow_int: negative exponent");
  std::vector<Rational> r(order + 1, Rational(0));
  r[0] = 1;
  for (int i = 0; i < n; ++i) r = mul(r, a, order);
  return r;
}

std::vector<Rational> inverse(const std::vector<Rational>& a, int order) {
  if (a.empty() || a[0] == 0) throw DomainError("inverse: zero constant term");
  std::vector<Rational> r(order + 1, Rational(0));
  r[0] = Rational(1) / a[0];
  for (int n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (int j = 1; j <= n && j < static_cast<int>(a.size()); ++j) acc += a[j] * r[n - j];
    r[n] = -acc / a[0];
  }
  return r;
}

std::vector<Rational> log1p_of(const std::vector<Rational>& a, int order) {
  if (a.empty() || a[0] != 1) throw DomainError("log: constant term must be 1");
  // (log a)' = a'/a
  std::vector<Rational> da(order + 1, Rational(0));
  for (int n = 1; n <= order + 1 && n < static_cast<int>(a.size()); ++n) da[n - 1] = a[n] * n;
  auto q = mul(da, inverse(a, order), order);
  std::vector<Rational> r(order + 1, Rational(0));
  for (int n = 1; n <= order; ++n) r[n] = q[n - 1] / n;
  return r;
}

}  // namespace univariate

}  // namespace gwc
