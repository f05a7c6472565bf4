#pragma once

#include "gwc/exactnum.hpp"

#include <map>
#include <string>
#include <vector>

namespace gwc {

// A variable with its retained exponent window [lo, hi]. lo < 0 marks a Laurent variable.
struct SeriesVar {
  std::string name;
  int lo = 0;
  int hi = 0;
  bool operator==(const SeriesVar&) const = default;
};

using Exponents = std::vector<int>;

class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(std::vector<SeriesVar> vars);

  static TruncatedSeries constant(std::vector<SeriesVar> vars, const Rational& c);
  static TruncatedSeries variable(std::vector<SeriesVar> vars, std::size_t index);
  static TruncatedSeries monomial(std::vector<SeriesVar> vars, const Exponents& e, const Rational& c);
  // univariate data f(x) = sum_n coeffs[n] x^{n + shift} placed in variable `index`
  static TruncatedSeries univariate(std::vector<SeriesVar> vars, std::size_t index,
                                    const std::vector<Rational>& coeffs, int shift = 0);

  const std::vector<SeriesVar>& vars() const { return vars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  std::size_t index_of(const std::string& name) const;

  bool in_window(const Exponents& e) const;
  Rational coefficient(const Exponents& e) const;
  void add_term(const Exponents& e, const Rational& c);
  bool is_zero() const { return terms_.empty(); }
  Rational constant_term() const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const Rational& c);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }
  friend TruncatedSeries operator*(const Rational& c, TruncatedSeries a) { return a *= c; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  TruncatedSeries operator-() const;
  bool operator==(const TruncatedSeries& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

  TruncatedSeries exp() const;
  TruncatedSeries log() const;
  TruncatedSeries pow(const TruncatedSeries& exponent) const;
  // sum_n f[n] * this^n for a power series f; requires zero constant term
  TruncatedSeries compose(const std::vector<Rational>& f) const;

  std::string to_string() const;

 private:
  void check_compatible(const TruncatedSeries& o) const;
  TruncatedSeries power_sum(const std::vector<Rational>& f, const char* what) const;

  std::vector<SeriesVar> vars_;
  std::map<Exponents, Rational> terms_;
};

enum class SeriesOp { exp, log, power };
// dispatcher matching the exp|log|power(exponent) contract
TruncatedSeries series_exp_log(const TruncatedSeries& a, SeriesOp mode,
                               const TruncatedSeries* exponent = nullptr);
TruncatedSeries series_multiply(const TruncatedSeries& a, const TruncatedSeries& b);

// univariate coefficient lists, index n holds the coefficient of z^n unless stated
namespace univariate {
std::vector<Rational> exp_linear(const Rational& c, int order);      // e^{cz}
std::vector<Rational> varsigma(int order);                           // e^{z/2} - e^{-z/2}
std::vector<Rational> S(int order);                                  // varsigma(z)/z
std::vector<Rational> mul(const std::vector<Rational>& a, const std::vector<Rational>& b, int order);
std::vector<Rational> pow_int(const std::vector<Rational>& a, int n, int order);  // n >= 0
std::vector<Rational> inverse(const std::vector<Rational>& a, int order);         // a[0] != 0
std::vector<Rational> log1p_of(const std::vector<Rational>& a, int order);        // log(a), a[0] = 1
}  // namespace univariate

}  // namespace gwc
