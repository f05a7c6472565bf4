#pragma once

#include "gwc/exactnum.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace gwc {

// t0 <-> tau(1), t1 <-> tau(omega), s^i <-> tau(alpha_i), sbar^i <-> tau(beta_i)
enum class Family : std::uint8_t { t0 = 0, t1 = 1, s = 2, sbar = 3 };

struct FreeVariable {
  Family family = Family::t0;
  int index = 0;  // 0 for t0, t1
  int level = 0;

  bool odd() const { return family == Family::s || family == Family::sbar; }
  std::uint32_t code() const;
  static FreeVariable decode(std::uint32_t code);
  std::string to_string() const;
  auto operator<=>(const FreeVariable&) const = default;
};

inline bool code_is_odd(std::uint32_t c) { return (c >> 24) >= 2; }

// sorted multiset of variable codes; odd codes appear at most once
using Monomial = std::vector<std::uint32_t>;

Rational monomial_factorial(const Monomial& m);
std::string monomial_to_string(const Monomial& m);

class GrassmannPolynomial {
 public:
  GrassmannPolynomial() = default;
  static GrassmannPolynomial from_monomial(const Monomial& m, const Rational& c = 1);
  // product of variables in the given (possibly unsorted) order
  static GrassmannPolynomial from_product(const std::vector<FreeVariable>& vars, const Rational& c = 1);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  void add(const Monomial& m, const Rational& c);
  Rational coefficient(const Monomial& m) const;
  bool is_zero() const { return terms_.empty(); }

  GrassmannPolynomial& operator+=(const GrassmannPolynomial& o);
  GrassmannPolynomial& operator-=(const GrassmannPolynomial& o);
  GrassmannPolynomial& operator*=(const Rational& c);
  bool operator==(const GrassmannPolynomial& o) const { return terms_ == o.terms_; }
  std::string to_string() const;

 private:
  std::map<Monomial, Rational> terms_;
};

// c * mult[0] * ... * mult[p] * d/d deriv[0] ... d/d deriv[q], applied right to left
struct OpTerm {
  Rational coeff;
  std::vector<FreeVariable> mult;
  std::vector<FreeVariable> deriv;
};

class FormalOperator {
 public:
  FormalOperator() = default;
  void add(OpTerm t);
  FormalOperator& operator+=(const FormalOperator& o);
  FormalOperator& operator*=(const Rational& c);
  friend FormalOperator operator*(const Rational& c, FormalOperator op) { return op *= c; }
  friend FormalOperator operator+(FormalOperator a, const FormalOperator& b) { return a += b; }

  const std::vector<OpTerm>& terms() const { return terms_; }
  // terms whose first-applied derivative is the given variable
  const std::vector<std::size_t>* terms_for(std::uint32_t code) const;
  const std::vector<std::size_t>& pure_terms() const { return pure_; }

 private:
  std::vector<OpTerm> terms_;
  std::unordered_map<std::uint32_t, std::vector<std::size_t>> by_deriv_;
  std::vector<std::size_t> pure_;
};

// exact action with Grassmann signs
GrassmannPolynomial apply(const FormalOperator& op, const GrassmannPolynomial& p);
void apply_term(const OpTerm& t, const Monomial& m, const Rational& c, GrassmannPolynomial& out);

}  // namespace gwc
