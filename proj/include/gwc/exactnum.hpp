#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gwc {

using Integer = mpz_class;
using Rational = mpq_class;

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// canonical "p/q", or "p" when q = 1
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

Integer factorial(int n);
// generalized binomial n(n-1)...(n-k+1)/k!, any integer n, k >= 0
Rational binomial(int n, int k);
// multinomial (k_1 + ... + k_r)! / prod k_i!
Integer multinomial(const std::vector<int>& ks);
// 1 + 1/2 + ... + 1/n
Rational harmonic(int n);

// c_0..c_n with sum c_j z^j = (z/2)/sinh(z/2)
std::vector<Rational> c_coefficients(int n);

// (a)_b = a(a+1)...(a+b-1), b >= 0
Rational pochhammer(const Rational& a, int b);
// coefficients in a of (a)_b, lowest degree first
std::vector<Rational> pochhammer_poly(int b);
// d/da (a)_b at a0, no division involved
Rational pochhammer_derivative(const Rational& a0, int b);

enum class BinomialMode { value, derivative };
// binom(l, k) read as a degree-k polynomial in l, evaluated or differentiated at l0
Rational binomial_poly(const Rational& l0, int k, BinomialMode mode = BinomialMode::value);

// sums of products over a polynomial in one variable
Rational poly_eval(const std::vector<Rational>& coeffs, const Rational& x);

}  // namespace gwc
