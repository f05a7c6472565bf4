#include "gwc/exactnum.hpp"

#include <mutex>

namespace gwc {

std::string to_string(const Rational& q) {
  Rational r(q);
  r.canonicalize();
  return r.get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw DomainError("empty rational");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool slash = false;
  bool digit_seen = false;
  for (std::size_t i = start; i < s.size(); ++i) {
    char c = s[i];
    if (c == '/') {
      if (slash || !digit_seen || i + 1 == s.size()) throw DomainError("malformed rational: " + s);
      slash = true;
      digit_seen = false;
    } else if (c < '0' || c > '9') {
      throw DomainError("malformed rational: " + s);
    } else {
      digit_seen = true;
    }
  }
  if (!digit_seen) throw DomainError("malformed rational: " + s);
  if (s[0] == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0) throw DomainError("malformed rational: " + s);
  if (r.get_den() == 0) throw DomainError("zero denominator: " + s);
  r.canonicalize();
  return r;
}

Integer factorial(int n) {
  if (n < 0) throw DomainError("factorial of negative integer");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Rational binomial(int n, int k) {
  if (k < 0) return 0;
  Rational num = 1;
  for (int j = 0; j < k; ++j) num *= (n - j);
  return num / Rational(factorial(k));
}

Integer multinomial(const std::vector<int>& ks) {
  int total = 0;
  for (int k : ks) {
    if (k < 0) return 0;
    total += k;
  }
  Integer r = factorial(total);
  for (int k : ks) r /= factorial(k);
  return r;
}

Rational harmonic(int n) {
  Rational h = 0;
  for (int r = 1; r <= n; ++r) h += Rational(1, r);
  return h;
}

namespace {
std::mutex c_mutex;
std::vector<Rational> c_cache{Rational(1)};
}  // namespace

std::vector<Rational> c_coefficients(int n) {
  if (n < 0) throw DomainError("c_coefficients: negative order");
  std::lock_guard<std::mutex> lock(c_mutex);
  // sinh(z/2)/(z/2) = sum_m z^{2m} / (4^m (2m+1)!); invert the series
  while (static_cast<int>(c_cache.size()) <= n) {
    int j = static_cast<int>(c_cache.size());
    Rational acc = 0;
    for (int m = 1; 2 * m <= j; ++m) {
      Rational s(1);
      s /= Rational(factorial(2 * m + 1));
      Integer four_m;
      mpz_ui_pow_ui(four_m.get_mpz_t(), 4, static_cast<unsigned long>(m));
      s /= Rational(four_m);
      acc += s * c_cache[j - 2 * m];
    }
    c_cache.push_back(-acc);
  }
  return std::vector<Rational>(c_cache.begin(), c_cache.begin() + n + 1);
}

Rational pochhammer(const Rational& a, int b) {
  if (b < 0) throw DomainError("pochhammer: negative length");
  Rational r = 1;
  for (int j = 0; j < b; ++j) r *= a + j;
  return r;
}

std::vector<Rational> pochhammer_poly(int b) {
  if (b < 0) throw DomainError("pochhammer: negative length");
  std::vector<Rational> p{Rational(1)};
  for (int j = 0; j < b; ++j) {
    std::vector<Rational> q(p.size() + 1, Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i] += p[i] * j;
      q[i + 1] += p[i];
    }
    p = std::move(q);
  }
  return p;
}

Rational pochhammer_derivative(const Rational& a0, int b) {
  if (b < 0) throw DomainError("pochhammer: negative length");
  Rational total = 0;
  for (int i = 0; i < b; ++i) {
    Rational prod = 1;
    for (int j = 0; j < b; ++j)
      if (j != i) prod *= a0 + j;
    total += prod;
  }
  return total;
}

Rational binomial_poly(const Rational& l0, int k, BinomialMode mode) {
  if (k < 0) throw DomainError("binomial_poly: negative k");
  Rational kf(factorial(k));
  if (mode == BinomialMode::value) {
    Rational prod = 1;
    for (int j = 0; j < k; ++j) prod *= l0 - j;
    return prod / kf;
  }
  Rational total = 0;
  for (int i = 0; i < k; ++i) {
    Rational prod = 1;
    for (int j = 0; j < k; ++j)
      if (j != i) prod *= l0 - j;
    total += prod;
  }
  return total / kf;
}

Rational poly_eval(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational r = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * x + *it;
  return r;
}

}  // namespace gwc
