#include "gwc/exactnum.hpp"
#include "gwc/series.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace gwc;

namespace {

std::vector<SeriesVar> z_only(int lo, int hi) { return {{"z", lo, hi}}; }

}  // namespace

TEST(Rational, CanonicalStrings) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-4/2")), "-2");
  EXPECT_EQ(to_string(parse_rational("0")), "0");
  EXPECT_EQ(to_string(Rational(-1, 24)), "-1/24");
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("1/"), DomainError);
  EXPECT_THROW(parse_rational("abc"), DomainError);
  EXPECT_THROW(parse_rational(""), DomainError);
}

TEST(Rational, IntegerHelpers) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(6), 720);
  EXPECT_EQ(multinomial({1, 1}), 2);
  EXPECT_EQ(multinomial({2, 1, 1}), 12);
  EXPECT_EQ(harmonic(3), Rational(11, 6));
  EXPECT_THROW(factorial(-1), DomainError);
}

TEST(Series, PolynomialProduct) {
  auto vars = z_only(0, 4);
  auto one = TruncatedSeries::constant(vars, 1);
  auto z = TruncatedSeries::variable(vars, 0);
  auto p = (one + z) * (one - z);
  auto expected = one - z * z;
  EXPECT_EQ(p, expected);
}

TEST(Series, ExpTimesExpNegative) {
  auto vars = z_only(0, 8);
  auto z = TruncatedSeries::variable(vars, 0);
  auto p = z.exp() * (-z).exp();
  EXPECT_EQ(p, TruncatedSeries::constant(vars, 1));
}

TEST(Series, LaurentCancellation) {
  auto vars = z_only(-1, 3);
  auto inv = TruncatedSeries::monomial(vars, {-1}, 1);
  auto z = TruncatedSeries::variable(vars, 0);
  EXPECT_EQ(inv * z, TruncatedSeries::constant(vars, 1));
}

TEST(Series, ExpOfZeroAndMercator) {
  auto vars = z_only(0, 6);
  EXPECT_EQ(TruncatedSeries(vars).exp(), TruncatedSeries::constant(vars, 1));
  auto l = (TruncatedSeries::constant(vars, 1) + TruncatedSeries::variable(vars, 0)).log();
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(l.coefficient({n}), Rational(n % 2 ? 1 : -1, n)) << n;
  EXPECT_EQ(l.coefficient({0}), 0);
}

TEST(Series, PreconditionErrors) {
  auto vars = z_only(0, 3);
  auto one = TruncatedSeries::constant(vars, 1);
  EXPECT_THROW(one.exp(), DomainError);
  EXPECT_THROW(TruncatedSeries(vars).log(), DomainError);
  EXPECT_THROW(series_exp_log(one, SeriesOp::power), DomainError);
}

TEST(Series, PowerOfS) {
  // S(z)^{tz}; log S(z) = z^2/24 - z^4/2880 + ...
  std::vector<SeriesVar> vars{{"t", 0, 1}, {"z", 0, 5}};
  auto S = TruncatedSeries::univariate(vars, 1, univariate::S(5));
  auto tz = TruncatedSeries::monomial(vars, {1, 1}, 1);
  auto p = series_exp_log(S, SeriesOp::power, &tz);
  EXPECT_EQ(p.coefficient({0, 0}), 1);
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(p.coefficient({0, n}), 0);
  EXPECT_EQ(p.coefficient({1, 1}), 0);
  EXPECT_EQ(p.coefficient({1, 2}), 0);
  EXPECT_EQ(p.coefficient({1, 3}), Rational(1, 24));
  EXPECT_EQ(p.coefficient({1, 4}), 0);
  EXPECT_EQ(p.coefficient({1, 5}), Rational(-1, 2880));
}

TEST(Series, ProductMatchesDenseConvolution) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-5, 5);
  const int cap = 6;
  std::vector<SeriesVar> vars{{"x", 0, cap}, {"y", 0, cap}};
  for (int trial = 0; trial < 20; ++trial) {
    int a[7][7], b[7][7];
    TruncatedSeries A(vars), B(vars);
    for (int i = 0; i <= cap; ++i)
      for (int j = 0; j <= cap; ++j) {
        a[i][j] = i + j <= 6 ? coef(rng) : 0;
        b[i][j] = i + j <= 6 ? coef(rng) : 0;
        if (a[i][j]) A.add_term({i, j}, a[i][j]);
        if (b[i][j]) B.add_term({i, j}, b[i][j]);
      }
    auto C = series_multiply(A, B);
    for (int i = 0; i <= cap; ++i)
      for (int j = 0; j <= cap; ++j) {
        long s = 0;
        for (int p = 0; p <= i; ++p)
          for (int q = 0; q <= j; ++q) s += static_cast<long>(a[p][q]) * b[i - p][j - q];
        EXPECT_EQ(C.coefficient({i, j}), Rational(s)) << i << "," << j;
      }
  }
}

TEST(Constants, SinhCoefficients) {
  auto c = c_coefficients(20);
  EXPECT_EQ(c[0], 1);
  EXPECT_EQ(c[1], 0);
  EXPECT_EQ(c[2], Rational(-1, 24));
  EXPECT_EQ(c[3], 0);
  EXPECT_EQ(c[4], Rational(7, 5760));
  // sinh(z/2) * C(z) = z/2
  std::vector<Rational> sinh(21);
  for (int n = 1; n <= 20; n += 2) sinh[n] = Rational(1) / (Rational(Integer(1) << n) * factorial(n));
  for (int n = 0; n <= 20; ++n) {
    Rational s = 0;
    for (int j = 0; j <= n; ++j) s += sinh[j] * c[n - j];
    EXPECT_EQ(s, n == 1 ? Rational(1, 2) : Rational(0)) << n;
  }
}

TEST(Constants, Pochhammer) {
  EXPECT_EQ(pochhammer(1, 3), 6);
  EXPECT_EQ(pochhammer(3, 2), 12);
  for (int k = 0; k < 5; ++k) EXPECT_EQ(pochhammer(0, k + 1), 0);
  for (int b = 0; b <= 6; ++b) {
    auto poly = pochhammer_poly(b);
    for (int a = -3; a <= 3; ++a) EXPECT_EQ(poly_eval(poly, a), pochhammer(a, b));
  }
  // d/da (a)_{k+1} at a = 0 is k!
  for (int k = 0; k <= 6; ++k) EXPECT_EQ(pochhammer_derivative(0, k + 1), Rational(factorial(k)));
}

TEST(Constants, BinomialPoly) {
  for (int k = 0; k <= 8; ++k) EXPECT_EQ(binomial(-1, k), k % 2 ? -1 : 1);
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial_poly(5, 2), 10);
  // d/dl binom(k + l - 1, k) at l = 1, k = 2
  EXPECT_EQ(binomial_poly(2, 2, BinomialMode::derivative), Rational(3, 2));
  // d/dx binom(x, k) at x = l + k - 1 equals binom(l + k - 1, k) * sum_{r=l}^{l+k-1} 1/r
  for (int l = 1; l <= 6; ++l)
    for (int k = 0; k <= 6; ++k) {
      Rational h = 0;
      for (int r = l; r <= l + k - 1; ++r) h += Rational(1, r);
      EXPECT_EQ(binomial_poly(l + k - 1, k, BinomialMode::derivative), binomial(l + k - 1, k) * h) << l << "," << k;
    }
}
