#include "gwc/hurwitz.hpp"
#include "gwc/virasoro.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace gwc;

namespace {

const CohClass one = CohClass::one();
const CohClass w = CohClass::omega();

FreeVariable t0(int l) { return {Family::t0, 0, l}; }
FreeVariable t1(int l) { return {Family::t1, 0, l}; }
FreeVariable s(int i, int l) { return {Family::s, i, l}; }
FreeVariable sb(int i, int l) { return {Family::sbar, i, l}; }

// coefficient of the term c * mult * d/d deriv, matching the factor multisets
Rational term_coefficient(const FormalOperator& op, std::vector<FreeVariable> mult, std::vector<FreeVariable> deriv) {
  std::sort(mult.begin(), mult.end());
  std::sort(deriv.begin(), deriv.end());
  Rational c = 0;
  for (const auto& t : op.terms()) {
    auto m = t.mult, d = t.deriv;
    std::sort(m.begin(), m.end());
    std::sort(d.begin(), d.end());
    if (m == mult && d == deriv) c += t.coeff;
  }
  return c;
}

int identity_count(const Bracket& b) { return b.count(ClassKind::Identity); }

int lowest_tau1(const Bracket& b) {
  int lo = -1;
  for (const auto& i : b.insertions)
    if (i.cls.kind == ClassKind::Identity && (lo < 0 || i.level < lo)) lo = i.level;
  return lo;
}

Rational stationary(int g, int d, std::vector<int> levels, std::vector<Partition> profiles = {}) {
  return stationary_invariant({g, d, levels, profiles});
}

}  // namespace

TEST(Operators, PrintedTerms) {
  const auto Lm1 = build_L(-1, 2, 1, 4);
  EXPECT_EQ(term_coefficient(Lm1, {t0(0), t1(0)}, {}), 1);
  EXPECT_EQ(term_coefficient(Lm1, {s(1, 0), sb(1, 0)}, {}), 1);
  EXPECT_EQ(term_coefficient(Lm1, {t0(1)}, {t0(0)}), 1);

  for (int chi : {2, 0, -1}) {
    const auto L0 = build_L(0, chi, 1, 4);
    EXPECT_EQ(term_coefficient(L0, {}, {t0(1)}), -1);
    EXPECT_EQ(term_coefficient(L0, {}, {t1(0)}), -chi);
  }
  for (int k = -1; k <= 3; ++k) {
    const auto D = build_D(1, k, false, 1, 6);
    EXPECT_EQ(term_coefficient(D, {}, {s(1, k + 1)}), -Rational(factorial(k + 1)));
  }
  // barred operator: -(l+1)_{k+1} s^i_l d/dt^1_{k+l}
  for (int k = 0; k <= 2; ++k)
    for (int l = 0; l <= 2; ++l) {
      const auto Db = build_D(1, k, true, 1, 6);
      EXPECT_EQ(term_coefficient(Db, {s(1, l)}, {t1(k + l)}), -pochhammer(l + 1, k + 1));
    }
  EXPECT_THROW(build_L(-2, 2, 0, 3), DomainError);
  EXPECT_THROW(build_D(2, 0, false, 1, 3), DomainError);
}

TEST(Operators, GrassmannSigns) {
  const auto ss = GrassmannPolynomial::from_product({s(1, 0), sb(1, 0)});
  FormalOperator ds, dsb, mt;
  ds.add({1, {}, {s(1, 0)}});
  dsb.add({1, {}, {sb(1, 0)}});
  mt.add({1, {t0(0)}, {}});
  EXPECT_EQ(apply(ds, ss), GrassmannPolynomial::from_product({sb(1, 0)}));
  EXPECT_EQ(apply(dsb, ss), GrassmannPolynomial::from_product({s(1, 0)}, -1));
  EXPECT_EQ(apply(mt, GrassmannPolynomial::from_monomial({})), GrassmannPolynomial::from_product({t0(0)}));
  // odd derivative twice in the same variable vanishes
  FormalOperator dd;
  dd.add({1, {}, {s(1, 0), s(1, 0)}});
  EXPECT_TRUE(apply(dd, ss).is_zero());
  // s s = 0 and reordering costs a sign
  EXPECT_TRUE(GrassmannPolynomial::from_product({s(1, 0), s(1, 0)}).is_zero());
  EXPECT_EQ(GrassmannPolynomial::from_product({sb(1, 0), s(1, 0)}), GrassmannPolynomial::from_product({s(1, 0), sb(1, 0)}, -1));
}

TEST(Operators, DMinusOneShift) {
  // D^1_{-1} applied to s^1_0: leading term -0! d/ds^1_0
  const auto D = build_D(1, -1, false, 1, 3);
  const auto r = apply(D, GrassmannPolynomial::from_product({s(1, 0)}));
  EXPECT_EQ(r.coefficient({}), -1);
}

TEST(OperatorAlgebra, PrintedRelationsOnSmallBasis) {
  const int g = 1, max_level = 4, op_level = max_level + 3;
  const auto basis = monomial_basis(g, max_level, 2, 2);
  auto L = [&](int k) { return build_L(k, 2 - 2 * g, g, op_level); };
  auto D = [&](int k, bool bar) { return build_D(1, k, bar, g, op_level); };
  auto zero_on_basis = [&](const FormalOperator& A, const FormalOperator& B, const FormalOperator& E, bool anti) {
    for (const auto& m : basis)
      if (!commutator_residual(A, B, E, m, anti).is_zero()) return false;
    return true;
  };
  EXPECT_TRUE(zero_on_basis(L(1), L(2), Rational(-1) * L(3), false));
  EXPECT_TRUE(zero_on_basis(L(-1), L(2), Rational(-3) * L(1), false));
  EXPECT_TRUE(zero_on_basis(L(1), D(1, false), Rational(-2) * D(2, false), false));
  EXPECT_TRUE(zero_on_basis(L(2), D(0, true), Rational(2) * D(2, true), false));
  EXPECT_TRUE(zero_on_basis(D(1, false), D(2, false), FormalOperator{}, true));
  EXPECT_TRUE(zero_on_basis(D(0, false), D(1, true), FormalOperator{}, true));
  // a wrong structure constant is detected
  EXPECT_FALSE(zero_on_basis(L(1), L(2), Rational(1) * L(3), false));
}

TEST(ConstraintIdentity, WorkedExample) {
  // (chi, genus, profiles): P^1, E, and the cap
  struct Target { int g; std::vector<Partition> profiles; int chi; };
  for (const Target& t : {Target{0, {}, 2}, Target{1, {}, 0}, Target{0, {{1}}, 1}}) {
    const int d = 1;
    Bracket b{t.g, d, {tau(2, one), tau(3, w)}, t.profiles};
    const Rational expected = 10 * stationary(t.g, d, {4}, t.profiles) -
                              Rational(3, 2) * t.chi * stationary(t.g, d, {1, 3}, t.profiles);
    EXPECT_EQ(evaluate(constraint_identity(1, b)), expected) << t.chi;
    EXPECT_EQ(evaluate(b), expected);
  }
}

TEST(ConstraintIdentity, DilatonOnEllipticCurve) {
  for (int d = 0; d <= 3; ++d)
    for (int k = 0; k <= 4; ++k) {
      Bracket b{1, d, {tau(1, one), tau(k, w)}, {}};
      EXPECT_EQ(evaluate(constraint_identity(0, b)), (k + 1) * stationary(1, d, {k}));
    }
}

TEST(ConstraintIdentity, StringEquation) {
  for (int d = 0; d <= 3; ++d) {
    Bracket b{0, d, {tau(0, one), tau(1, w)}, {}};
    auto s = constraint_identity(-1, b);
    EXPECT_EQ(evaluate(s), stationary(0, d, {0}));
  }
}

TEST(ConstraintIdentity, RemovesIdentityInsertions) {
  const std::vector<Bracket> cases{
      {0, 2, {tau(2, one), tau(1, one), tau(3, w)}, {}},
      {1, 1, {tau(3, one), tau(0, one), tau(1, CohClass::alpha(1)), tau(2, CohClass::beta(1))}, {}},
      {0, 2, {tau(1, one), tau(0, w)}, {{1, 1}, {2}}},
  };
  for (const auto& b : cases) {
    int top = -1;
    for (const auto& i : b.insertions)
      if (i.cls.kind == ClassKind::Identity) top = std::max(top, i.level);
    const auto s = constraint_identity(top - 1, b);
    // a second tau(1) may react into tau(omega) in the same step
    for (const auto& [c, t] : s.terms()) EXPECT_LT(identity_count(t), identity_count(b)) << to_string(t);
  }
  EXPECT_THROW(constraint_identity(0, Bracket{0, 1, {tau(1, w)}, {}}), DomainError);
}

TEST(ConstraintIdentity, ReactionTableAgreesWithExtraction) {
  int covered = 0;
  for (int g = 0; g <= 1; ++g)
    for (int d = 0; d <= 2; ++d)
      for (int k = -1; k <= 3; ++k)
        for (int l = 0; l <= 3; ++l)
          for (int m = 0; m <= 2; ++m) {
            Bracket b{g, d, {tau(k + 1, one), tau(l, w), tau(m, one)}, {}};
            if (m > k + 1) continue;
            auto r = reaction_identity(k, b);
            if (!r) continue;
            ++covered;
            EXPECT_EQ(evaluate(*r), evaluate(constraint_identity(k, b))) << to_string(b);
          }
  EXPECT_GT(covered, 0);
}

TEST(Elimination, FixedPointAndWorkedExample) {
  Bracket st{0, 2, {tau(1, w), tau(2, w)}, {}};
  auto s = eliminate_tau1(st);
  ASSERT_EQ(s.terms().size(), 1u);
  EXPECT_EQ(s.terms()[0].first, 1);

  Bracket b{0, 1, {tau(2, one), tau(3, w)}, {}};
  auto e = eliminate_tau1(b);
  for (const auto& [c, t] : e.terms()) EXPECT_EQ(identity_count(t), 0);
  EXPECT_EQ(evaluate(e), 10 * stationary(0, 1, {4}) - 3 * stationary(0, 1, {1, 3}));
}

TEST(Elimination, OrderIndependence) {
  const std::vector<Bracket> cases{
      {0, 1, {tau(0, one), tau(0, one), tau(2, w)}, {}},
      {0, 2, {tau(2, one), tau(0, one), tau(1, one), tau(3, w)}, {}},
      {1, 2, {tau(1, one), tau(3, one), tau(1, w)}, {{2}}},
      {1, 1, {tau(0, one), tau(2, one), tau(1, CohClass::alpha(1)), tau(1, CohClass::beta(1))}, {}},
  };
  for (const auto& b : cases)
    EXPECT_EQ(evaluate(eliminate_tau1(b, highest_tau1)), evaluate(eliminate_tau1(b, lowest_tau1))) << to_string(b);
}

TEST(Constraints, VanishOnCapMonomials) {
  const std::vector<Partition> cap{{1}};
  const auto basis = monomial_basis(0, 3, 3, 0, 4);
  int checked = 0;
  for (int k = -1; k <= 2; ++k)
    for (const auto& m : basis) {
      int total = 0;
      for (auto c : m) total += FreeVariable::decode(c).level;
      if (total < 1) continue;
      EXPECT_EQ(constraint_value(k, m, 0, 1, cap), 0) << k << " " << monomial_to_string(m);
      ++checked;
    }
  EXPECT_GT(checked, 50);
}

TEST(Constraints, MultinomialIdentity) {
  // holds once sum k + l >= 1; at k = l = 0 the right side has only negative parts
  for (int l = 0; l <= 5; ++l)
    for (int a = 0; a <= 5; ++a) {
      if (a + l > 0) EXPECT_TRUE(multinomial_identity_holds({a}, l));
      for (int b = 0; b <= 5; ++b) {
        if (a + b + l > 0) EXPECT_TRUE(multinomial_identity_holds({a, b}, l));
        for (int c = 0; c <= 3; ++c)
          if (a + b + c + l > 0) EXPECT_TRUE(multinomial_identity_holds({a, b, c}, l));
      }
    }
  EXPECT_FALSE(multinomial_identity_holds({0}, 0));
}
