#include "gwc/brackets.hpp"
#include "gwc/cap.hpp"
#include "gwc/degeneration.hpp"
#include "gwc/fock.hpp"
#include "gwc/hurwitz.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace gwc;

namespace {

// coefficients of varsigma(x) = 2 sinh(x/2)
Rational varsigma_coefficient(int j) {
  if (j % 2 == 0) return 0;
  return Rational(1) / (Rational(Integer(1) << (j - 1)) * factorial(j));
}

Rational power(const Rational& x, int n) {
  Rational r = 1;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

}  // namespace

TEST(Basis, StatesAndEnergies) {
  auto b = make_basis(6);
  std::size_t expected = 0;
  for (int d = 0; d <= 6; ++d) expected += enumerate_partitions(d).size();
  EXPECT_EQ(b->size(), expected);
  EXPECT_EQ(b->state(b->vacuum()), Partition{});
  EXPECT_EQ(b->energy(b->vacuum()), 0);
  for (std::size_t i = 0; i < b->size(); ++i) {
    EXPECT_EQ(b->energy(i), size(b->state(i)));
    if (i > 0) EXPECT_GE(b->energy(i), b->energy(i - 1));
  }
  EXPECT_EQ(make_basis(6).get(), b.get());
  EXPECT_THROW(b->index({4, 3}), CutoffError);
  EXPECT_FALSE(b->find({7}).has_value());
}

TEST(Operators, VacuumExpectationOfE0) {
  auto b = make_basis(4);
  std::vector<SeriesVar> vars{{"z", -1, 6}};
  auto e = vacuum_expectation({E_operator(0, vars, 0, b)});
  auto c = c_coefficients(7);
  for (int j = 0; j <= 7; ++j) EXPECT_EQ(e.coefficient({j - 1}), c[j]) << j;
  EXPECT_EQ(vacuum_expectation({WedgeOperator::scalar(FockMatrix::identity(b), vars)}).coefficient({0}), 1);
}

TEST(Operators, BosonsAndHeisenberg) {
  auto b = make_basis(6);
  for (int r = -3; r <= 3; ++r)
    if (r != 0) EXPECT_EQ(E_coefficient(r, 0, b), alpha(r, b)) << r;
  EXPECT_EQ((alpha(1, b) * alpha(-1, b)).entry(b->vacuum(), b->vacuum()), 1);
  for (int k = 1; k <= 3; ++k) {
    auto c = matrix_commutator(alpha(k, b), alpha(-k, b));
    EXPECT_TRUE(agree_on_interior(c, FockMatrix::identity(b) * Rational(k), 6 - k)) << k;
  }
}

TEST(Operators, Adjointness) {
  auto b = make_basis(5);
  for (int r = -3; r <= 3; ++r)
    for (int m = (r == 0 ? -1 : 0); m <= 4; ++m)
      EXPECT_EQ(E_coefficient(r, m, b).transpose(), E_coefficient(-r, m, b)) << r << " " << m;
}

TEST(Operators, BosonCommutesWithE) {
  // [alpha_k, E_l(z)] = varsigma(kz) E_{k+l}(z)
  auto b = make_basis(7);
  for (int k = -2; k <= 2; ++k) {
    if (k == 0) continue;
    for (int l = -2; l <= 2; ++l)
      for (int m = 0; m <= 4; ++m) {
        const int lo_l = (l == 0) ? -1 : 0, lo_kl = (k + l == 0) ? -1 : 0;
        if (m < lo_l) continue;
        auto lhs = matrix_commutator(alpha(k, b), E_coefficient(l, m, b));
        FockMatrix rhs(b);
        for (int j = 1; m - j >= lo_kl; ++j)
          rhs += E_coefficient(k + l, m - j, b) * (varsigma_coefficient(j) * power(k, j));
        const int bound = interior_bound(*b, std::max(k, 0), std::max(l, 0));
        EXPECT_TRUE(agree_on_interior(lhs, rhs, bound)) << k << " " << l << " " << m;
      }
  }
}

TEST(Operators, CompletedCycleEigenvalues) {
  auto b = make_basis(6);
  for (int l = 1; l <= 6; ++l) {
    auto P = P_operator(l, b);
    for (std::size_t i = 0; i < b->size(); ++i) {
      EXPECT_EQ(P.entry(i, i), completed_cycle(l, b->state(i)));
      EXPECT_EQ(E0_eigenvalue(l, b->state(i)), completed_cycle(l, b->state(i)) / Rational(factorial(l)));
    }
  }
}

TEST(AOperators, LowOrderCoefficients) {
  auto b = make_basis(6);
  EXPECT_EQ(A_coefficient(0, -2, b), FockMatrix::identity(b));
  EXPECT_TRUE(A_coefficient(0, -1, b).is_zero());
  for (int k = 0; k <= 3; ++k) {
    for (int l = 0; l <= 3; ++l) {
      auto c = matrix_commutator(A_coefficient(0, k, b), A_coefficient(0, l, b));
      EXPECT_TRUE(c.is_zero()) << k << " " << l;
    }
    // [A^0_k, A^1_{-k-1}] = (-1)^k
    auto c = matrix_commutator(A_coefficient(0, k, b), A_coefficient(1, -k - 1, b));
    EXPECT_TRUE(agree_on_interior(c, FockMatrix::identity(b) * Rational(k % 2 ? -1 : 1), 6 - (k + 2))) << k;
  }
  EXPECT_TRUE(conjugation_check(5, 7).ok());
}

TEST(AOperators, CommutatorIdentities) {
  IdentityRanges r;
  r.k_max = 4;
  r.l_min = -4;
  r.l_max = 4;
  r.cutoff = 6;
  for (auto which : {AIdentity::c01, AIdentity::c02, AIdentity::c11}) {
    auto rep = commutator_identities_check(which, r);
    EXPECT_TRUE(rep.ok()) << rep.name << " " << rep.failed << "/" << rep.checked;
  }
  IdentityRanges ab;
  ab.k_max = 3;
  ab.a_order = 2;
  ab.b_lo = -2;
  ab.b_hi = 2;
  ab.cutoff = 6;
  auto rep = commutator_identities_check(AIdentity::bAc, ab);
  EXPECT_TRUE(rep.ok()) << rep.failed << "/" << rep.checked;
}

TEST(Trees, CayleyAndInteractionDiagrams) {
  auto t2 = tree_function(2);
  EXPECT_EQ(t2.terms().size(), 1u);
  EXPECT_EQ(t2.coefficient({1, 1}), 1);
  for (int k = 1; k <= 5; ++k) EXPECT_EQ(tree_function(k), tree_sum_bruteforce(k)) << k;
  // two markings: a single diagram, varsigma(t w1 w2) = t w1 w2 + O(t^3)
  auto s = interaction_sum(2, 3, 3);
  EXPECT_EQ(s.coefficient({1, 1, 1}), 1);
  for (const auto& [e, c] : s.terms())
    if (e[0] == 1) EXPECT_EQ(e, (Exponents{1, 1, 1}));
}

TEST(Cap, SetPartitions) {
  const std::vector<std::size_t> bell{1, 1, 2, 5, 15, 52};
  for (int m = 0; m <= 5; ++m) EXPECT_EQ(set_partitions(m).size(), bell[m]);
  // s-weights of E(x1, x2, x3, s): one block s^2, three of two blocks s^1, one of three blocks s^0
  std::map<std::size_t, int> by_length;
  for (const auto& p : set_partitions(3)) by_length[p.size()]++;
  EXPECT_EQ(by_length[1], 1);
  EXPECT_EQ(by_length[2], 3);
  EXPECT_EQ(by_length[3], 1);
  for (const auto& p : set_partitions(4))
    for (std::size_t i = 1; i < p.size(); ++i) EXPECT_LT(p[i - 1].back(), p[i].back());
}

TEST(Cap, SingleMarkingOperator) {
  auto b = make_basis(6);
  for (int l = 0; l <= 3; ++l) {
    EXPECT_EQ(Avee_coefficient({l}, b), A_coefficient(1, l, b));
    for (std::size_t i = 0; i < b->size(); i += 3) {
      auto v = basis_vector(*b, i);
      EXPECT_EQ(apply_Mprime({l}, v, b), A_coefficient(1, l, b).apply(apply_exp_alpha1(v, b)));
    }
  }
}

TEST(Cap, StationaryCoefficients) {
  EXPECT_EQ(cap_coefficient({1}, {}, {1}), 0);
  for (int d = 1; d <= 3; ++d)
    for (const auto& nu : enumerate_partitions(d))
      for (int k = 0; k <= 4; ++k)
        for (int k2 = -1; k2 <= k; ++k2) {
          std::vector<int> levels{k};
          if (k2 >= 0) levels.push_back(k2);
          EXPECT_EQ(cap_coefficient(levels, {}, nu), stationary_invariant({0, d, levels, {nu}}));
          EXPECT_EQ(equivariant_cap_coefficient(0, levels, {}, nu), stationary_invariant({0, d, levels, {nu}}));
        }
}

TEST(Cap, MixedCoefficientsMatchVirasoroPath) {
  for (int d = 1; d <= 3; ++d)
    for (const auto& nu : enumerate_partitions(d))
      for (int k = 0; k <= 3; ++k)
        for (int l = 0; l <= 3; ++l) {
          Bracket br{0, d, {tau(k, CohClass::omega()), tau(l, CohClass::one())}, {nu}};
          EXPECT_EQ(cap_coefficient({k}, {l}, nu), evaluate(br)) << to_string(br);
        }
}

TEST(Cap, ThreeIdentityInsertions) {
  for (int d = 1; d <= 2; ++d)
    for (const auto& nu : enumerate_partitions(d))
      for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= a; ++b)
          for (int c = 0; c <= b; ++c) {
            const CohClass one = CohClass::one();
            Bracket br{0, d, {tau(1, CohClass::omega()), tau(a, one), tau(b, one), tau(c, one)}, {nu}};
            EXPECT_EQ(cap_coefficient({1}, {a, b, c}, nu), evaluate(br)) << to_string(br);
          }
}

TEST(Cap, MarkingOrderSymmetry) {
  for (const auto& nu : enumerate_partitions(2)) {
    std::vector<int> levels{0, 1, 2};
    const Rational base = cap_coefficient({2}, levels, nu);
    while (std::next_permutation(levels.begin(), levels.end()))
      EXPECT_EQ(cap_coefficient({2}, levels, nu), base) << levels[0] << levels[1] << levels[2];
  }
}

TEST(Cap, CutoffIndependence) {
  for (int d = 1; d <= 2; ++d)
    for (const auto& nu : enumerate_partitions(d))
      for (int l = 0; l <= 2; ++l) {
        const int n = cap_cutoff(d, {1}, {l, 0});
        EXPECT_EQ(cap_coefficient({1}, {l, 0}, nu, n), cap_coefficient({1}, {l, 0}, nu, n + 2));
      }
}

TEST(Rubber, SeriesMatchesRecursion) {
  for (int d = 1; d <= 3; ++d)
    for (const auto& mu : enumerate_partitions(d))
      for (const auto& nu : enumerate_partitions(d)) {
        EXPECT_EQ(rubber_coefficient(mu, -1, {}, nu), mu == nu ? Rational(1) / Rational(aut_factor(mu)) : Rational(0));
        for (int k = 0; k <= 2; ++k) {
          EXPECT_EQ(rubber_coefficient(mu, k, {}, nu), rubber_bracket(mu, k, {}, nu));
          for (int l = 0; l <= 2; ++l) EXPECT_EQ(rubber_coefficient(mu, k, {l}, nu), rubber_bracket(mu, k, {l}, nu));
        }
      }
  for (const auto& mu : enumerate_partitions(2))
    for (const auto& nu : enumerate_partitions(2))
      for (int k = 0; k <= 2; ++k)
        EXPECT_EQ(rubber_coefficient(mu, k, {1, 0, 1}, nu), rubber_bracket(mu, k, {1, 0, 1}, nu));
  auto s = rubber_series({1}, 1, 2, 2, {1});
  EXPECT_FALSE(s.is_zero());
}

TEST(Exchange, MOperatorAndTailExchange) {
  EXPECT_TRUE(tM_vanishing_check(2, 3, 6).ok());
  EXPECT_TRUE(tM_leading_check(2, 3, 6).ok());
  EXPECT_EQ(tV_exchange(0, {}, 8), 0);
  EXPECT_EQ(tV_exchange(1, {}, 8), 0);
  EXPECT_EQ(tV_exchange(4, {{0, 2}}, 8), 0);
  EXPECT_EQ(tV_exchange(3, {{0, 1}, {1, 0}}, 8), 0);
}
