#pragma once

#include "gwc/brackets.hpp"

namespace gwc {

// Type (i): X degenerates to X' (genus genus_first) and X'' (genus g - genus_first).
// insertion_side[i] is 0 (X') or 1 (X'') for every non-Identity insertion; Identity
// insertions are summed over all distributions. Odd classes alpha_j, beta_j go to X' when
// j <= genus_first (keeping j) and to X'' otherwise (reindexed j - genus_first), and
// their side entries must agree with that.
struct DegenerationSplit {
  int genus_first = 0;
  std::vector<int> insertion_side;
  std::vector<int> profile_side;
};

Rational degenerate_type1(const Bracket& b, const DegenerationSplit& split);
Rational degenerate_type2(const Bracket& b);

// multinomial(sum k + l; k_1..k_n, l) * <mu| tau_{l + sum(k_i - 1)}(omega) |nu>
Rational tube_reduction(const Partition& mu, int l, const std::vector<int>& ks, const Partition& nu);
// the tube bracket <mu| prod tau(...) |nu> (genus-0 target, profiles mu and nu)
Rational tube_bracket(const Partition& mu, const std::vector<Insertion>& ins, const Partition& nu);

// rubber integral <mu, k | prod tau_{levels} | nu>~ by the splitting recursion
Rational rubber_bracket(const Partition& mu, int k, const std::vector<int>& levels, const Partition& nu);

struct DiagonalClass {
  int r = 0;
  std::vector<std::pair<Rational, std::vector<CohClass>>> even;
  std::vector<std::pair<Rational, std::vector<CohClass>>> odd;
};
// Kunneth decomposition of the small diagonal of E^r in the basis 1, alpha_1, beta_1, omega
DiagonalClass kunneth_diagonal(int r);

struct MonodromySpec {
  std::vector<Insertion> N;       // tau(1) and tau(omega) only
  std::vector<int> n_levels;      // markings of I
  std::vector<int> m_levels;      // markings of J
  std::vector<int> delta;         // proper subset of I, indices into n_levels
  int degree = 0;
};
Rational monodromy_residual(const MonodromySpec& spec);

struct EllipticSpec {
  std::vector<int> M_levels;              // tau_{o}(1) prefactor
  std::vector<std::vector<int>> parts;    // set partition of K = {0..|K|-1}, parts of size >= 2
  std::vector<int> l_levels;              // descendent level of each marking of K
  int degree = 0;
};
Rational elliptic_vanishing_residual(const EllipticSpec& spec);

}  // namespace gwc
