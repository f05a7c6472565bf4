#pragma once

#include "gwc/fock.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gwc {

struct SuiteOptions {
  int genus = 1;
  int degree = 2;
  int max_level = 3;
  int max_k = 3;
};

const std::vector<std::string>& suite_names();
// throws DomainError on an unknown suite
std::vector<ResidualReport> run_suite(const std::string& name, const SuiteOptions& opts);

// <tau_2(1) tau_3(w)> = 10 <tau_4(w)> - (3/2) chi <tau_1(w) tau_3(w)> on P^1 and E, degrees 0..max_degree
ResidualReport worked_example_check(int max_degree);
// Virasoro and D commutators on monomials with at most max_factors factors of level <= max_level,
// -1 <= n, m <= n_max, every genus 0..max_genus
ResidualReport operator_algebra_check(int max_genus, int max_level, int n_max, int max_factors);
// L_k Z_d = 0 for the cap (genus 0, one relative point), 1 <= total level <= max_total_level,
// at most max_factors factors, d <= max_degree, -1 <= k <= k_max
ResidualReport constraint_vanishing_check(int max_degree, int max_total_level, int k_max, int max_factors);
// stationary cap coefficients against the character formula
ResidualReport fock_stationary_check(int max_degree, int max_level, int max_omega);
// cap coefficients with 1-2 tau(1) insertions and at most one tau(omega) against the Virasoro pipeline
ResidualReport fock_mixed_check(int max_degree, int max_level);
// coefficient unchanged between cutoff N and N + 2
ResidualReport fock_cutoff_check(int max_degree, int max_level);
ResidualReport degeneration_type2_check(int max_degree, int max_level);
ResidualReport degeneration_type1_check(int max_degree, int max_level);
// tube relation for |mu| <= max_size, up to max_markings tau(1) insertions with levels <= max_level
ResidualReport tube_check(int max_size, int max_markings, int max_level);
// Fock rubber series against the splitting recursion, k <= k_max
ResidualReport rubber_check(int max_size, int max_markings, int k_max, int max_level);
ResidualReport monodromy_check(int max_degree, int max_level);
ResidualReport elliptic_check(int max_degree, int max_level);
ResidualReport cayley_check(int max_k);
ResidualReport interaction_check(int max_r);
// orthogonality of characters and sum dim^2 = d!
ResidualReport character_check(int max_degree);
// P_l v_lambda = p_l(lambda) v_lambda
ResidualReport eigenvalue_check(int max_l, int max_size);
// tV exchange for 0 <= k <= k_max and tails of at most max_tail factors A^a_i, a <= max_a, i <= max_level;
// also checks the relation as an identity of covectors on the vacuum row
ResidualReport tV_check(int k_max, int max_tail, int max_level, int max_a, int cutoff);
// evaluate(eliminate_tau1(b)) with three elimination orders on random brackets
ResidualReport confluence_check(int count, std::uint32_t seed);

}  // namespace gwc
