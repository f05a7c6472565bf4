#pragma once

#include "gwc/fock.hpp"

namespace gwc {

// set partitions of {0..m-1}, blocks sorted increasingly and ordered by increasing maximal element
std::vector<std::vector<std::vector<int>>> set_partitions(int m);

// [prod_j w_j^{l_j+1}] A^vee(w_1..w_n), expanded where w_n dominates the other variables
FockMatrix Avee_coefficient(const std::vector<int>& levels, const BasisPtr& basis);
// largest energy drop of Avee_coefficient(levels)
int Avee_lowering(const std::vector<int>& levels);
// [prod_j x_j^{e_j}] E_0(x_1..x_n) = T(x) E_0(x_1 + ... + x_n), all e_j >= 1 (diagonal)
FockMatrix E0_block_coefficient(const std::vector<int>& exps, const BasisPtr& basis);

// [prod w_j^{l_j+1}] M'(w) applied to v; M' includes the trailing e^{alpha_1}
FockVector apply_Mprime(const std::vector<int>& levels, const FockVector& v, const BasisPtr& basis);
// [s^p prod x_j^{e_j}] E(x, s) applied to v
FockVector apply_bigE(int p, const std::vector<int>& exps, const FockVector& v, const BasisPtr& basis);

// smallest cutoff for which the cap coefficient below is computed exactly
int cap_cutoff(int degree, const std::vector<int>& omega_levels, const std::vector<int>& one_levels);

// <prod tau_k(omega) prod tau_l(1) | nu> read off <prod A^0(z) M'(w) | nu>
Rational cap_coefficient(const std::vector<int>& omega_levels, const std::vector<int>& one_levels,
                         const Partition& nu, std::optional<int> cutoff = std::nullopt);
// [t^a prod z^{k+1} prod w^{l+1}] <prod A(z) e^{alpha_1} E(w, -t) | nu>
Rational equivariant_cap_coefficient(int t_power, const std::vector<int>& omega_levels,
                                     const std::vector<int>& one_levels, const Partition& nu,
                                     std::optional<int> cutoff = std::nullopt);

struct CapSeriesRequest {
  int n_z = 0;       // variables z1..zn
  int n_w = 0;       // variables w1..wm
  int max_level = 2; // exponents 1..max_level+1 in every z and w
  int t_order = 0;   // equivariant only
  bool equivariant = false;
  Partition nu;
};
// positive-degree part of the cap series; variables (t,) z1.., w1..
TruncatedSeries cap_series(const CapSeriesRequest& r);

// [s^{k-m+1} prod w^{l+1}] <mu| e^{s F_2} E(w, 1/s) |nu> = <mu, k | prod tau_l | nu>~
Rational rubber_coefficient(const Partition& mu, int k, const std::vector<int>& levels, const Partition& nu);
// positive-degree part in w1..wm (exponents 1..max_level+1), s in [-m, s_hi]
TruncatedSeries rubber_series(const Partition& mu, int n_w, int max_level, int s_hi, const Partition& nu);

// [t^k prod w^{e}] M(w_1..w_m) as a matrix; exact on rows with energy <= *bound
FockMatrix M_coefficient(int k, const std::vector<int>& exps, const BasisPtr& basis, int* bound);
// [t^k] M(w) = 0 for k < m, m <= m_max, exponents 1..w_order
ResidualReport tM_vanishing_check(int m_max, int w_order, int cutoff);
// [t^m] M(w) = M'(w) on interior rows
ResidualReport tM_leading_check(int m_max, int w_order, int cutoff);

// one operator of a tail: A^a_i
struct ACoef {
  int a = 0;
  int i = 0;
};
// residual of the exchange relation for A^1_k in front of tail (tail applied to the vacuum first)
Rational tV_exchange(int k, const std::vector<ACoef>& tail, int cutoff);

}  // namespace gwc
