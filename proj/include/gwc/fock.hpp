#pragma once

#include "gwc/partitions.hpp"
#include "gwc/series.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>

namespace gwc {

struct CutoffError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// one nonzero entry of the normally ordered part of E_r(z): sign * e^{cz} at (row, col)
struct EEntry {
  std::size_t row, col;
  int sign;
  Rational c;  // k - r/2
};

// charge-zero states v_lambda with |lambda| <= cutoff, ordered by energy
class FockBasis {
 public:
  explicit FockBasis(int cutoff);
  int cutoff() const { return cutoff_; }
  std::size_t size() const { return states_.size(); }
  const Partition& state(std::size_t i) const { return states_[i]; }
  int energy(std::size_t i) const { return energies_[i]; }
  std::optional<std::size_t> find(const Partition& p) const;
  // throws CutoffError when p lies above the cutoff
  std::size_t index(const Partition& p) const;
  std::size_t vacuum() const { return 0; }
  // entries of sum_k e^{z(k - r/2)} :psi_{k-r} psi*_k: that stay inside the basis
  const std::vector<EEntry>& E_entries(int r) const;

 private:
  int cutoff_;
  std::vector<Partition> states_;
  std::vector<int> energies_;
  std::map<Partition, std::size_t> lookup_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::vector<EEntry>> e_cache_;
};

using BasisPtr = std::shared_ptr<const FockBasis>;
// shared instance per cutoff
BasisPtr make_basis(int cutoff);

using FockVector = std::vector<Rational>;

// scalar operator on a truncated basis, stored by column
class FockMatrix {
 public:
  FockMatrix() = default;
  explicit FockMatrix(BasisPtr basis);
  static FockMatrix identity(BasisPtr basis);

  const BasisPtr& basis() const { return basis_; }
  void add(std::size_t row, std::size_t col, const Rational& v);
  Rational entry(std::size_t row, std::size_t col) const;
  const std::map<std::size_t, Rational>& column(std::size_t col) const { return cols_[col]; }
  bool is_zero() const;

  FockVector apply(const FockVector& v) const;
  FockMatrix transpose() const;
  FockMatrix& operator+=(const FockMatrix& o);
  FockMatrix& operator-=(const FockMatrix& o);
  FockMatrix& operator*=(const Rational& c);
  friend FockMatrix operator+(FockMatrix a, const FockMatrix& b) { return a += b; }
  friend FockMatrix operator-(FockMatrix a, const FockMatrix& b) { return a -= b; }
  friend FockMatrix operator*(FockMatrix a, const Rational& c) { return a *= c; }
  friend FockMatrix operator*(const FockMatrix& a, const FockMatrix& b);
  bool operator==(const FockMatrix& o) const { return cols_ == o.cols_; }

  // largest energy drop over the stored entries, 0 when nothing lowers
  int lowering() const;

 private:
  BasisPtr basis_;
  std::vector<std::map<std::size_t, Rational>> cols_;
};

FockVector zero_vector(const FockBasis& b);
FockVector basis_vector(const FockBasis& b, std::size_t i);
bool is_zero(const FockVector& v);
Rational dot(const FockVector& a, const FockVector& b);

// [z^m] E_r(z); m may be -1 when r = 0
FockMatrix E_coefficient(int r, int m, const BasisPtr& basis);
// alpha_k = E_k(0), k != 0
FockMatrix alpha(int k, const BasisPtr& basis);
// P_l = l! [z^l] E_0(z), diagonal
FockMatrix P_operator(int l, const BasisPtr& basis);
// eigenvalue of [z^m] E_0(z) on v_lambda, m >= -1
Rational E0_eigenvalue(int m, const Partition& lambda);

// |nu> = (1/z(nu)) prod alpha_{-nu_i} v_empty
FockVector state_vector(const Partition& nu, const BasisPtr& basis);
// e^{alpha_1} v as the finite sum over powers of alpha_1
FockVector apply_exp_alpha1(const FockVector& v, const BasisPtr& basis, int sign = 1);
// e^{sign alpha_1} as a matrix (alpha_1 is nilpotent on the truncation)
FockMatrix exp_alpha1(const BasisPtr& basis, int sign = 1);

// operator whose entries are truncated series in the declared variables
class WedgeOperator {
 public:
  WedgeOperator() = default;
  WedgeOperator(BasisPtr basis, std::vector<SeriesVar> vars);
  static WedgeOperator scalar(const FockMatrix& m, std::vector<SeriesVar> vars);

  const BasisPtr& basis() const { return basis_; }
  const std::vector<SeriesVar>& vars() const { return vars_; }
  const std::map<Exponents, FockMatrix>& coefficients() const { return coeffs_; }
  FockMatrix coefficient(const Exponents& e) const;
  void add(const Exponents& e, const FockMatrix& m);
  TruncatedSeries entry(const Partition& out, const Partition& in) const;
  WedgeOperator adjoint() const;
  int lowering() const;

  WedgeOperator& operator+=(const WedgeOperator& o);
  WedgeOperator& operator-=(const WedgeOperator& o);
  friend WedgeOperator operator+(WedgeOperator a, const WedgeOperator& b) { return a += b; }
  friend WedgeOperator operator-(WedgeOperator a, const WedgeOperator& b) { return a -= b; }
  friend WedgeOperator operator*(const WedgeOperator& a, const WedgeOperator& b);
  friend WedgeOperator operator*(const TruncatedSeries& s, const WedgeOperator& a);

 private:
  void check_compatible(const WedgeOperator& o) const;
  BasisPtr basis_;
  std::vector<SeriesVar> vars_;
  std::map<Exponents, FockMatrix> coeffs_;
};

// E_r(z) placed in variable var_index of vars (the window of that variable sets the orders)
WedgeOperator E_operator(int r, const std::vector<SeriesVar>& vars, std::size_t var_index, const BasisPtr& basis);
WedgeOperator operator_commutator(const WedgeOperator& A, const WedgeOperator& B);
FockMatrix matrix_commutator(const FockMatrix& A, const FockMatrix& B);
// rows whose energy is at most this bound are exact in a commutator of the two operators
int interior_bound(const FockBasis& basis, int lowering_a, int lowering_b);
// true when the two matrices agree on all columns and on rows with energy <= bound
bool agree_on_interior(const FockMatrix& a, const FockMatrix& b, int bound);

// (prod ops |state>, v_empty); the state defaults to the vacuum
TruncatedSeries vacuum_expectation(const std::vector<WedgeOperator>& ops,
                                   const std::optional<Partition>& state = std::nullopt);

// A^a_i = [t^a][z^{i+1}] A(z)
FockMatrix A_coefficient(int a, int i, const BasisPtr& basis);
// A(z) with t in [0, t_order] and z in the window [z_lo, z_hi]
WedgeOperator A_operator(int t_order, int z_lo, int z_hi, const BasisPtr& basis);
// A(a, b) with a in [0, a_order] and b in the window [b_lo, b_hi]
WedgeOperator A_two_parameter(int a_order, int b_lo, int b_hi, const BasisPtr& basis);

struct ResidualReport {
  std::string name;
  int checked = 0;
  int failed = 0;
  std::vector<std::string> failures;
  bool ok() const { return failed == 0 && checked > 0; }
};

enum class AIdentity { c01, c02, c11, bAc };
struct IdentityRanges {
  int k_max = 4;   // c01, c02: k in [0, k_max]; c11: k in [l_min, l_max]; bAc: z orders 0..k_max
  int l_min = -4;
  int l_max = 4;
  int a_order = 2;  // bAc only
  int b_lo = -3;    // bAc only
  int b_hi = 3;
  int cutoff = 8;
};
ResidualReport commutator_identities_check(AIdentity which, const IdentityRanges& ranges);
// e^{-alpha_1} A^0(z) e^{alpha_1} = E_0(z), coefficients z^{-1}..z^{z_max}
ResidualReport conjugation_check(int z_max, int cutoff);

// x_1...x_k (x_1 + ... + x_k)^{k-2} in variables x1..xk
TruncatedSeries tree_function(int k);
// sum over labelled trees of prod x_i^{valence}, by enumerating edge subsets
TruncatedSeries tree_sum_bruteforce(int k);
// sum over interaction diagrams on {1..r} of prod varsigma(t (sum_{i' below i} w_i') w_j),
// series in t (first variable) and w1..wr up to the given orders
TruncatedSeries interaction_sum(int r, int t_order, int w_order);

}  // namespace gwc
