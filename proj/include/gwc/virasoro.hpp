#pragma once

#include "gwc/brackets.hpp"
#include "gwc/grassmann.hpp"

#include <functional>
#include <optional>

namespace gwc {

// Terms are kept when every differentiated variable has level <= max_level,
// so the operator acts exactly on polynomials in variables of level <= max_level.
FormalOperator build_L(int k, int chi, int genus, int max_level);
FormalOperator build_D(int i, int k, bool barred, int genus, int max_level);

// ([A,B] or {A,B}) - expected, applied to one monomial
GrassmannPolynomial commutator_residual(const FormalOperator& A, const FormalOperator& B,
                                        const FormalOperator& expected, const Monomial& m,
                                        bool anticommutator = false);

// all monomials with levels <= max_level, at most max_even even factors and max_odd odd factors,
// optionally capped in total degree
std::vector<Monomial> monomial_basis(int genus, int max_level, int max_even, int max_odd, int max_total = -1);

// rewrites target (which must contain tau_{k+1}(1)) as a sum of brackets with fewer
// Identity insertions by extracting a coefficient of L_k Z = 0
BracketSum constraint_identity(int k, const Bracket& target);

// the reaction table (plus the L_{-1}, L_0 constant terms); same contract as constraint_identity.
// Returns nullopt for configurations it does not cover.
std::optional<BracketSum> reaction_identity(int k, const Bracket& target);

// picks the level of the Identity insertion to remove next
using Tau1Chooser = std::function<int(const Bracket&)>;
int highest_tau1(const Bracket& b);
BracketSum eliminate_tau1(const Bracket& b, const Tau1Chooser& choose = highest_tau1);

// coefficient of m in L_k Z built from engine values; zero when the constraint holds at m
Rational constraint_value(int k, const Monomial& m, int genus, int degree, const std::vector<Partition>& profiles);
// coefficient of m in op Z for any operator; op must be built with levels covering m
Rational annihilation_value(const FormalOperator& op, const Monomial& m, int genus, int degree,
                            const std::vector<Partition>& profiles);

// the multinomial identity used for the tube relation
bool multinomial_identity_holds(const std::vector<int>& ks, int l);

}  // namespace gwc
