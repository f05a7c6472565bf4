#pragma once

#include "gwc/grassmann.hpp"
#include "gwc/partitions.hpp"

#include <functional>
#include <string>
#include <vector>

namespace gwc {

// ordering of the enumerators is the canonical insertion order
enum class ClassKind { Identity = 0, Omega = 1, Alpha = 2, Beta = 3 };

struct CohClass {
  ClassKind kind = ClassKind::Identity;
  int index = 0;  // 1..g for Alpha/Beta, 0 otherwise

  bool odd() const { return kind == ClassKind::Alpha || kind == ClassKind::Beta; }
  static CohClass one() { return {ClassKind::Identity, 0}; }
  static CohClass omega() { return {ClassKind::Omega, 0}; }
  static CohClass alpha(int i) { return {ClassKind::Alpha, i}; }
  static CohClass beta(int i) { return {ClassKind::Beta, i}; }
  auto operator<=>(const CohClass&) const = default;
};

struct Insertion {
  int level = 0;
  CohClass cls;
  // canonical order: kind, index, level
  auto operator<=>(const Insertion& o) const {
    if (auto c = cls <=> o.cls; c != 0) return c;
    return level <=> o.level;
  }
  bool operator==(const Insertion&) const = default;
};

inline Insertion tau(int level, CohClass c) { return {level, c}; }

struct Bracket {
  int genus = 0;
  int degree = 0;
  std::vector<Insertion> insertions;
  std::vector<Partition> profiles;

  int euler_char() const { return 2 - 2 * genus - static_cast<int>(profiles.size()); }
  int count(ClassKind k) const;
  auto operator<=>(const Bracket&) const = default;
};

// throws DomainError on negative levels, bad class indices or profile sizes
void validate(const Bracket& b);
std::string to_string(const Insertion& i);
std::string to_string(const Bracket& b);

struct Normalized {
  int sign = 1;  // 0 when a repeated odd insertion kills the bracket
  Bracket canonical;
};
Normalized normalize(const Bracket& b);

// integral of g1 cup g2 for odd classes
Rational pairing(const CohClass& g1, const CohClass& g2);

class BracketSum {
 public:
  BracketSum() = default;
  static BracketSum single(const Bracket& b, const Rational& c = 1);
  // normalizes b and merges equal brackets
  void add(const Bracket& b, const Rational& c);
  void add(const BracketSum& o, const Rational& scale = 1);
  const std::vector<std::pair<Rational, Bracket>>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::string to_string() const;

 private:
  std::vector<std::pair<Rational, Bracket>> terms_;
};

// removes odd insertions by the sum over fixed-point-free involutions; b must carry no Identity insertions
BracketSum odd_reduce(const Bracket& b);

// monomial of a canonical bracket and back
Monomial bracket_monomial(const Bracket& canonical);
Bracket monomial_bracket(const Monomial& m, int genus, int degree, const std::vector<Partition>& profiles);

using PipelineLog = std::vector<std::string>;

// exact disconnected invariant; log receives one line per reduction step when given
Rational evaluate(const Bracket& b, PipelineLog* log = nullptr);
Rational evaluate(const BracketSum& s);
void clear_evaluation_memo();

}  // namespace gwc
