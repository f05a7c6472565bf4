#include "gwc/virasoro.hpp"

#include <algorithm>
#include <set>

namespace gwc {

namespace {

FreeVariable t0(int l) { return {Family::t0, 0, l}; }
FreeVariable t1(int l) { return {Family::t1, 0, l}; }
FreeVariable s(int i, int l) { return {Family::s, i, l}; }
FreeVariable sbar(int i, int l) { return {Family::sbar, i, l}; }

void add_shift(FormalOperator& op, const Rational& c, FreeVariable x, FreeVariable y) {
  if (x.level < 0 || y.level < 0) return;
  op.add({c, {x}, {y}});
}

}  // namespace

FormalOperator build_L(int k, int chi, int genus, int max_level) {
  if (k < -1) throw DomainError("L_k requires k >= -1");
  FormalOperator op;
  if (k + 1 <= max_level) op.add({-Rational(factorial(k + 1)), {}, {t0(k + 1)}});
  if (k >= 0 && k <= max_level)
    op.add({-Rational(chi) * Rational(factorial(k + 1)) * harmonic(k + 1), {}, {t1(k)}});
  for (int l = 0; k + l - 1 <= max_level; ++l) {
    Rational pl = pochhammer(l, k + 1);
    Rational pl1 = pochhammer(l + 1, k + 1);
    if (k + l >= 0 && k + l <= max_level) {
      if (pl != 0) add_shift(op, pl, t0(l), t0(k + l));
      add_shift(op, pl1, t1(l), t1(k + l));
      for (int i = 1; i <= genus; ++i) {
        add_shift(op, pl1, s(i, l), s(i, k + l));
        if (pl != 0) add_shift(op, pl, sbar(i, l), sbar(i, k + l));
      }
    }
    // (l)_{k+1} sum_{r=l}^{k+l} 1/r read as d/dl (l)_{k+1}
    if (k + l - 1 >= 0 && k + l - 1 <= max_level) {
      Rational h = pochhammer_derivative(l, k + 1);
      if (h != 0 && chi != 0) add_shift(op, Rational(chi) * h, t0(l), t1(k + l - 1));
    }
  }
  if (chi != 0) {
    for (int l = 0; l <= k - 2; ++l) {
      if (l > max_level || k - l - 2 > max_level) continue;
      Rational c = Rational(chi, 2) * Rational(factorial(l + 1) * factorial(k - l - 1));
      op.add({c, {}, {t1(l), t1(k - l - 2)}});
    }
  }
  if (k == -1) {
    op.add({1, {t0(0), t1(0)}, {}});
    for (int i = 1; i <= genus; ++i) op.add({1, {s(i, 0), sbar(i, 0)}, {}});
  }
  if (k == 0 && chi != 0) op.add({Rational(chi, 2), {t0(0), t0(0)}, {}});
  return op;
}

FormalOperator build_D(int i, int k, bool barred, int genus, int max_level) {
  if (k < -1) throw DomainError("D_k requires k >= -1");
  if (i < 1 || i > genus) throw DomainError("D operator index outside 1..g");
  FormalOperator op;
  auto own = [&](int l) { return barred ? sbar(i, l) : s(i, l); };
  auto other = [&](int l) { return barred ? s(i, l) : sbar(i, l); };
  if (k + 1 <= max_level) op.add({-Rational(factorial(k + 1)), {}, {own(k + 1)}});
  for (int l = 0; k + l <= max_level; ++l) {
    if (k + l < 0) continue;
    Rational pl = pochhammer(l, k + 1);
    Rational pl1 = pochhammer(l + 1, k + 1);
    if (pl != 0) add_shift(op, pl, t0(l), own(k + l));
    add_shift(op, barred ? -pl1 : pl1, other(l), t1(k + l));
  }
  // the unstable degree-zero term t0_0 d/ds_{-1}, read through the pairing of alpha_i with beta_i
  if (k == -1) op.add({barred ? -1 : 1, {t0(0), other(0)}, {}});
  return op;
}

GrassmannPolynomial commutator_residual(const FormalOperator& A, const FormalOperator& B,
                                        const FormalOperator& expected, const Monomial& m,
                                        bool anticommutator) {
  auto p = GrassmannPolynomial::from_monomial(m);
  auto r = apply(A, apply(B, p));
  if (anticommutator) r += apply(B, apply(A, p));
  else r -= apply(B, apply(A, p));
  r -= apply(expected, p);
  return r;
}

std::vector<Monomial> monomial_basis(int genus, int max_level, int max_even, int max_odd, int max_total) {
  std::vector<std::uint32_t> vars;
  for (int f = 0; f < 4; ++f) {
    int imax = f < 2 ? 0 : genus;
    for (int i = f < 2 ? 0 : 1; i <= imax; ++i)
      for (int l = 0; l <= max_level; ++l) vars.push_back(FreeVariable{static_cast<Family>(f), i, l}.code());
  }
  std::sort(vars.begin(), vars.end());
  std::vector<Monomial> out;
  Monomial cur;
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t start, int ne, int no) {
    out.push_back(cur);
    if (max_total >= 0 && ne + no >= max_total) return;
    for (std::size_t v = start; v < vars.size(); ++v) {
      bool odd = code_is_odd(vars[v]);
      if (odd ? no >= max_odd : ne >= max_even) continue;
      cur.push_back(vars[v]);
      rec(odd ? v + 1 : v, ne + (odd ? 0 : 1), no + (odd ? 1 : 0));
      cur.pop_back();
    }
  };
  rec(0, 0, 0);
  return out;
}

namespace {

int max_level_of(const Monomial& m) {
  int lv = 0;
  for (auto c : m) lv = std::max(lv, FreeVariable::decode(c).level);
  return lv;
}

// monomials n with [m](op n) possibly nonzero
std::set<Monomial> candidates(const FormalOperator& op, const Monomial& m) {
  std::set<Monomial> out;
  for (const auto& t : op.terms()) {
    Monomial n = m;
    bool ok = true;
    for (const auto& x : t.mult) {
      auto it = std::find(n.begin(), n.end(), x.code());
      if (it == n.end()) {
        ok = false;
        break;
      }
      n.erase(it);
    }
    if (!ok) continue;
    for (const auto& y : t.deriv) {
      auto c = y.code();
      auto pos = std::lower_bound(n.begin(), n.end(), c);
      if (code_is_odd(c) && pos != n.end() && *pos == c) {
        ok = false;
        break;
      }
      n.insert(pos, c);
    }
    if (ok) out.insert(std::move(n));
  }
  return out;
}

// weights w_n = [m](op n) / n! so that [m](op Z) = sum_n w_n <B_n>
std::vector<std::pair<Monomial, Rational>> weights(const FormalOperator& op, const Monomial& m) {
  std::vector<std::pair<Monomial, Rational>> out;
  for (const auto& n : candidates(op, m)) {
    Rational w = apply(op, GrassmannPolynomial::from_monomial(n)).coefficient(m);
    if (w != 0) out.emplace_back(n, w / monomial_factorial(n));
  }
  return out;
}

}  // namespace

BracketSum constraint_identity(int k, const Bracket& target) {
  validate(target);
  if (k < -1) throw DomainError("constraint_identity: k must be >= -1");
  auto norm = normalize(target);
  if (norm.sign == 0) return {};
  const Bracket& T = norm.canonical;
  Monomial m = bracket_monomial(T);
  std::uint32_t lead = t0(k + 1).code();
  auto it = std::find(m.begin(), m.end(), lead);
  if (it == m.end())
    throw DomainError("constraint_identity: " + to_string(target) + " has no t" + std::to_string(k + 1) + "(1)");
  Monomial mp = m;
  mp.erase(mp.begin() + (it - m.begin()));

  auto op = build_L(k, T.euler_char(), T.genus, max_level_of(m) + std::max(k, 0) + 2);
  Rational w0 = 0;
  auto ws = weights(op, mp);
  for (const auto& [n, w] : ws)
    if (n == m) w0 = w;
  if (w0 == 0) throw DomainError("constraint_identity: degenerate leading coefficient");
  BracketSum out;
  for (const auto& [n, w] : ws) {
    if (n == m) continue;
    out.add(monomial_bracket(n, T.genus, T.degree, T.profiles), -Rational(norm.sign) * w / w0);
  }
  return out;
}

std::optional<BracketSum> reaction_identity(int k, const Bracket& target) {
  validate(target);
  int K = k + 1;
  std::vector<Insertion> rest = target.insertions;
  auto it = std::find(rest.begin(), rest.end(), tau(K, CohClass::one()));
  if (it == rest.end()) throw DomainError("reaction_identity: missing t" + std::to_string(K) + "(1)");
  rest.erase(it);
  const int chi = target.euler_char();
  Rational kf(factorial(K));
  BracketSum out;
  auto emit = [&](std::vector<Insertion> ins, const Rational& c) {
    if (c == 0) return;
    out.add(Bracket{target.genus, target.degree, std::move(ins), target.profiles}, c);
  };

  if (K == 0) {
    for (std::size_t p = 0; p < rest.size(); ++p)
      for (std::size_t q = 0; q < rest.size(); ++q)
        if (rest[p].level == 0 && rest[q].level == 0 && rest[p].cls.kind == ClassKind::Alpha &&
            rest[q].cls == CohClass::beta(rest[p].cls.index))
          return std::nullopt;
  }

  for (std::size_t p = 0; p < rest.size(); ++p) {
    const Insertion& x = rest[p];
    int l = x.level;
    auto replaced = [&](Insertion y) {
      auto ins = rest;
      ins[p] = y;
      return ins;
    };
    switch (x.cls.kind) {
      case ClassKind::Identity:
        if (K + l - 1 >= 0) emit(replaced(tau(K + l - 1, CohClass::one())), pochhammer(l, K) / kf);
        if (K + l - 2 >= 0 && chi != 0)
          emit(replaced(tau(K + l - 2, CohClass::omega())), Rational(chi) * pochhammer_derivative(l, K) / kf);
        break;
      case ClassKind::Omega:
        if (K + l - 1 >= 0) emit(replaced(tau(K + l - 1, x.cls)), pochhammer(l + 1, K) / kf);
        break;
      case ClassKind::Alpha:
        if (K + l - 1 >= 0) emit(replaced(tau(K + l - 1, x.cls)), pochhammer(l + 1, K) / kf);
        break;
      case ClassKind::Beta:
        if (K + l - 1 >= 0) emit(replaced(tau(K + l - 1, x.cls)), pochhammer(l, K) / kf);
        break;
    }
  }
  if (K >= 1 && chi != 0) {
    auto ins = rest;
    ins.push_back(tau(K - 1, CohClass::omega()));
    emit(ins, -Rational(chi) * harmonic(K));
    for (int i = 0; i <= K - 3; ++i) {
      auto ins2 = rest;
      ins2.push_back(tau(i, CohClass::omega()));
      ins2.push_back(tau(K - i - 3, CohClass::omega()));
      emit(ins2, Rational(chi, 2) * Rational(factorial(i + 1) * factorial(K - i - 2)) / kf);
    }
  }
  auto drop_pair = [&](std::size_t p, std::size_t q) {
    std::vector<Insertion> ins;
    for (std::size_t r = 0; r < rest.size(); ++r)
      if (r != p && r != q) ins.push_back(rest[r]);
    return ins;
  };
  if (K == 0) {
    for (std::size_t p = 0; p < rest.size(); ++p)
      for (std::size_t q = 0; q < rest.size(); ++q)
        if (rest[p] == tau(0, CohClass::one()) && rest[q] == tau(0, CohClass::omega())) emit(drop_pair(p, q), 1);
  }
  if (K == 1 && chi != 0) {
    for (std::size_t p = 0; p < rest.size(); ++p)
      for (std::size_t q = p + 1; q < rest.size(); ++q)
        if (rest[p] == tau(0, CohClass::one()) && rest[q] == tau(0, CohClass::one()))
          emit(drop_pair(p, q), Rational(chi));
  }
  return out;
}

int highest_tau1(const Bracket& b) {
  int top = -1;
  for (const auto& i : b.insertions)
    if (i.cls.kind == ClassKind::Identity) top = std::max(top, i.level);
  return top;
}

namespace {
void eliminate_into(const Bracket& b, const Rational& c, const Tau1Chooser& choose, BracketSum& out) {
  if (b.count(ClassKind::Identity) == 0) {
    out.add(b, c);
    return;
  }
  int level = choose(b);
  BracketSum step = constraint_identity(level - 1, b);
  for (const auto& [c2, b2] : step.terms()) eliminate_into(b2, c * c2, choose, out);
}
}  // namespace

BracketSum eliminate_tau1(const Bracket& b, const Tau1Chooser& choose) {
  validate(b);
  BracketSum out;
  eliminate_into(b, 1, choose, out);
  return out;
}

Rational constraint_value(int k, const Monomial& m, int genus, int degree, const std::vector<Partition>& profiles) {
  int chi = 2 - 2 * genus - static_cast<int>(profiles.size());
  auto op = build_L(k, chi, genus, max_level_of(m) + std::max(k, 0) + 3);
  return annihilation_value(op, m, genus, degree, profiles);
}

Rational annihilation_value(const FormalOperator& op, const Monomial& m, int genus, int degree,
                            const std::vector<Partition>& profiles) {
  Rational total = 0;
  for (const auto& [n, w] : weights(op, m)) total += w * evaluate(monomial_bracket(n, genus, degree, profiles));
  return total;
}

bool multinomial_identity_holds(const std::vector<int>& ks, int l) {
  if (ks.empty()) throw DomainError("multinomial identity needs at least one k");
  auto multi = [](std::vector<int> parts) -> Rational {
    for (int p : parts)
      if (p < 0) return 0;
    return Rational(multinomial(parts));
  };
  std::vector<int> lhs_parts = ks;
  lhs_parts.push_back(l);
  Rational lhs = multi(lhs_parts);

  std::vector<int> first(ks.begin() + 1, ks.end());
  first.push_back(ks[0] + l - 1);
  Rational rhs = binomial(ks[0] + l, ks[0]) * multi(first);
  for (std::size_t j = 1; j < ks.size(); ++j) {
    std::vector<int> parts(ks.begin() + 1, ks.end());
    parts[j - 1] = ks[j] + ks[0] - 1;
    parts.push_back(l);
    rhs += binomial(ks[0] + ks[j] - 1, ks[0]) * multi(parts);
  }
  return lhs == rhs;
}

}  // namespace gwc
