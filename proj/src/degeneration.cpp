#include "gwc/degeneration.hpp"

#include <algorithm>

namespace gwc {

Rational degenerate_type1(const Bracket& b, const DegenerationSplit& split) {
  validate(b);
  const int g1 = split.genus_first;
  const int g2 = b.genus - g1;
  if (g1 < 0 || g2 < 0) throw DomainError("type (i) split: genus out of range");
  if (split.insertion_side.size() != b.insertions.size() || split.profile_side.size() != b.profiles.size())
    throw DomainError("type (i) split: side vectors do not match the bracket");
  std::vector<std::size_t> ones;
  for (std::size_t i = 0; i < b.insertions.size(); ++i) {
    const auto& ins = b.insertions[i];
    int side = split.insertion_side[i];
    if (ins.cls.kind == ClassKind::Identity) {
      ones.push_back(i);
      continue;
    }
    if (side != 0 && side != 1) throw DomainError("type (i) split: side must be 0 or 1");
    if (ins.cls.odd() && side != (ins.cls.index <= g1 ? 0 : 1))
      throw DomainError("type (i) split: odd class on the wrong component");
  }
  std::vector<Partition> prof[2];
  for (std::size_t j = 0; j < b.profiles.size(); ++j) {
    int side = split.profile_side[j];
    if (side != 0 && side != 1) throw DomainError("type (i) split: side must be 0 or 1");
    prof[side].push_back(b.profiles[j]);
  }
  if (ones.size() > 20) throw DomainError("type (i) split: too many Identity insertions");

  Rational total = 0;
  const auto mus = enumerate_partitions(b.degree);
  for (unsigned long mask = 0; mask < (1UL << ones.size()); ++mask) {
    std::vector<int> side = split.insertion_side;
    for (std::size_t t = 0; t < ones.size(); ++t) side[ones[t]] = (mask >> t) & 1UL ? 0 : 1;
    std::vector<Insertion> part[2];
    int sign_swaps = 0, odd_right = 0;
    for (std::size_t i = 0; i < b.insertions.size(); ++i) {
      Insertion ins = b.insertions[i];
      if (ins.cls.odd()) {
        if (side[i] == 1) {
          ++odd_right;
          ins.cls.index -= g1;
        } else {
          sign_swaps += odd_right;
        }
      }
      part[side[i]].push_back(ins);
    }
    Rational sign = sign_swaps % 2 ? -1 : 1;
    for (const auto& mu : mus) {
      auto p0 = prof[0];
      auto p1 = prof[1];
      p0.push_back(mu);
      p1.push_back(mu);
      Rational left = evaluate(Bracket{g1, b.degree, part[0], p0});
      if (left == 0) continue;
      Rational right = evaluate(Bracket{g2, b.degree, part[1], p1});
      total += sign * left * Rational(aut_factor(mu)) * right;
    }
  }
  return total;
}

Rational degenerate_type2(const Bracket& b) {
  validate(b);
  if (b.genus < 1) throw DomainError("type (ii) degeneration needs genus >= 1");
  for (const auto& ins : b.insertions)
    if (ins.cls.odd() && ins.cls.index == b.genus)
      throw DomainError("type (ii) degeneration: class index " + std::to_string(b.genus) + " does not survive");
  Rational total = 0;
  for (const auto& mu : enumerate_partitions(b.degree)) {
    auto profiles = b.profiles;
    profiles.push_back(mu);
    profiles.push_back(mu);
    total += Rational(aut_factor(mu)) * evaluate(Bracket{b.genus - 1, b.degree, b.insertions, profiles});
  }
  return total;
}

Rational tube_bracket(const Partition& mu, const std::vector<Insertion>& ins, const Partition& nu) {
  if (size(mu) != size(nu)) throw DomainError("tube: |mu| != |nu|");
  return evaluate(Bracket{0, size(mu), ins, {mu, nu}});
}

Rational tube_reduction(const Partition& mu, int l, const std::vector<int>& ks, const Partition& nu) {
  if (size(mu) != size(nu)) throw DomainError("tube_reduction: |mu| != |nu|");
  if (l < 0) throw DomainError("tube_reduction: negative l");
  std::vector<int> parts = ks;
  int level = l;
  for (int k : ks) {
    if (k < 0) throw DomainError("tube_reduction: negative k");
    level += k - 1;
  }
  if (level < 0) return 0;
  parts.push_back(l);
  return Rational(multinomial(parts)) * tube_bracket(mu, {tau(level, CohClass::omega())}, nu);
}

Rational rubber_bracket(const Partition& mu, int k, const std::vector<int>& levels, const Partition& nu) {
  if (k < -1) throw DomainError("rubber_bracket: k must be >= -1");
  if (size(mu) != size(nu)) throw DomainError("rubber_bracket: |mu| != |nu|");
  for (int l : levels)
    if (l < 0) throw DomainError("rubber_bracket: negative level");
  if (k == -1) {
    if (!levels.empty()) return 0;
    return mu == nu ? Rational(1) / Rational(aut_factor(mu)) : Rational(0);
  }
  if (levels.empty()) {
    std::vector<Insertion> ins(k + 1, tau(1, CohClass::omega()));
    return tube_bracket(mu, ins, nu) / Rational(factorial(k + 1));
  }
  const std::size_t n = levels.size();
  if (k == 0) {
    std::vector<Insertion> ins{tau(levels[0], CohClass::omega())};
    for (std::size_t i = 1; i < n; ++i) ins.push_back(tau(levels[i], CohClass::one()));
    return tube_bracket(mu, ins, nu);
  }
  Rational total = 0;
  const auto etas = enumerate_partitions(size(mu));
  for (unsigned long mask = 0; mask < (1UL << (n - 1)); ++mask) {
    std::vector<int> rubber_levels;
    std::vector<Insertion> tube_ins{tau(levels[0], CohClass::omega())};
    for (std::size_t i = 1; i < n; ++i) {
      if ((mask >> (i - 1)) & 1UL) tube_ins.push_back(tau(levels[i], CohClass::one()));
      else rubber_levels.push_back(levels[i]);
    }
    for (const auto& eta : etas) {
      Rational r = rubber_bracket(mu, k - 1, rubber_levels, eta);
      if (r == 0) continue;
      total += r * Rational(aut_factor(eta)) * tube_bracket(eta, tube_ins, nu);
    }
  }
  return total;
}

DiagonalClass kunneth_diagonal(int r) {
  if (r < 2) throw DomainError("kunneth_diagonal: r must be >= 2");
  DiagonalClass d;
  d.r = r;
  for (int p = 0; p < r; ++p) {
    std::vector<CohClass> slots(r, CohClass::omega());
    slots[p] = CohClass::one();
    d.even.emplace_back(1, slots);
  }
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      std::vector<CohClass> a(r, CohClass::omega()), b(r, CohClass::omega());
      a[i] = CohClass::alpha(1);
      a[j] = CohClass::beta(1);
      b[i] = CohClass::beta(1);
      b[j] = CohClass::alpha(1);
      d.odd.emplace_back(-1, a);
      d.odd.emplace_back(1, b);
    }
  return d;
}

Rational monodromy_residual(const MonodromySpec& spec) {
  const std::size_t nI = spec.n_levels.size();
  if (nI == 0 || spec.m_levels.size() != nI) throw DomainError("monodromy: need |I| = |J| > 0");
  for (const auto& ins : spec.N)
    if (ins.cls.odd()) throw DomainError("monodromy: N must be even");
  std::vector<bool> in_delta(nI, false);
  for (int x : spec.delta) {
    if (x < 0 || static_cast<std::size_t>(x) >= nI || in_delta[x]) throw DomainError("monodromy: bad delta");
    in_delta[x] = true;
  }
  if (spec.delta.size() == nI) throw DomainError("monodromy: delta must be a proper subset of I");
  const std::size_t total = 2 * nI;
  Rational sum = 0;
  for (unsigned long D = 0; D < (1UL << total); ++D) {
    if (static_cast<std::size_t>(__builtin_popcountl(D)) != nI) continue;
    bool contains = true;
    for (std::size_t x = 0; x < nI; ++x)
      if (in_delta[x] && !((D >> x) & 1UL)) contains = false;
    if (!contains) continue;
    Bracket b{1, spec.degree, spec.N, {}};
    for (std::size_t x = 0; x < total; ++x) {
      int level = x < nI ? spec.n_levels[x] : spec.m_levels[x - nI];
      b.insertions.push_back(tau(level, (D >> x) & 1UL ? CohClass::alpha(1) : CohClass::beta(1)));
    }
    sum += evaluate(b);
  }
  return sum;
}

Rational elliptic_vanishing_residual(const EllipticSpec& spec) {
  const std::size_t nK = spec.l_levels.size();
  std::vector<int> seen(nK, 0);
  for (const auto& part : spec.parts) {
    if (part.size() < 2) throw DomainError("elliptic vanishing: parts must have size >= 2");
    for (int x : part) {
      if (x < 0 || static_cast<std::size_t>(x) >= nK) throw DomainError("elliptic vanishing: bad marking");
      ++seen[x];
    }
  }
  for (int c : seen)
    if (c != 1) throw DomainError("elliptic vanishing: parts must partition K");

  std::vector<DiagonalClass> diags;
  for (const auto& part : spec.parts) diags.push_back(kunneth_diagonal(static_cast<int>(part.size())));
  std::vector<std::vector<std::pair<Rational, std::vector<CohClass>>>> choices;
  for (const auto& d : diags) {
    auto all = d.even;
    all.insert(all.end(), d.odd.begin(), d.odd.end());
    choices.push_back(std::move(all));
  }

  Rational sum = 0;
  std::vector<std::size_t> pick(choices.size(), 0);
  while (true) {
    Rational coef = 1;
    Bracket b{1, spec.degree, {}, {}};
    for (int o : spec.M_levels) b.insertions.push_back(tau(o, CohClass::one()));
    for (std::size_t p = 0; p < spec.parts.size(); ++p) {
      const auto& [c, classes] = choices[p][pick[p]];
      coef *= c;
      for (std::size_t s = 0; s < spec.parts[p].size(); ++s)
        b.insertions.push_back(tau(spec.l_levels[spec.parts[p][s]], classes[s]));
    }
    sum += coef * evaluate(b);
    std::size_t p = 0;
    while (p < pick.size() && ++pick[p] == choices[p].size()) pick[p++] = 0;
    if (p == pick.size()) break;
  }
  return sum;
}

}  // namespace gwc
