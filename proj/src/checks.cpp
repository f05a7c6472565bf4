#include "gwc/checks.hpp"

#include "gwc/brackets.hpp"
#include "gwc/cap.hpp"
#include "gwc/degeneration.hpp"
#include "gwc/hurwitz.hpp"
#include "gwc/virasoro.hpp"

#include <functional>
#include <map>
#include <random>

namespace gwc {

namespace {

void note(ResidualReport& rep, bool ok, const std::function<std::string()>& what) {
  ++rep.checked;
  if (ok) return;
  ++rep.failed;
  if (rep.failures.size() < 20) rep.failures.push_back(what());
}

std::vector<Insertion> omegas(const std::vector<int>& levels) {
  std::vector<Insertion> out;
  for (int l : levels) out.push_back(tau(l, CohClass::omega()));
  return out;
}

// weakly decreasing level lists of length <= max_len with entries in [0, max_level]
std::vector<std::vector<int>> level_lists(int max_len, int max_level) {
  std::vector<std::vector<int>> out{{}};
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int hi) {
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int l = 0; l <= hi; ++l) {
      cur.push_back(l);
      out.push_back(cur);
      rec(l);
      cur.pop_back();
    }
  };
  rec(max_level);
  return out;
}

// all partitions with 1 <= size <= max_size
std::vector<Partition> partitions_up_to(int max_size) {
  std::vector<Partition> out;
  for (int d = 1; d <= max_size; ++d)
    for (auto& p : enumerate_partitions(d)) out.push_back(std::move(p));
  return out;
}

int level_of(std::uint32_t code) { return FreeVariable::decode(code).level; }

}  // namespace

ResidualReport worked_example_check(int max_degree) {
  ResidualReport rep;
  rep.name = "worked-example";
  for (int genus : {0, 1}) {
    const Rational chi = 2 - 2 * genus;
    for (int d = 0; d <= max_degree; ++d) {
      Rational lhs = evaluate(Bracket{genus, d, {tau(2, CohClass::one()), tau(3, CohClass::omega())}, {}});
      Rational rhs = Rational(binomial(5, 2)) * evaluate(Bracket{genus, d, omegas({4}), {}}) -
                     Rational(3, 2) * chi * evaluate(Bracket{genus, d, omegas({1, 3}), {}});
      note(rep, lhs == rhs, [&] { return "genus " + std::to_string(genus) + " degree " + std::to_string(d); });
    }
  }
  return rep;
}

ResidualReport operator_algebra_check(int max_genus, int max_level, int n_max, int max_factors) {
  ResidualReport rep;
  rep.name = "operator-algebra";
  for (int g = 0; g <= max_genus; ++g) {
    const int chi = 2 - 2 * g;
    const int op_level = max_level + 3;
    const auto basis = monomial_basis(g, max_level, max_factors, max_factors, max_factors);
    std::vector<GrassmannPolynomial> single;
    for (const auto& m : basis) single.push_back(GrassmannPolynomial::from_monomial(m));
    std::map<int, FormalOperator> L;
    std::map<std::tuple<int, int, bool>, FormalOperator> D;
    for (int k = -1; k <= 2 * n_max; ++k) {
      L[k] = build_L(k, chi, g, op_level);
      for (int i = 1; i <= g; ++i)
        for (bool bar : {false, true}) D[{i, k, bar}] = build_D(i, k, bar, g, op_level);
    }
    // images of the basis monomials, computed once per operator
    std::map<const FormalOperator*, std::vector<GrassmannPolynomial>> images;
    auto img = [&](const FormalOperator& op) -> const std::vector<GrassmannPolynomial>& {
      auto it = images.find(&op);
      if (it != images.end()) return it->second;
      std::vector<GrassmannPolynomial> v;
      v.reserve(basis.size());
      for (const auto& p : single) v.push_back(apply(op, p));
      return images.emplace(&op, std::move(v)).first->second;
    };
    // A(B m) -/+ B(A m) - c E m
    auto run = [&](const FormalOperator& A, const FormalOperator& B, const FormalOperator* E, const Rational& c,
                   bool anti, const std::string& label) {
      const auto &a = img(A), &b = img(B);
      const std::vector<GrassmannPolynomial>* e = E ? &img(*E) : nullptr;
      for (std::size_t x = 0; x < basis.size(); ++x) {
        GrassmannPolynomial r = apply(A, b[x]);
        if (anti) r += apply(B, a[x]);
        else r -= apply(B, a[x]);
        if (e)
          for (const auto& [m2, c2] : (*e)[x].terms()) r.add(m2, -c * c2);
        note(rep, r.is_zero(),
             [&] { return label + " g=" + std::to_string(g) + " on " + monomial_to_string(basis[x]); });
      }
    };
    // the (m, n) residual is minus the (n, m) one for [L,L] and the symmetric anticommutators
    for (int n = -1; n <= n_max; ++n)
      for (int m = -1; m <= n_max; ++m) {
        const std::string nm = std::to_string(n) + "," + std::to_string(m);
        const bool inside = n + m >= -1;
        if (n <= m) run(L[n], L[m], inside ? &L[n + m] : nullptr, n - m, false, "[L,L] " + nm);
        for (int i = 1; i <= g; ++i) {
          run(L[n], D[{i, m, false}], inside ? &D[{i, n + m, false}] : nullptr, -(m + 1), false, "[L,D] " + nm);
          run(L[n], D[{i, m, true}], inside ? &D[{i, n + m, true}] : nullptr, n - m, false, "[L,Dbar] " + nm);
          for (int j = 1; j <= g; ++j) {
            const bool first = std::make_pair(n, i) <= std::make_pair(m, j);
            if (first) run(D[{i, n, false}], D[{j, m, false}], nullptr, 0, true, "{D,D} " + nm);
            run(D[{i, n, false}], D[{j, m, true}], nullptr, 0, true, "{D,Dbar} " + nm);
            if (first) run(D[{i, n, true}], D[{j, m, true}], nullptr, 0, true, "{Dbar,Dbar} " + nm);
          }
        }
      }
  }
  return rep;
}

ResidualReport constraint_vanishing_check(int max_degree, int max_total_level, int k_max, int max_factors) {
  ResidualReport rep;
  rep.name = "constraint-vanishing";
  std::vector<Monomial> monos;
  for (const auto& m : monomial_basis(0, max_total_level, max_factors, 0, max_factors)) {
    int total = 0;
    for (auto c : m) total += level_of(c);
    if (total >= 1 && total <= max_total_level) monos.push_back(m);
  }
  for (int d = 1; d <= max_degree; ++d)
    for (const auto& nu : enumerate_partitions(d))
      for (int k = -1; k <= k_max; ++k)
        for (const auto& m : monos) {
          Rational r = constraint_value(k, m, 0, d, {nu});
          note(rep, r == 0, [&] {
            return "L_" + std::to_string(k) + " d=" + std::to_string(d) + " nu=" + to_string(nu) + " at " +
                   monomial_to_string(m);
          });
        }
  return rep;
}

ResidualReport fock_stationary_check(int max_degree, int max_level, int max_omega) {
  ResidualReport rep;
  rep.name = "fock-stationary";
  auto lists = level_lists(max_omega, max_level);
  for (const auto& nu : partitions_up_to(max_degree))
    for (const auto& ks : lists) {
      if (ks.empty()) continue;
      Rational a = cap_coefficient(ks, {}, nu);
      Rational b = stationary_invariant({0, size(nu), ks, {nu}});
      note(rep, a == b, [&] { return to_string(Bracket{0, size(nu), omegas(ks), {nu}}); });
    }
  return rep;
}

ResidualReport fock_mixed_check(int max_degree, int max_level) {
  ResidualReport rep;
  rep.name = "fock-mixed";
  auto ones = level_lists(2, max_level);
  auto oms = level_lists(1, max_level);
  for (const auto& nu : partitions_up_to(max_degree))
    for (const auto& ls : ones) {
      if (ls.empty()) continue;
      for (const auto& ks : oms) {
        Bracket b{0, size(nu), omegas(ks), {nu}};
        for (int l : ls) b.insertions.push_back(tau(l, CohClass::one()));
        Rational a = cap_coefficient(ks, ls, nu);
        note(rep, a == evaluate(b), [&] { return to_string(b); });
      }
    }
  return rep;
}

ResidualReport fock_cutoff_check(int max_degree, int max_level) {
  ResidualReport rep;
  rep.name = "fock-cutoff";
  for (const auto& nu : partitions_up_to(max_degree))
    for (const auto& ls : level_lists(2, max_level))
      for (const auto& ks : level_lists(1, max_level)) {
        const int N = cap_cutoff(size(nu), ks, ls);
        note(rep, cap_coefficient(ks, ls, nu, N) == cap_coefficient(ks, ls, nu, N + 2), [&] {
          return "nu=" + to_string(nu) + " cutoff " + std::to_string(N);
        });
      }
  return rep;
}

ResidualReport degeneration_type2_check(int max_degree, int max_level) {
  ResidualReport rep;
  rep.name = "degeneration-ii";
  for (int g = 1; g <= 2; ++g)
    for (int d = 1; d <= max_degree; ++d)
      for (const auto& ks : level_lists(2, max_level)) {
        Bracket b{g, d, omegas(ks), {}};
        note(rep, degenerate_type2(b) == evaluate(b), [&] { return to_string(b); });
      }
  return rep;
}

ResidualReport degeneration_type1_check(int max_degree, int max_level) {
  ResidualReport rep;
  rep.name = "degeneration-i";
  for (int g = 0; g <= 2; ++g)
    for (int d = 1; d <= max_degree; ++d)
      for (const auto& ks : level_lists(2, max_level))
        for (int g1 = 0; g1 <= g; ++g1)
          for (unsigned mask = 0; mask < (1u << ks.size()); ++mask) {
            Bracket b{g, d, omegas(ks), {}};
            DegenerationSplit s{g1, {}, {}};
            for (std::size_t i = 0; i < ks.size(); ++i) s.insertion_side.push_back((mask >> i) & 1u);
            note(rep, degenerate_type1(b, s) == evaluate(b), [&] { return to_string(b) + " split " + std::to_string(g1); });
          }
  // relative target: the profile may go to either side
  for (int d = 1; d <= std::min(max_degree, 3); ++d)
    for (const auto& nu : enumerate_partitions(d))
      for (const auto& ks : level_lists(1, max_level))
        for (int side = 0; side <= 1; ++side) {
          Bracket b{0, d, omegas(ks), {nu}};
          DegenerationSplit s{0, std::vector<int>(ks.size(), 1 - side), {side}};
          note(rep, degenerate_type1(b, s) == evaluate(b), [&] { return to_string(b); });
        }
  // odd classes split between the two elliptic components
  for (int d = 1; d <= std::min(max_degree, 2); ++d)
    for (int a = 0; a <= 1; ++a)
      for (int c = 0; c <= std::min(max_level, 2); ++c) {
        Bracket b{2, d,
                  {tau(c, CohClass::omega()), tau(a, CohClass::alpha(1)), tau(0, CohClass::beta(1)),
                   tau(0, CohClass::alpha(2)), tau(1, CohClass::beta(2))},
                  {}};
        for (int side = 0; side <= 1; ++side) {
          DegenerationSplit s{1, {side, 0, 0, 1, 1}, {}};
          note(rep, degenerate_type1(b, s) == evaluate(b), [&] { return to_string(b); });
        }
      }
  return rep;
}

ResidualReport tube_check(int max_size, int max_markings, int max_level) {
  ResidualReport rep;
  rep.name = "tube";
  for (int d = 1; d <= max_size; ++d) {
    auto parts = enumerate_partitions(d);
    for (const auto& mu : parts)
      for (const auto& nu : parts)
        for (int l = 0; l <= max_level; ++l)
          for (const auto& ks : level_lists(max_markings, max_level)) {
            if (ks.empty()) continue;
            int level = l;
            for (int k : ks) level += k - 1;
            // the relation is stated for stable configurations only
            if (level < 0) continue;
            std::vector<Insertion> ins{tau(l, CohClass::omega())};
            for (int k : ks) ins.push_back(tau(k, CohClass::one()));
            note(rep, tube_reduction(mu, l, ks, nu) == tube_bracket(mu, ins, nu),
                 [&] { return to_string(Bracket{0, d, ins, {mu, nu}}); });
          }
  }
  return rep;
}

ResidualReport rubber_check(int max_size, int max_markings, int k_max, int max_level) {
  ResidualReport rep;
  rep.name = "rubber";
  for (int d = 1; d <= max_size; ++d) {
    auto parts = enumerate_partitions(d);
    for (const auto& mu : parts)
      for (const auto& nu : parts)
        for (int k = -1; k <= k_max; ++k)
          for (int n = 0; n <= max_markings; ++n) {
            std::vector<int> ls(n, 0);
            std::function<void(int)> rec = [&](int i) {
              if (i < n) {
                for (int l = 0; l <= max_level; ++l) {
                  ls[i] = l;
                  rec(i + 1);
                }
                return;
              }
              note(rep, rubber_coefficient(mu, k, ls, nu) == rubber_bracket(mu, k, ls, nu), [&] {
                std::string s = "<" + to_string(mu) + "," + std::to_string(k) + "|";
                for (int l : ls) s += " t" + std::to_string(l);
                return s + " |" + to_string(nu) + ">~";
              });
            };
            rec(0);
          }
  }
  return rep;
}

ResidualReport monodromy_check(int max_degree, int max_level) {
  ResidualReport rep;
  rep.name = "monodromy";
  auto label = [](const MonodromySpec& s) {
    std::string out = "d=" + std::to_string(s.degree) + " I=";
    for (int l : s.n_levels) out += std::to_string(l);
    out += " J=";
    for (int l : s.m_levels) out += std::to_string(l);
    out += " delta=" + std::to_string(s.delta.size());
    return out;
  };
  std::vector<std::vector<Insertion>> extras{{}};
  for (int w = 0; w <= std::min(max_level, 2); ++w) extras.push_back({tau(w, CohClass::omega())});
  extras.push_back({tau(1, CohClass::one())});
  for (int d = 1; d <= max_degree; ++d) {
    for (int a = 0; a <= max_level; ++a)
      for (int b = 0; b <= max_level; ++b)
        for (const auto& N : extras) {
          MonodromySpec s{N, {a}, {b}, {}, d};
          note(rep, monodromy_residual(s) == 0, [&] { return label(s); });
        }
    const int lv = std::min(max_level, 2);
    for (int a = 0; a <= lv; ++a)
      for (int b = 0; b <= lv; ++b)
        for (int c = 0; c <= lv; ++c)
          for (int e = 0; e <= lv; ++e)
            for (const std::vector<int>& delta : {std::vector<int>{}, {0}, {1}}) {
              MonodromySpec s{{}, {a, b}, {c, e}, delta, d};
              note(rep, monodromy_residual(s) == 0, [&] { return label(s); });
            }
  }
  return rep;
}

ResidualReport elliptic_check(int max_degree, int max_level) {
  ResidualReport rep;
  rep.name = "elliptic-vanishing";
  auto run = [&](const EllipticSpec& s) {
    note(rep, elliptic_vanishing_residual(s) == 0, [&] {
      std::string out = "d=" + std::to_string(s.degree) + " levels";
      for (int l : s.l_levels) out += " " + std::to_string(l);
      return out + " parts " + std::to_string(s.parts.size());
    });
  };
  const int lv = std::min(max_level, 2);
  for (int d = 1; d <= max_degree; ++d)
    for (int o = -1; o <= lv; ++o) {
      std::vector<int> M;
      if (o >= 0) M.push_back(o);
      for (int a = 0; a <= max_level; ++a)
        for (int b = 0; b <= max_level; ++b) {
          run({M, {{0, 1}}, {a, b}, d});
          for (int c = 0; c <= lv; ++c) run({M, {{0, 1, 2}}, {a, b, c}, d});
        }
      if (o >= 0) continue;
      for (int a = 0; a <= lv; ++a)
        for (int b = 0; b <= lv; ++b)
          for (int c = 0; c <= 1; ++c)
            for (int e = 0; e <= 1; ++e) {
              run({{}, {{0, 2}, {1, 3}}, {a, b, c, e}, d});
              run({{}, {{0, 1, 2, 3}}, {a, b, c, e}, d});
            }
    }
  return rep;
}

ResidualReport cayley_check(int max_k) {
  ResidualReport rep;
  rep.name = "cayley";
  for (int k = 1; k <= max_k; ++k)
    note(rep, tree_function(k).terms() == tree_sum_bruteforce(k).terms(), [&] { return "k=" + std::to_string(k); });
  return rep;
}

ResidualReport interaction_check(int max_r) {
  ResidualReport rep;
  rep.name = "interaction-diagrams";
  for (int r = 1; r <= max_r; ++r) {
    auto s = interaction_sum(r, r, r + 1);
    auto T = tree_function(r);
    bool ok = true;
    for (const auto& [e, v] : s.terms()) {
      if (e[0] < r - 1) ok = false;
      if (e[0] != r - 1) continue;
      if (T.coefficient(Exponents(e.begin() + 1, e.end())) != v) ok = false;
    }
    for (const auto& [e, v] : T.terms()) {
      Exponents x{r - 1};
      x.insert(x.end(), e.begin(), e.end());
      if (s.coefficient(x) != v) ok = false;
    }
    note(rep, ok, [&] { return "r=" + std::to_string(r); });
  }
  return rep;
}

ResidualReport character_check(int max_degree) {
  ResidualReport rep;
  rep.name = "characters";
  for (int d = 1; d <= max_degree; ++d) {
    auto t = character_table(d);
    const std::size_t n = t->count();
    const Integer dfact = factorial(d);
    Integer dims = 0;
    for (std::size_t l = 0; l < n; ++l) dims += t->dim[l] * t->dim[l];
    note(rep, dims == dfact, [&] { return "sum dim^2, d=" + std::to_string(d); });
    bool rows = true, cols = true;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        Integer r = 0, c = 0;
        for (std::size_t x = 0; x < n; ++x) {
          r += t->class_size[x] * t->value(a, x) * t->value(b, x);
          c += t->value(x, a) * t->value(x, b);
        }
        if (r != (a == b ? dfact : Integer(0))) rows = false;
        if (c != (a == b ? Integer(dfact / t->class_size[a]) : Integer(0))) cols = false;
      }
    note(rep, rows, [&] { return "row orthogonality, d=" + std::to_string(d); });
    note(rep, cols, [&] { return "column orthogonality, d=" + std::to_string(d); });
  }
  return rep;
}

ResidualReport eigenvalue_check(int max_l, int max_size) {
  ResidualReport rep;
  rep.name = "P-eigenvalues";
  auto basis = make_basis(max_size);
  for (int l = 1; l <= max_l; ++l) {
    auto P = P_operator(l, basis);
    for (std::size_t i = 0; i < basis->size(); ++i) {
      const auto& col = P.column(i);
      bool ok = true;
      for (const auto& [r, v] : col)
        if (r != i) ok = false;
      ok = ok && P.entry(i, i) == completed_cycle(l, basis->state(i));
      note(rep, ok, [&] { return "l=" + std::to_string(l) + " lambda=" + to_string(basis->state(i)); });
    }
  }
  return rep;
}

ResidualReport tV_check(int k_max, int max_tail, int max_level, int max_a, int cutoff) {
  ResidualReport rep;
  rep.name = "tV";
  std::vector<ACoef> ops;
  for (int a = 0; a <= max_a; ++a)
    for (int i = 0; i <= max_level; ++i) ops.push_back({a, i});
  std::vector<ACoef> tail;
  std::function<void()> rec = [&] {
    for (int k = 0; k <= k_max; ++k) {
      Rational r;
      try {
        r = tV_exchange(k, tail, cutoff);
      } catch (const CutoffError&) {
        continue;
      }
      note(rep, r == 0, [&] {
        std::string s = "k=" + std::to_string(k) + " tail";
        for (const auto& op : tail) s += " A" + std::to_string(op.a) + "_" + std::to_string(op.i);
        return s;
      });
    }
    if (static_cast<int>(tail.size()) == max_tail) return;
    for (const auto& op : ops) {
      tail.push_back(op);
      rec();
      tail.pop_back();
    }
  };
  rec();
  // vacuum row: A^0 never raises, so every entry of these rows is exact
  auto basis = make_basis(cutoff);
  const std::size_t vac = basis->vacuum();
  for (int k = 0; k <= k_max; ++k) {
    FockMatrix rhs = A_coefficient(1, k, basis);
    if (k >= 1) rhs += A_coefficient(0, k - 1, basis) * harmonic(k);
    for (int i = 0; i <= k - 3; ++i)
      rhs -= A_coefficient(0, i, basis) * A_coefficient(0, k - i - 3, basis) *
             (Rational(factorial(i + 1) * factorial(k - i - 2)) / Rational(factorial(k)) / 2);
    bool ok = true;
    for (std::size_t c = 0; c < basis->size(); ++c)
      if (rhs.entry(vac, c) != 0) ok = false;
    note(rep, ok, [&] { return "vacuum row k=" + std::to_string(k); });
  }
  return rep;
}

ResidualReport confluence_check(int count, std::uint32_t seed) {
  ResidualReport rep;
  rep.name = "confluence";
  std::mt19937 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto lowest = [](const Bracket& b) {
    int best = -1;
    for (const auto& ins : b.insertions)
      if (ins.cls.kind == ClassKind::Identity && (best < 0 || ins.level < best)) best = ins.level;
    return best;
  };
  for (int n = 0; n < count; ++n) {
    Bracket b;
    const int target = uniform(0, 2);  // P^1, cap, E
    b.genus = target == 2 ? 1 : 0;
    b.degree = uniform(1, 3);
    if (target == 1) {
      auto parts = enumerate_partitions(b.degree);
      b.profiles.push_back(parts[uniform(0, static_cast<int>(parts.size()) - 1)]);
    }
    const int n_one = uniform(1, 3);
    for (int i = 0; i < n_one; ++i) b.insertions.push_back(tau(uniform(0, 3), CohClass::one()));
    const int n_omega = uniform(0, 2);
    for (int i = 0; i < n_omega; ++i) b.insertions.push_back(tau(uniform(0, 3), CohClass::omega()));
    if (b.genus == 1 && uniform(0, 1)) {
      b.insertions.push_back(tau(uniform(0, 2), CohClass::alpha(1)));
      b.insertions.push_back(tau(uniform(0, 2), CohClass::beta(1)));
    }
    std::vector<int> present;
    for (const auto& ins : b.insertions)
      if (ins.cls.kind == ClassKind::Identity) present.push_back(ins.level);
    std::mt19937 pick_rng(seed + n);
    auto random_choice = [&pick_rng](const Bracket& x) {
      std::vector<int> lv;
      for (const auto& ins : x.insertions)
        if (ins.cls.kind == ClassKind::Identity) lv.push_back(ins.level);
      return lv[std::uniform_int_distribution<std::size_t>(0, lv.size() - 1)(pick_rng)];
    };
    const Rational first = evaluate(eliminate_tau1(b, highest_tau1));
    const Rational second = evaluate(eliminate_tau1(b, lowest));
    const Rational third = evaluate(eliminate_tau1(b, random_choice));
    note(rep, first == second && first == third && first == evaluate(b), [&] { return to_string(b); });
  }
  return rep;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"virasoro-bracket", "constraint-vanishing", "fock-cap",
                                              "degeneration",     "tube",                 "rubber",
                                              "monodromy",        "elliptic-vanishing",   "trees",
                                              "tV"};
  return names;
}

std::vector<ResidualReport> run_suite(const std::string& name, const SuiteOptions& o) {
  if (name == "virasoro-bracket")
    return {worked_example_check(o.degree), operator_algebra_check(o.genus, o.max_level, o.max_k, 3)};
  if (name == "constraint-vanishing") return {constraint_vanishing_check(o.degree, o.max_level, o.max_k, 3)};
  if (name == "fock-cap") {
    IdentityRanges r;
    r.k_max = o.max_k;
    return {fock_stationary_check(o.degree, o.max_level, 3),
            fock_mixed_check(o.degree, o.max_level),
            fock_cutoff_check(std::min(o.degree, 2), std::min(o.max_level, 3)),
            commutator_identities_check(AIdentity::c01, r),
            commutator_identities_check(AIdentity::c02, r),
            commutator_identities_check(AIdentity::c11, r),
            conjugation_check(5, 8),
            tM_vanishing_check(2, 4, 6),
            tM_leading_check(2, 3, 6)};
  }
  if (name == "degeneration")
    return {degeneration_type2_check(o.degree, o.max_level), degeneration_type1_check(o.degree, o.max_level)};
  if (name == "tube") return {tube_check(o.degree, 2, o.max_level)};
  if (name == "rubber") return {rubber_check(o.degree, 2, o.max_k, o.max_level)};
  if (name == "monodromy") return {monodromy_check(o.degree, o.max_level)};
  if (name == "elliptic-vanishing") return {elliptic_check(o.degree, o.max_level)};
  if (name == "trees") return {cayley_check(o.max_k), interaction_check(std::min(o.max_k, 4))};
  if (name == "tV") return {tV_check(o.max_k, 2, o.max_level, 1, 8)};
  throw DomainError("unknown check suite '" + name + "'");
}

}  // namespace gwc
