#include "gwc/cap.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace gwc {

std::vector<std::vector<std::vector<int>>> set_partitions(int m) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> blocks;
  std::function<void(int)> rec = [&](int i) {
    if (i == m) {
      auto p = blocks;
      std::sort(p.begin(), p.end(), [](const auto& a, const auto& b) { return a.back() < b.back(); });
      out.push_back(std::move(p));
      return;
    }
    // index loop: the recursion appends to blocks
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      blocks[j].push_back(i);
      rec(i + 1);
      blocks[j].pop_back();
    }
    blocks.push_back({i});
    rec(i + 1);
    blocks.pop_back();
  };
  rec(0);
  return out;
}

namespace {

int sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

std::vector<int> pick(const std::vector<int>& v, const std::vector<int>& idx) {
  std::vector<int> out;
  for (int i : idx) out.push_back(v[i]);
  return out;
}

FockVector apply_all(const std::vector<FockMatrix>& ops, FockVector v) {
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) v = it->apply(v);
  return v;
}

}  // namespace

FockMatrix Avee_coefficient(const std::vector<int>& levels, const BasisPtr& basis) {
  const int n = static_cast<int>(levels.size());
  if (n == 0) throw DomainError("Avee_coefficient: empty block");
  for (int l : levels)
    if (l < 0) throw DomainError("Avee_coefficient: negative level");
  std::vector<int> head(levels.begin(), levels.end() - 1);
  const int L = sum(head);
  const int total = sum(levels);
  Rational mult(multinomial(head));
  // log term: w_n^p ln(1 + u) = w_n^p d/dp (1 + u)^p
  const int i0 = total - n, p = n + i0 - 1;
  // rational term: w_n^q (1 + u)^q
  const int i1 = total - n + 1, q = n + i1 - 2;
  FockMatrix out(basis);
  Rational c0 = binomial_poly(p, L, BinomialMode::derivative);
  if (c0 != 0 && i0 >= -2) out += A_coefficient(0, i0, basis) * c0;
  Rational c1 = binomial(q, L);
  if (c1 != 0 && i1 >= -2) out += A_coefficient(1, i1, basis) * c1;
  return out * mult;
}

int Avee_lowering(const std::vector<int>& levels) {
  return std::max(0, sum(levels) - static_cast<int>(levels.size()) + 2);
}

FockMatrix E0_block_coefficient(const std::vector<int>& exps, const BasisPtr& basis) {
  const int n = static_cast<int>(exps.size());
  if (n == 0) throw DomainError("E0_block_coefficient: empty block");
  std::vector<int> shifted;
  for (int e : exps) {
    if (e < 1) throw DomainError("E0_block_coefficient: exponents must be positive");
    shifted.push_back(e - 1);
  }
  const int q = sum(exps) - 2 * n + 2;
  if (q < -1) return FockMatrix(basis);
  return E_coefficient(0, q, basis) * Rational(multinomial(shifted));
}

FockVector apply_Mprime(const std::vector<int>& levels, const FockVector& v, const BasisPtr& basis) {
  const FockVector start = apply_exp_alpha1(v, basis);
  FockVector out(basis->size());
  for (const auto& pi : set_partitions(static_cast<int>(levels.size()))) {
    std::vector<FockMatrix> ops;
    for (const auto& block : pi) ops.push_back(Avee_coefficient(pick(levels, block), basis));
    auto w = apply_all(ops, start);
    for (std::size_t i = 0; i < w.size(); ++i) out[i] += w[i];
  }
  return out;
}

FockVector apply_bigE(int p, const std::vector<int>& exps, const FockVector& v, const BasisPtr& basis) {
  const int m = static_cast<int>(exps.size());
  FockVector out(basis->size());
  for (const auto& pi : set_partitions(m)) {
    if (m - static_cast<int>(pi.size()) != p) continue;
    FockVector w = v;
    for (const auto& block : pi) w = E0_block_coefficient(pick(exps, block), basis).apply(w);
    for (std::size_t i = 0; i < w.size(); ++i) out[i] += w[i];
  }
  return out;
}

int cap_cutoff(int degree, const std::vector<int>& omega_levels, const std::vector<int>& one_levels) {
  // A^0 and e^{alpha_1} never raise the energy, so only the intermediate states to the left of a raising
  // A^vee factor can leave the degree; they must come back down through the factors further left
  int best = degree;
  const int front = [&] {
    int s = 0;
    for (int k : omega_levels) s += k + 1;
    return s;
  }();
  for (const auto& pi : set_partitions(static_cast<int>(one_levels.size()))) {
    int s = front;
    for (std::size_t b = 0; b + 1 < pi.size(); ++b) s += Avee_lowering(pick(one_levels, pi[b]));
    best = std::max(best, s);
  }
  return best;
}

Rational cap_coefficient(const std::vector<int>& omega_levels, const std::vector<int>& one_levels,
                         const Partition& nu, std::optional<int> cutoff) {
  for (int k : omega_levels)
    if (k < 0) throw DomainError("cap_coefficient: negative level");
  const int d = size(nu);
  const int needed = cap_cutoff(d, omega_levels, one_levels);
  const int N = cutoff.value_or(needed);
  if (N < needed)
    throw CutoffError("cap coefficient needs cutoff " + std::to_string(needed) + ", got " + std::to_string(N));
  auto basis = make_basis(N);
  auto v = apply_Mprime(one_levels, state_vector(nu, basis), basis);
  for (auto it = omega_levels.rbegin(); it != omega_levels.rend(); ++it) v = A_coefficient(0, *it, basis).apply(v);
  return v[basis->vacuum()];
}

Rational equivariant_cap_coefficient(int t_power, const std::vector<int>& omega_levels,
                                     const std::vector<int>& one_levels, const Partition& nu,
                                     std::optional<int> cutoff) {
  if (t_power < 0) return 0;
  const int d = size(nu);
  const int n = static_cast<int>(omega_levels.size());
  int needed = d;
  {
    int s = 0;
    for (int i = 0; i + 1 < n; ++i) s += omega_levels[i] + 1;
    needed = std::max(needed, s);
  }
  const int N = cutoff.value_or(needed);
  if (N < needed)
    throw CutoffError("equivariant cap needs cutoff " + std::to_string(needed) + ", got " + std::to_string(N));
  auto basis = make_basis(N);
  const int m = static_cast<int>(one_levels.size());
  std::vector<int> exps;
  for (int l : one_levels) exps.push_back(l + 1);
  const FockVector nu_v = state_vector(nu, basis);
  Rational total = 0;
  for (int e_pow = 0; e_pow < std::max(m, 1) && e_pow <= t_power; ++e_pow) {
    // (-t)^{e_pow} from E(w, -t)
    auto v = apply_exp_alpha1(apply_bigE(e_pow, exps, nu_v, basis), basis);
    if (is_zero(v)) continue;
    const int rest = t_power - e_pow;
    // distribute the remaining t power over the A factors
    std::function<void(int, int, FockVector)> rec = [&](int i, int left, FockVector w) {
      if (i < 0) {
        if (left == 0) total += (e_pow % 2 ? -1 : 1) * w[basis->vacuum()];
        return;
      }
      for (int a = 0; a <= left; ++a) rec(i - 1, left - a, A_coefficient(a, omega_levels[i], basis).apply(w));
    };
    rec(n - 1, rest, v);
  }
  return total;
}

TruncatedSeries cap_series(const CapSeriesRequest& r) {
  std::vector<SeriesVar> vars;
  if (r.equivariant) vars.push_back({"t", 0, r.t_order});
  for (int i = 1; i <= r.n_z; ++i) vars.push_back({"z" + std::to_string(i), 1, r.max_level + 1});
  for (int j = 1; j <= r.n_w; ++j) vars.push_back({"w" + std::to_string(j), 1, r.max_level + 1});
  TruncatedSeries out(vars);
  const int nv = r.n_z + r.n_w;
  std::vector<int> levels(nv, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i < nv) {
      for (int l = 0; l <= r.max_level; ++l) {
        levels[i] = l;
        rec(i + 1);
      }
      return;
    }
    std::vector<int> ks(levels.begin(), levels.begin() + r.n_z), ls(levels.begin() + r.n_z, levels.end());
    Exponents e;
    if (r.equivariant) e.push_back(0);
    for (int l : levels) e.push_back(l + 1);
    if (!r.equivariant) {
      out.add_term(e, cap_coefficient(ks, ls, r.nu));
      return;
    }
    for (int a = 0; a <= r.t_order; ++a) {
      e[0] = a;
      out.add_term(e, equivariant_cap_coefficient(a, ks, ls, r.nu));
    }
  };
  rec(0);
  return out;
}

Rational rubber_coefficient(const Partition& mu, int k, const std::vector<int>& levels, const Partition& nu) {
  if (size(mu) != size(nu)) throw DomainError("rubber_coefficient: |mu| != |nu|");
  if (k < -1) throw DomainError("rubber_coefficient: k must be >= -1");
  auto basis = make_basis(size(mu));
  const auto mu_v = state_vector(mu, basis), nu_v = state_vector(nu, basis);
  const auto F2 = P_operator(2, basis) * Rational(1, 2);
  std::vector<int> exps;
  for (int l : levels) {
    if (l < 0) throw DomainError("rubber_coefficient: negative level");
    exps.push_back(l + 1);
  }
  Rational total = 0;
  for (const auto& pi : set_partitions(static_cast<int>(levels.size()))) {
    const int n = k + 1 - static_cast<int>(pi.size());
    if (n < 0) continue;
    FockVector w = nu_v;
    for (const auto& block : pi) w = E0_block_coefficient(pick(exps, block), basis).apply(w);
    for (int i = 1; i <= n; ++i) {
      w = F2.apply(w);
      for (auto& x : w) x /= i;
    }
    total += dot(w, mu_v);
  }
  return total;
}

TruncatedSeries rubber_series(const Partition& mu, int n_w, int max_level, int s_hi, const Partition& nu) {
  if (size(mu) != size(nu)) throw DomainError("rubber_series: |mu| != |nu|");
  std::vector<SeriesVar> vars{{"s", -n_w, s_hi}};
  for (int j = 1; j <= n_w; ++j) vars.push_back({"w" + std::to_string(j), 1, max_level + 1});
  TruncatedSeries out(vars);
  std::vector<int> levels(n_w, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i < n_w) {
      for (int l = 0; l <= max_level; ++l) {
        levels[i] = l;
        rec(i + 1);
      }
      return;
    }
    for (int p = -n_w; p <= s_hi; ++p) {
      const int k = p + n_w - 1;
      if (k < -1) continue;
      Exponents e{p};
      for (int l : levels) e.push_back(l + 1);
      out.add_term(e, rubber_coefficient(mu, k, levels, nu));
    }
  };
  rec(0);
  return out;
}

FockMatrix M_coefficient(int k, const std::vector<int>& exps, const BasisPtr& basis, int* bound) {
  const int m = static_cast<int>(exps.size());
  for (int e : exps)
    if (e < 1) throw DomainError("M_coefficient: exponents must be positive");
  FockMatrix out(basis);
  const auto ealpha = exp_alpha1(basis);
  // A(w_i) lowers by at most e_i; the rightmost A factor is never to the left of a raising step
  int low = 0;
  for (int i = 0; i + 1 < m; ++i) low += exps[i];
  if (bound) *bound = basis->cutoff() - low;
  for (unsigned S = 0; S < (1u << m); ++S) {
    std::vector<int> in_s, out_s;
    for (int i = 0; i < m; ++i) ((S >> i) & 1u ? in_s : out_s).push_back(i);
    const Rational s_sign = in_s.size() % 2 ? -1 : 1;
    std::vector<int> s_exps = pick(exps, in_s);
    for (const auto& pi : set_partitions(static_cast<int>(in_s.size()))) {
      const int e_pow = static_cast<int>(in_s.size() - pi.size());
      if (e_pow > k) continue;
      FockMatrix right = ealpha;
      for (const auto& block : pi) right = right * E0_block_coefficient(pick(s_exps, block), basis);
      const Rational sign = s_sign * (e_pow % 2 ? -1 : 1);
      std::function<void(std::size_t, int, FockMatrix)> rec = [&](std::size_t j, int left, FockMatrix acc) {
        if (j == out_s.size()) {
          if (left == 0) out += acc * right * sign;
          return;
        }
        for (int a = 0; a <= left; ++a)
          rec(j + 1, left - a, acc * A_coefficient(a, exps[out_s[j]] - 1, basis));
      };
      rec(0, k - e_pow, FockMatrix::identity(basis));
    }
  }
  return out;
}

namespace {

// calls f(exps) for every exponent vector in [1, order]^m
void for_exponents(int m, int order, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> e(m, 1);
  while (true) {
    f(e);
    int i = 0;
    while (i < m && ++e[i] > order) e[i++] = 1;
    if (i == m) break;
  }
}

std::string exps_name(int k, const std::vector<int>& e) {
  std::string s = "t^" + std::to_string(k);
  for (std::size_t i = 0; i < e.size(); ++i) s += " w" + std::to_string(i + 1) + "^" + std::to_string(e[i]);
  return s;
}

void note(ResidualReport& rep, bool ok, const std::string& what) {
  ++rep.checked;
  if (ok) return;
  ++rep.failed;
  if (rep.failures.size() < 20) rep.failures.push_back(what);
}

}  // namespace

ResidualReport tM_vanishing_check(int m_max, int w_order, int cutoff) {
  auto basis = make_basis(cutoff);
  ResidualReport rep;
  rep.name = "tM-vanishing";
  const FockMatrix zero(basis);
  for (int m = 1; m <= m_max; ++m)
    for_exponents(m, w_order, [&](const std::vector<int>& e) {
      for (int k = 0; k < m; ++k) {
        int bound = 0;
        auto c = M_coefficient(k, e, basis, &bound);
        note(rep, bound >= 0 && agree_on_interior(c, zero, bound), exps_name(k, e));
      }
    });
  return rep;
}

ResidualReport tM_leading_check(int m_max, int w_order, int cutoff) {
  auto basis = make_basis(cutoff);
  ResidualReport rep;
  rep.name = "tM-leading";
  const auto ealpha = exp_alpha1(basis);
  for (int m = 1; m <= m_max; ++m)
    for_exponents(m, w_order, [&](const std::vector<int>& e) {
      int bound = 0;
      auto lhs = M_coefficient(m, e, basis, &bound);
      std::vector<int> levels;
      for (int x : e) levels.push_back(x - 1);
      FockMatrix rhs(basis);
      for (const auto& pi : set_partitions(m)) {
        FockMatrix prod = FockMatrix::identity(basis);
        int low = 0;
        for (std::size_t b = 0; b < pi.size(); ++b) {
          auto block = pick(levels, pi[b]);
          prod = prod * Avee_coefficient(block, basis);
          if (b + 1 < pi.size()) low += Avee_lowering(block);
        }
        rhs += prod * ealpha;
        bound = std::min(bound, cutoff - low);
      }
      note(rep, bound >= 0 && agree_on_interior(lhs, rhs, bound), exps_name(m, e));
    });
  return rep;
}

Rational tV_exchange(int k, const std::vector<ACoef>& tail, int cutoff) {
  auto basis = make_basis(cutoff);
  // only raising factors (a >= 1) can leave the window; what they create must come back down
  int low = std::max(0, k + 1);
  for (const auto& op : tail) {
    if (op.a >= 1 && low > cutoff)
      throw CutoffError("tV_exchange: cutoff " + std::to_string(cutoff) + " too small");
    low += std::max(0, op.i + 1);
  }
  FockVector v = basis_vector(*basis, basis->vacuum());
  for (auto it = tail.rbegin(); it != tail.rend(); ++it) v = A_coefficient(it->a, it->i, basis).apply(v);
  auto expect = [&](const std::vector<int>& a0) {
    FockVector w = v;
    for (auto it = a0.rbegin(); it != a0.rend(); ++it) w = A_coefficient(0, *it, basis).apply(w);
    return w[basis->vacuum()];
  };
  Rational r = A_coefficient(1, k, basis).apply(v)[basis->vacuum()];
  if (k >= 1) r += harmonic(k) * expect({k - 1});
  for (int i = 0; i <= k - 3; ++i)
    r -= Rational(factorial(i + 1) * factorial(k - i - 2)) / Rational(factorial(k)) / 2 * expect({i, k - i - 3});
  return r;
}

}  // namespace gwc
