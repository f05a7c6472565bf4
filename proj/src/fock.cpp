#include "gwc/fock.hpp"

#include <algorithm>
#include <functional>

namespace gwc {

WedgeOperator::WedgeOperator(BasisPtr basis, std::vector<SeriesVar> vars)
    : basis_(std::move(basis)), vars_(std::move(vars)) {}

WedgeOperator WedgeOperator::scalar(const FockMatrix& m, std::vector<SeriesVar> vars) {
  WedgeOperator op(m.basis(), std::move(vars));
  op.add(Exponents(op.vars_.size(), 0), m);
  return op;
}

FockMatrix WedgeOperator::coefficient(const Exponents& e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? FockMatrix(basis_) : it->second;
}

void WedgeOperator::add(const Exponents& e, const FockMatrix& m) {
  if (e.size() != vars_.size()) throw ConfigError("wedge operator: exponent arity mismatch");
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] < vars_[i].lo || e[i] > vars_[i].hi) return;
  if (m.is_zero()) return;
  auto it = coeffs_.find(e);
  if (it == coeffs_.end()) {
    coeffs_.emplace(e, m);
    return;
  }
  it->second += m;
  if (it->second.is_zero()) coeffs_.erase(it);
}

TruncatedSeries WedgeOperator::entry(const Partition& out, const Partition& in) const {
  TruncatedSeries s(vars_);
  const auto r = basis_->find(out), c = basis_->find(in);
  if (!r || !c) return s;
  for (const auto& [e, m] : coeffs_) s.add_term(e, m.entry(*r, *c));
  return s;
}

WedgeOperator WedgeOperator::adjoint() const {
  WedgeOperator out(basis_, vars_);
  for (const auto& [e, m] : coeffs_) out.coeffs_.emplace(e, m.transpose());
  return out;
}

int WedgeOperator::lowering() const {
  int best = 0;
  for (const auto& [e, m] : coeffs_) best = std::max(best, m.lowering());
  return best;
}

void WedgeOperator::check_compatible(const WedgeOperator& o) const {
  if (vars_ != o.vars_) throw ConfigError("wedge operators over different variables");
  if (basis_->cutoff() != o.basis_->cutoff()) throw ConfigError("wedge operators over different cutoffs");
}

WedgeOperator& WedgeOperator::operator+=(const WedgeOperator& o) {
  if (!basis_) return *this = o;
  check_compatible(o);
  for (const auto& [e, m] : o.coeffs_) add(e, m);
  return *this;
}

WedgeOperator& WedgeOperator::operator-=(const WedgeOperator& o) {
  if (!basis_) basis_ = o.basis_, vars_ = o.vars_;
  check_compatible(o);
  for (const auto& [e, m] : o.coeffs_) add(e, m * Rational(-1));
  return *this;
}

WedgeOperator operator*(const WedgeOperator& a, const WedgeOperator& b) {
  a.check_compatible(b);
  WedgeOperator out(a.basis_, a.vars_);
  Exponents e(a.vars_.size());
  for (const auto& [ea, ma] : a.coeffs_)
    for (const auto& [eb, mb] : b.coeffs_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add(e, ma * mb);
    }
  return out;
}

WedgeOperator operator*(const TruncatedSeries& s, const WedgeOperator& a) {
  if (s.vars() != a.vars_) throw ConfigError("series and operator over different variables");
  WedgeOperator out(a.basis_, a.vars_);
  Exponents e(a.vars_.size());
  for (const auto& [es, c] : s.terms())
    for (const auto& [ea, m] : a.coeffs_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = es[i] + ea[i];
      out.add(e, m * c);
    }
  return out;
}

WedgeOperator E_operator(int r, const std::vector<SeriesVar>& vars, std::size_t var_index, const BasisPtr& basis) {
  WedgeOperator op(basis, vars);
  Exponents e(vars.size(), 0);
  for (int m = std::max(vars[var_index].lo, -1); m <= vars[var_index].hi; ++m) {
    e[var_index] = m;
    op.add(e, E_coefficient(r, m, basis));
  }
  return op;
}

WedgeOperator operator_commutator(const WedgeOperator& A, const WedgeOperator& B) { return A * B - B * A; }

FockMatrix matrix_commutator(const FockMatrix& A, const FockMatrix& B) { return A * B - B * A; }

int interior_bound(const FockBasis& basis, int lowering_a, int lowering_b) {
  return basis.cutoff() - std::max(lowering_a, lowering_b);
}

bool agree_on_interior(const FockMatrix& a, const FockMatrix& b, int bound) {
  const auto& basis = *a.basis();
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (std::size_t r = 0; r < basis.size() && basis.energy(r) <= bound; ++r)
      if (a.entry(r, c) != b.entry(r, c)) return false;
  return true;
}

TruncatedSeries vacuum_expectation(const std::vector<WedgeOperator>& ops, const std::optional<Partition>& state) {
  if (ops.empty()) throw ConfigError("vacuum_expectation needs at least one operator");
  const auto& basis = ops.front().basis();
  const auto& vars = ops.front().vars();
  int capacity = 0;
  for (std::size_t i = 0; i + 1 < ops.size(); ++i) {
    if (ops[i].vars() != vars || ops[i].basis()->cutoff() != basis->cutoff())
      throw ConfigError("vacuum_expectation: operators over different variables or cutoffs");
    capacity += ops[i].lowering();
  }
  if (capacity > basis->cutoff())
    throw CutoffError("energy cutoff " + std::to_string(basis->cutoff()) + " below the lowering capacity " +
                      std::to_string(capacity) + " of the product");
  std::map<Exponents, FockVector> current;
  current[Exponents(vars.size(), 0)] =
      state ? state_vector(*state, basis) : basis_vector(*basis, basis->vacuum());
  Exponents e(vars.size());
  for (auto op = ops.rbegin(); op != ops.rend(); ++op) {
    std::map<Exponents, FockVector> next;
    for (const auto& [eo, m] : op->coefficients())
      for (const auto& [ev, v] : current) {
        bool inside = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
          e[i] = eo[i] + ev[i];
          if (e[i] < vars[i].lo || e[i] > vars[i].hi) inside = false;
        }
        if (!inside) continue;
        FockVector w = m.apply(v);
        auto it = next.find(e);
        if (it == next.end()) {
          next.emplace(e, std::move(w));
        } else {
          for (std::size_t i = 0; i < w.size(); ++i) it->second[i] += w[i];
        }
      }
    current = std::move(next);
  }
  TruncatedSeries out(vars);
  for (const auto& [ev, v] : current) out.add_term(ev, v[basis->vacuum()]);
  return out;
}

namespace {

// Gk[p][j - k] = [a^p b^j] of S(b)^a varsigma(b)^k / (a+1)_k for j in [k, j_max]
std::vector<std::vector<Rational>> A_weights(int k, int p_max, int j_max) {
  const int order = j_max - k;
  std::vector<std::vector<Rational>> out(p_max + 1, std::vector<Rational>(std::max(order + 1, 0)));
  if (order < 0) return out;
  auto S = univariate::S(order);
  auto Sk = k >= 0 ? univariate::pow_int(S, k, order) : univariate::pow_int(univariate::inverse(S, order), -k, order);
  auto L = univariate::log1p_of(S, order);
  // q[p] = [a^p] 1/(a+1)_k
  std::vector<Rational> q(p_max + 1);
  if (k >= 0) {
    // (a+1)_k = prod_{j=1..k} (a + j)
    std::vector<Rational> shifted(k + 1, 0);
    shifted[0] = 1;
    for (int j = 1; j <= k; ++j) {
      std::vector<Rational> next(k + 1, 0);
      for (int d = 0; d < j; ++d) {
        next[d] += shifted[d] * j;
        next[d + 1] += shifted[d];
      }
      shifted = next;
    }
    q = univariate::inverse(shifted, p_max);
  } else {
    std::vector<Rational> poly{1};
    for (int j = 0; j < -k; ++j) {
      std::vector<Rational> next(poly.size() + 1, 0);
      for (std::size_t d = 0; d < poly.size(); ++d) {
        next[d] += poly[d] * (-j);
        next[d + 1] += poly[d];
      }
      poly = next;
    }
    for (int p = 0; p <= p_max && p < static_cast<int>(poly.size()); ++p) q[p] = poly[p];
  }
  std::vector<std::vector<Rational>> Lpow(p_max + 1);
  Lpow[0] = std::vector<Rational>(order + 1, 0);
  Lpow[0][0] = 1;
  for (int p = 1; p <= p_max; ++p) Lpow[p] = univariate::mul(Lpow[p - 1], L, order);
  for (int p = 0; p <= p_max; ++p) {
    std::vector<Rational> acc(order + 1, 0);
    for (int p1 = 0; p1 <= p; ++p1) {
      if (q[p1] == 0) continue;
      Rational scale = q[p1] / Rational(factorial(p - p1));
      for (int j = 0; j <= order; ++j) acc[j] += scale * Lpow[p - p1][j];
    }
    out[p] = univariate::mul(acc, Sk, order);
  }
  return out;
}

// sum_k sum_j G_k[p][j] [x^{q - shift - j}] E_k(x) where shift = p for A(z) and 0 for A(a, b)
FockMatrix A_family_coefficient(int p, int q, int shift, const BasisPtr& basis) {
  FockMatrix out(basis);
  const int N = basis->cutoff();
  const int top = q - shift;  // highest power of the weight series that can contribute
  auto inv_sigma = c_coefficients(std::max(top + 2, 1));
  for (int k = -N; k <= std::min(N, std::max(top, 0)); ++k) {
    auto G = A_weights(k, p, top + 1);
    const auto& g = G[p];
    if (std::all_of(g.begin(), g.end(), [](const Rational& x) { return x == 0; })) continue;
    for (const auto& e : basis->E_entries(k)) {
      // sum_j g[j-k] c^{top-j}/(top-j)!
      Rational v = 0, power = 1;
      for (int n = 0; n <= top - k; ++n) {
        if (n > 0) power *= e.c / n;
        const Rational& w = g[top - k - n];
        if (w != 0) v += w * power;
      }
      out.add(e.row, e.col, e.sign * v);
    }
    if (k == 0) {
      // scalar part of E_0: sum_j g[j] c_{top-j+1}
      Rational v = 0;
      for (int j = 0; j <= top + 1 && j < static_cast<int>(g.size()); ++j) v += g[j] * inv_sigma[top - j + 1];
      if (v != 0)
        for (std::size_t i = 0; i < basis->size(); ++i) out.add(i, i, v);
    }
  }
  return out;
}

std::mutex a_cache_mutex;
std::map<std::tuple<int, int, int, int>, FockMatrix> a_cache;

}  // namespace

FockMatrix A_coefficient(int a, int i, const BasisPtr& basis) {
  if (a < 0) throw DomainError("A_coefficient: negative t order");
  auto key = std::make_tuple(basis->cutoff(), a, i, 0);
  {
    std::lock_guard<std::mutex> lock(a_cache_mutex);
    auto it = a_cache.find(key);
    if (it != a_cache.end()) return it->second;
  }
  FockMatrix m = A_family_coefficient(a, i + 1, a, basis);
  std::lock_guard<std::mutex> lock(a_cache_mutex);
  return a_cache.emplace(key, std::move(m)).first->second;
}

WedgeOperator A_operator(int t_order, int z_lo, int z_hi, const BasisPtr& basis) {
  WedgeOperator op(basis, {{"t", 0, t_order}, {"z", z_lo, z_hi}});
  for (int p = 0; p <= t_order; ++p)
    for (int q = z_lo; q <= z_hi; ++q) op.add({p, q}, A_coefficient(p, q - 1, basis));
  return op;
}

WedgeOperator A_two_parameter(int a_order, int b_lo, int b_hi, const BasisPtr& basis) {
  WedgeOperator op(basis, {{"a", 0, a_order}, {"b", b_lo, b_hi}});
  for (int p = 0; p <= a_order; ++p)
    for (int q = b_lo; q <= b_hi; ++q) {
      auto key = std::make_tuple(basis->cutoff(), p, q, 1);
      FockMatrix m;
      {
        std::lock_guard<std::mutex> lock(a_cache_mutex);
        auto it = a_cache.find(key);
        if (it != a_cache.end()) m = it->second;
      }
      if (!m.basis()) {
        m = A_family_coefficient(p, q, 0, basis);
        std::lock_guard<std::mutex> lock(a_cache_mutex);
        a_cache.emplace(key, m);
      }
      op.add({p, q}, m);
    }
  return op;
}

}  // namespace gwc

namespace gwc {

namespace {

std::string coef_name(const char* base, int a, int i) {
  return std::string(base) + std::to_string(a) + "_" + std::to_string(i);
}

void record(ResidualReport& rep, bool ok, const std::string& what) {
  ++rep.checked;
  if (ok) return;
  ++rep.failed;
  if (rep.failures.size() < 20) rep.failures.push_back(what);
}

// the right side of [A^0(z), A(a,b)] = varsigma(za) (1 + z/b)^a A(a, z + b) at a^p z^q b^r
class BAcRight {
 public:
  BAcRight(const BasisPtr& basis, int a_order, int z_order, int b_hi) : basis_(basis) {
    const int N = basis->cutoff();
    const int Z = z_order;
    b_top_ = b_hi + 3 * Z + 3;
    vars_ = {{"a", 0, a_order}, {"z", 0, Z}, {"b", -N - 3 * Z - 2, b_top_}};
    auto a = TruncatedSeries::variable(vars_, 0);
    auto z = TruncatedSeries::variable(vars_, 1);
    auto sig = (a * z).compose(univariate::varsigma(a_order + Z + 1));
    auto u = TruncatedSeries::monomial(vars_, {0, 1, -1}, 1);
    std::vector<Rational> log1p(Z + 1, 0);
    for (int n = 1; n <= Z; ++n) log1p[n] = Rational(n % 2 ? 1 : -1, n);
    auto pw = (a * u.compose(log1p)).exp();
    auto prefactor = sig * pw;
    // 1/varsigma(z + b) = sum_j c_j (z + b)^{j - 1}
    auto cs = c_coefficients(b_top_ + 2);
    TruncatedSeries inv_sigma(vars_);
    for (int j = 0; j <= b_top_ + 1; ++j)
      if (cs[j] != 0) inv_sigma += shifted_power(j - 1) * cs[j];
    for (int k = -N; k <= N; ++k) {
      auto G = A_weights(k, a_order, b_top_ + Z);
      TruncatedSeries g(vars_);
      for (int p = 0; p <= a_order; ++p)
        for (int j = k; j <= b_top_ + Z; ++j) {
          const Rational& w = G[p][j - k];
          if (w == 0) continue;
          g += TruncatedSeries::monomial(vars_, {p, 0, 0}, w) * shifted_power(j);
        }
      h_[k] = prefactor * g;
      if (k == 0) scalar_ = h_[k] * inv_sigma;
    }
  }

  FockMatrix coefficient(int p, int q, int r) const {
    FockMatrix out(basis_);
    for (const auto& [k, h] : h_) {
      std::map<Rational, Rational> by_c;
      for (const auto& e : basis_->E_entries(k)) {
        auto it = by_c.find(e.c);
        if (it == by_c.end()) it = by_c.emplace(e.c, weight(h, e.c, p, q, r)).first;
        out.add(e.row, e.col, e.sign * it->second);
      }
    }
    Rational s = scalar_.coefficient({p, q, r});
    if (s != 0)
      for (std::size_t i = 0; i < basis_->size(); ++i) out.add(i, i, s);
    return out;
  }

 private:
  // (z + b)^j expanded for |z| < |b|
  TruncatedSeries shifted_power(int j) const {
    TruncatedSeries s(vars_);
    for (int n = 0; n <= vars_[1].hi; ++n) s.add_term({0, n, j - n}, binomial(j, n));
    return s;
  }

  // [a^p z^q b^r] h(a, z, b) e^{c(z + b)}
  static Rational weight(const TruncatedSeries& h, const Rational& c, int p, int q, int r) {
    Rational total = 0;
    for (const auto& [e, v] : h.terms()) {
      if (e[0] != p || e[1] > q || e[2] > r) continue;
      const int n = q - e[1], m = r - e[2];
      Rational cp = 1;
      for (int i = 0; i < n + m; ++i) cp *= c;
      total += v * cp / Rational(factorial(n) * factorial(m));
    }
    return total;
  }

  BasisPtr basis_;
  std::vector<SeriesVar> vars_;
  int b_top_ = 0;
  std::map<int, TruncatedSeries> h_;
  TruncatedSeries scalar_;
};

}  // namespace

ResidualReport commutator_identities_check(AIdentity which, const IdentityRanges& R) {
  auto B = make_basis(R.cutoff);
  auto A = [&](int a, int i) { return A_coefficient(a, i, B); };
  ResidualReport rep;
  switch (which) {
    case AIdentity::c01:
      rep.name = "c01";
      for (int k = 0; k <= R.k_max; ++k)
        for (int l = R.l_min; l <= R.l_max; ++l) {
          auto a0 = A(0, k), a1 = A(1, l);
          auto lhs = matrix_commutator(a0, a1);
          auto rhs = A(0, k + l - 1) * binomial(k + l, k);
          record(rep, agree_on_interior(lhs, rhs, interior_bound(*B, a0.lowering(), a1.lowering())),
                 "[" + coef_name("A", 0, k) + "," + coef_name("A", 1, l) + "]");
        }
      break;
    case AIdentity::c02:
      rep.name = "c02";
      for (int k = 0; k <= R.k_max; ++k)
        for (int l = R.l_min; l <= R.l_max; ++l) {
          auto a0 = A(0, k), a2 = A(2, l);
          auto lhs = matrix_commutator(a0, a2);
          auto rhs = A(1, k + l - 1) * binomial(k + l - 1, k) +
                     A(0, k + l - 2) * binomial_poly(k + l - 1, k, BinomialMode::derivative);
          record(rep, agree_on_interior(lhs, rhs, interior_bound(*B, a0.lowering(), a2.lowering())),
                 "[" + coef_name("A", 0, k) + "," + coef_name("A", 2, l) + "]");
        }
      break;
    case AIdentity::c11:
      rep.name = "c11";
      for (int k = R.l_min; k <= R.l_max; ++k)
        for (int l = R.l_min; l <= R.l_max; ++l) {
          auto lhs = matrix_commutator(A(1, k), A(1, l));
          auto rhs = matrix_commutator(A(0, l), A(2, k)) - matrix_commutator(A(0, k), A(2, l));
          int bound = std::min({interior_bound(*B, A(1, k).lowering(), A(1, l).lowering()),
                                interior_bound(*B, A(0, l).lowering(), A(2, k).lowering()),
                                interior_bound(*B, A(0, k).lowering(), A(2, l).lowering())});
          record(rep, agree_on_interior(lhs, rhs, bound),
                 "[" + coef_name("A", 1, k) + "," + coef_name("A", 1, l) + "]");
        }
      break;
    case AIdentity::bAc: {
      rep.name = "bAc";
      BAcRight right(B, R.a_order, R.k_max, R.b_hi);
      for (int q = 0; q <= R.k_max; ++q) {
        auto a0 = A(0, q - 1);
        for (int p = 0; p <= R.a_order; ++p)
          for (int r = R.b_lo; r <= R.b_hi; ++r) {
            auto ab = A_family_coefficient(p, r, 0, B);
            auto lhs = matrix_commutator(a0, ab);
            record(rep, agree_on_interior(lhs, right.coefficient(p, q, r),
                                          interior_bound(*B, a0.lowering(), ab.lowering())),
                   "a^" + std::to_string(p) + " z^" + std::to_string(q) + " b^" + std::to_string(r));
          }
      }
      break;
    }
  }
  return rep;
}

ResidualReport conjugation_check(int z_max, int cutoff) {
  auto B = make_basis(cutoff);
  ResidualReport rep;
  rep.name = "AaE";
  const auto minus = exp_alpha1(B, -1), plus = exp_alpha1(B, 1);
  for (int m = -1; m <= z_max; ++m) {
    auto lhs = minus * A_coefficient(0, m - 1, B) * plus;
    // e^{-alpha_1} only lowers, so rows stay exact below the lowering bound of A^0
    record(rep, agree_on_interior(lhs, E_coefficient(0, m, B), cutoff - (m + 1)), "z^" + std::to_string(m));
  }
  return rep;
}

namespace {

std::vector<SeriesVar> x_vars(int k, int order, const char* name) {
  std::vector<SeriesVar> v;
  for (int i = 1; i <= k; ++i) v.push_back({name + std::to_string(i), 0, order});
  return v;
}

}  // namespace

TruncatedSeries tree_function(int k) {
  if (k < 1) throw DomainError("tree_function needs at least one variable");
  auto vars = x_vars(k, k, "x");
  if (k == 1) return TruncatedSeries::constant(vars, 1);
  TruncatedSeries sum(vars), prod = TruncatedSeries::constant(vars, 1);
  for (int i = 0; i < k; ++i) {
    sum += TruncatedSeries::variable(vars, i);
    prod = prod * TruncatedSeries::variable(vars, i);
  }
  for (int i = 0; i < k - 2; ++i) prod = prod * sum;
  return prod;
}

TruncatedSeries tree_sum_bruteforce(int k) {
  if (k < 1) throw DomainError("tree_sum_bruteforce needs at least one vertex");
  auto vars = x_vars(k, k, "x");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
  TruncatedSeries out(vars);
  const int need = k - 1;
  std::vector<int> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (static_cast<int>(pick.size()) == need) {
      std::vector<int> parent(k);
      for (int i = 0; i < k; ++i) parent[i] = i;
      std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
      Exponents deg(k, 0);
      for (int e : pick) {
        auto [a, b] = edges[e];
        int ra = root(a), rb = root(b);
        if (ra == rb) return;
        parent[ra] = rb;
        ++deg[a];
        ++deg[b];
      }
      out.add_term(deg, 1);
      return;
    }
    for (std::size_t e = start; e < edges.size(); ++e) {
      pick.push_back(static_cast<int>(e));
      rec(e + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

TruncatedSeries interaction_sum(int r, int t_order, int w_order) {
  if (r < 1) throw DomainError("interaction_sum needs a nonempty index set");
  std::vector<SeriesVar> vars{{"t", 0, t_order}};
  for (const auto& v : x_vars(r, w_order, "w")) vars.push_back(v);
  auto w = [&](int i) { return TruncatedSeries::variable(vars, i + 1); };
  const auto t = TruncatedSeries::variable(vars, 0);
  const auto sig = univariate::varsigma(t_order + 1);
  TruncatedSeries out(vars);
  std::vector<int> parent(r, -1);
  std::function<void(int)> rec = [&](int i) {
    if (i == r - 1) {
      std::vector<TruncatedSeries> below(r, TruncatedSeries(vars));
      TruncatedSeries weight = TruncatedSeries::constant(vars, 1);
      for (int v = 0; v < r; ++v) {
        below[v] += w(v);
        if (v == r - 1) break;
        weight = weight * (t * below[v] * w(parent[v])).compose(sig);
        below[parent[v]] += below[v];
      }
      out += weight;
      return;
    }
    for (int p = i + 1; p < r; ++p) {
      parent[i] = p;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace gwc
