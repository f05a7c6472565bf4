#include "gwc/fock.hpp"

#include <algorithm>

namespace gwc {

namespace {

// Maya diagram of lambda: m_i = lambda_i - i for i = 1..len, all lower values filled
std::vector<int> maya(const Partition& lambda, int len) {
  std::vector<int> m(len);
  for (int i = 0; i < len; ++i) m[i] = (i < static_cast<int>(lambda.size()) ? lambda[i] : 0) - (i + 1);
  return m;
}

Partition from_maya(const std::vector<int>& m) {
  Partition p;
  for (std::size_t i = 0; i < m.size(); ++i) {
    int part = m[i] + static_cast<int>(i) + 1;
    if (part > 0) p.push_back(part);
  }
  return p;
}

}  // namespace

FockBasis::FockBasis(int cutoff) : cutoff_(cutoff) {
  if (cutoff < 0) throw DomainError("Fock cutoff must be >= 0");
  for (int d = 0; d <= cutoff; ++d)
    for (auto& p : enumerate_partitions(d)) {
      lookup_[p] = states_.size();
      states_.push_back(std::move(p));
      energies_.push_back(d);
    }
}

std::optional<std::size_t> FockBasis::find(const Partition& p) const {
  auto it = lookup_.find(p);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t FockBasis::index(const Partition& p) const {
  auto i = find(p);
  if (!i) throw CutoffError("state " + to_string(p) + " lies above the energy cutoff " + std::to_string(cutoff_));
  return *i;
}

const std::vector<EEntry>& FockBasis::E_entries(int r) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = e_cache_.find(r);
  if (it != e_cache_.end()) return it->second;
  std::vector<EEntry> out;
  const int ar = r < 0 ? -r : r;
  for (std::size_t col = 0; col < states_.size(); ++col) {
    const auto& lambda = states_[col];
    if (energies_[col] - r < 0 || energies_[col] - r > cutoff_) continue;
    const int len = static_cast<int>(lambda.size()) + ar + 1;
    auto m = maya(lambda, len);
    if (r == 0) {
      // normally ordered E_kk: particles above zero count +1, holes below zero count -1
      for (int x : m)
        if (x >= 0) out.push_back({col, col, 1, Rational(2 * x + 1, 2)});
      for (int x = -1; x >= -len; --x)
        if (std::find(m.begin(), m.end(), x) == m.end()) out.push_back({col, col, -1, Rational(2 * x + 1, 2)});
      continue;
    }
    for (int i = 0; i < len; ++i) {
      const int from = m[i], to = from - r;
      if (to < -len || std::find(m.begin(), m.end(), to) != m.end()) continue;
      int between = 0;
      for (int x : m)
        if ((x > std::min(from, to) && x < std::max(from, to))) ++between;
      auto moved = m;
      moved[i] = to;
      std::sort(moved.begin(), moved.end(), std::greater<>());
      auto row = find(from_maya(moved));
      if (!row) continue;
      Rational c(2 * from + 1 - r, 2);
      c.canonicalize();
      out.push_back({*row, col, between % 2 ? -1 : 1, c});
    }
  }
  return e_cache_.emplace(r, std::move(out)).first->second;
}

BasisPtr make_basis(int cutoff) {
  static std::mutex mutex;
  static std::map<int, BasisPtr> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(cutoff);
  if (it != cache.end()) return it->second;
  return cache.emplace(cutoff, std::make_shared<const FockBasis>(cutoff)).first->second;
}

FockMatrix::FockMatrix(BasisPtr basis) : basis_(std::move(basis)), cols_(basis_->size()) {}

FockMatrix FockMatrix::identity(BasisPtr basis) {
  FockMatrix m(std::move(basis));
  for (std::size_t i = 0; i < m.cols_.size(); ++i) m.cols_[i][i] = 1;
  return m;
}

void FockMatrix::add(std::size_t row, std::size_t col, const Rational& v) {
  if (v == 0) return;
  auto& c = cols_[col];
  auto it = c.find(row);
  if (it == c.end()) {
    c.emplace(row, v);
    return;
  }
  it->second += v;
  if (it->second == 0) c.erase(it);
}

Rational FockMatrix::entry(std::size_t row, std::size_t col) const {
  auto it = cols_[col].find(row);
  return it == cols_[col].end() ? Rational(0) : it->second;
}

bool FockMatrix::is_zero() const {
  return std::all_of(cols_.begin(), cols_.end(), [](const auto& c) { return c.empty(); });
}

FockVector FockMatrix::apply(const FockVector& v) const {
  FockVector out(cols_.size());
  for (std::size_t c = 0; c < cols_.size(); ++c) {
    if (v[c] == 0) continue;
    for (const auto& [r, x] : cols_[c]) out[r] += x * v[c];
  }
  return out;
}

FockMatrix FockMatrix::transpose() const {
  FockMatrix t(basis_);
  for (std::size_t c = 0; c < cols_.size(); ++c)
    for (const auto& [r, x] : cols_[c]) t.cols_[r][c] = x;
  return t;
}

FockMatrix& FockMatrix::operator+=(const FockMatrix& o) {
  if (!basis_) return *this = o;
  for (std::size_t c = 0; c < o.cols_.size(); ++c)
    for (const auto& [r, x] : o.cols_[c]) add(r, c, x);
  return *this;
}

FockMatrix& FockMatrix::operator-=(const FockMatrix& o) {
  if (!basis_) {
    *this = o;
    return *this *= -1;
  }
  for (std::size_t c = 0; c < o.cols_.size(); ++c)
    for (const auto& [r, x] : o.cols_[c]) add(r, c, -x);
  return *this;
}

FockMatrix& FockMatrix::operator*=(const Rational& c) {
  if (c == 0) {
    for (auto& col : cols_) col.clear();
    return *this;
  }
  for (auto& col : cols_)
    for (auto& [r, x] : col) x *= c;
  return *this;
}

FockMatrix operator*(const FockMatrix& a, const FockMatrix& b) {
  FockMatrix out(b.basis_);
  for (std::size_t c = 0; c < b.cols_.size(); ++c)
    for (const auto& [m, y] : b.cols_[c])
      for (const auto& [r, x] : a.cols_[m]) out.add(r, c, x * y);
  return out;
}

int FockMatrix::lowering() const {
  int best = 0;
  for (std::size_t c = 0; c < cols_.size(); ++c)
    for (const auto& [r, x] : cols_[c]) best = std::max(best, basis_->energy(c) - basis_->energy(r));
  return best;
}

FockVector zero_vector(const FockBasis& b) { return FockVector(b.size()); }

FockVector basis_vector(const FockBasis& b, std::size_t i) {
  FockVector v(b.size());
  v[i] = 1;
  return v;
}

bool is_zero(const FockVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

Rational dot(const FockVector& a, const FockVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

FockMatrix E_coefficient(int r, int m, const BasisPtr& basis) {
  if (m < -1 || (m == -1 && r != 0)) {
    if (m < -1) throw DomainError("E_coefficient: order below -1");
    return FockMatrix(basis);
  }
  FockMatrix out(basis);
  if (m >= 0) {
    Rational inv_fact = Rational(1) / Rational(factorial(m));
    for (const auto& e : basis->E_entries(r)) {
      Rational v;
      mpz_pow_ui(v.get_num_mpz_t(), e.c.get_num_mpz_t(), m);
      mpz_pow_ui(v.get_den_mpz_t(), e.c.get_den_mpz_t(), m);
      out.add(e.row, e.col, e.sign * v * inv_fact);
    }
  }
  if (r == 0) {
    // 1/varsigma(z) = sum_j c_j z^{j-1}
    Rational c = c_coefficients(m + 1)[m + 1];
    if (c != 0)
      for (std::size_t i = 0; i < basis->size(); ++i) out.add(i, i, c);
  }
  return out;
}

FockMatrix alpha(int k, const BasisPtr& basis) {
  if (k == 0) throw DomainError("alpha_0 is not defined");
  return E_coefficient(k, 0, basis);
}

FockMatrix P_operator(int l, const BasisPtr& basis) {
  if (l <= 0) throw DomainError("P_l needs l > 0");
  return E_coefficient(0, l, basis) * Rational(factorial(l));
}

Rational E0_eigenvalue(int m, const Partition& lambda) {
  if (m < -1) throw DomainError("E0_eigenvalue: order below -1");
  Rational total = c_coefficients(m + 1)[m + 1];
  if (m < 0) return total;
  const int len = static_cast<int>(lambda.size()) + 1;
  auto maya_set = maya(lambda, len);
  Rational sum = 0;
  for (int x : maya_set) {
    Rational k(2 * x + 1, 2);
    k.canonicalize();
    Rational p = 1;
    for (int j = 0; j < m; ++j) p *= k;
    if (x >= 0) sum += p;
  }
  for (int x = -1; x >= -len; --x) {
    if (std::find(maya_set.begin(), maya_set.end(), x) != maya_set.end()) continue;
    Rational k(2 * x + 1, 2);
    k.canonicalize();
    Rational p = 1;
    for (int j = 0; j < m; ++j) p *= k;
    sum -= p;
  }
  return total + sum / Rational(factorial(m));
}

FockVector state_vector(const Partition& nu, const BasisPtr& basis) {
  if (!is_partition(nu)) throw DomainError("state_vector: not a partition");
  if (size(nu) > basis->cutoff())
    throw CutoffError("state " + to_string(nu) + " lies above the energy cutoff " + std::to_string(basis->cutoff()));
  FockVector v = basis_vector(*basis, basis->vacuum());
  for (int part : nu) v = alpha(-part, basis).apply(v);
  Rational z(aut_factor(nu));
  for (auto& x : v) x /= z;
  return v;
}

FockVector apply_exp_alpha1(const FockVector& v, const BasisPtr& basis, int sign) {
  FockMatrix a1 = alpha(1, basis);
  if (sign < 0) a1 *= -1;
  FockVector out = v, term = v;
  for (int n = 1; !is_zero(term); ++n) {
    term = a1.apply(term);
    for (auto& x : term) x /= n;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += term[i];
  }
  return out;
}

FockMatrix exp_alpha1(const BasisPtr& basis, int sign) {
  FockMatrix a1 = alpha(1, basis);
  if (sign < 0) a1 *= -1;
  FockMatrix out = FockMatrix::identity(basis), term = out;
  for (int n = 1; !term.is_zero(); ++n) {
    term = a1 * term;
    term *= Rational(1, n);
    out += term;
  }
  return out;
}

}  // namespace gwc
