#include "gwc/brackets.hpp"

#include "gwc/hurwitz.hpp"
#include "gwc/virasoro.hpp"

#include <algorithm>
#include <mutex>

namespace gwc {

int Bracket::count(ClassKind k) const {
  return static_cast<int>(std::count_if(insertions.begin(), insertions.end(),
                                        [k](const Insertion& i) { return i.cls.kind == k; }));
}

void validate(const Bracket& b) {
  if (b.genus < 0) throw DomainError("negative target genus");
  if (b.degree < 0) throw DomainError("negative degree");
  for (const auto& ins : b.insertions) {
    if (ins.level < 0) throw DomainError("negative descendent level");
    if (ins.cls.odd()) {
      if (ins.cls.index < 1 || ins.cls.index > b.genus)
        throw DomainError("odd class index " + std::to_string(ins.cls.index) + " outside 1.." +
                          std::to_string(b.genus));
    } else if (ins.cls.index != 0) {
      throw DomainError("even class with an index");
    }
  }
  for (const auto& p : b.profiles)
    if (!is_partition(p) || size(p) != b.degree)
      throw DomainError("profile " + to_string(p) + " does not partition " + std::to_string(b.degree));
}

std::string to_string(const Insertion& i) {
  std::string c;
  switch (i.cls.kind) {
    case ClassKind::Identity:
      c = "1";
      break;
    case ClassKind::Omega:
      c = "w";
      break;
    case ClassKind::Alpha:
      c = "a" + std::to_string(i.cls.index);
      break;
    case ClassKind::Beta:
      c = "b" + std::to_string(i.cls.index);
      break;
  }
  return "t" + std::to_string(i.level) + "(" + c + ")";
}

std::string to_string(const Bracket& b) {
  std::string s = "<";
  for (std::size_t i = 0; i < b.insertions.size(); ++i) {
    if (i) s += " ";
    s += to_string(b.insertions[i]);
  }
  if (!b.profiles.empty()) {
    s += b.insertions.empty() ? "| " : " | ";
    for (std::size_t j = 0; j < b.profiles.size(); ++j) {
      if (j) s += ";";
      s += to_string(b.profiles[j]);
    }
  }
  return s + ">";
}

Normalized normalize(const Bracket& b) {
  Normalized out{1, b};
  auto& ins = out.canonical.insertions;
  // insertion sort on the odd subsequence counts transpositions; even entries move freely
  std::vector<Insertion> even, odd;
  for (const auto& i : b.insertions) (i.cls.odd() ? odd : even).push_back(i);
  int swaps = 0;
  for (std::size_t i = 1; i < odd.size(); ++i)
    for (std::size_t j = i; j > 0 && odd[j] < odd[j - 1]; --j) {
      std::swap(odd[j], odd[j - 1]);
      ++swaps;
    }
  for (std::size_t i = 1; i < odd.size(); ++i)
    if (odd[i] == odd[i - 1]) {
      out.sign = 0;
      break;
    }
  std::sort(even.begin(), even.end());
  ins = even;
  ins.insert(ins.end(), odd.begin(), odd.end());
  std::sort(out.canonical.profiles.begin(), out.canonical.profiles.end());
  if (out.sign != 0 && swaps % 2) out.sign = -1;
  return out;
}

Rational pairing(const CohClass& g1, const CohClass& g2) {
  if (!g1.odd() || !g2.odd()) throw DomainError("pairing is defined on odd classes only");
  if (g1.index != g2.index || g1.kind == g2.kind) return 0;
  return g1.kind == ClassKind::Alpha ? 1 : -1;
}

BracketSum BracketSum::single(const Bracket& b, const Rational& c) {
  BracketSum s;
  s.add(b, c);
  return s;
}

void BracketSum::add(const Bracket& b, const Rational& c) {
  if (c == 0) return;
  auto n = normalize(b);
  if (n.sign == 0) return;
  Rational v = c * n.sign;
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (it->second == n.canonical) {
      it->first += v;
      if (it->first == 0) terms_.erase(it);
      return;
    }
  }
  terms_.emplace_back(v, std::move(n.canonical));
}

void BracketSum::add(const BracketSum& o, const Rational& scale) {
  for (const auto& [c, b] : o.terms_) add(b, c * scale);
}

std::string BracketSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& [c, b] = terms_[i];
    if (i) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    Rational a = abs(c);
    if (a != 1) s += gwc::to_string(a) + "*";
    s += gwc::to_string(b);
  }
  return s;
}

namespace {

int inversions(const std::vector<int>& seq) {
  int n = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++n;
  return n;
}

void matchings(std::vector<int>& seq, std::vector<bool>& used, std::size_t n,
               const std::function<void(const std::vector<int>&)>& visit) {
  std::size_t first = 0;
  while (first < n && used[first]) ++first;
  if (first == n) {
    visit(seq);
    return;
  }
  used[first] = true;
  for (std::size_t q = first + 1; q < n; ++q) {
    if (used[q]) continue;
    used[q] = true;
    seq.push_back(static_cast<int>(first));
    seq.push_back(static_cast<int>(q));
    matchings(seq, used, n, visit);
    seq.pop_back();
    seq.pop_back();
    used[q] = false;
  }
  used[first] = false;
}

}  // namespace

BracketSum odd_reduce(const Bracket& b) {
  std::vector<Insertion> odd, rest;
  for (const auto& i : b.insertions) {
    if (i.cls.kind == ClassKind::Identity) throw DomainError("odd_reduce: Identity insertion present");
    (i.cls.odd() ? odd : rest).push_back(i);
  }
  BracketSum out;
  if (odd.size() % 2) return out;
  std::vector<int> seq;
  std::vector<bool> used(odd.size(), false);
  matchings(seq, used, odd.size(), [&](const std::vector<int>& s) {
    Rational coef = inversions(s) % 2 ? -1 : 1;
    Bracket nb{b.genus, b.degree, rest, b.profiles};
    for (std::size_t p = 0; p < s.size(); p += 2) {
      const auto& x = odd[s[p]];
      const auto& y = odd[s[p + 1]];
      coef *= pairing(x.cls, y.cls);
      if (coef == 0) return;
      coef *= binomial(x.level + y.level, x.level);
      // tau_{-1}(omega) is read as zero
      if (x.level + y.level == 0) return;
      nb.insertions.push_back(tau(x.level + y.level - 1, CohClass::omega()));
    }
    out.add(nb, coef);
  });
  return out;
}

Monomial bracket_monomial(const Bracket& canonical) {
  Monomial m;
  for (const auto& i : canonical.insertions) {
    FreeVariable v{static_cast<Family>(static_cast<int>(i.cls.kind)), i.cls.index, i.level};
    m.push_back(v.code());
  }
  if (!std::is_sorted(m.begin(), m.end())) throw DomainError("bracket_monomial: bracket not canonical");
  return m;
}

Bracket monomial_bracket(const Monomial& m, int genus, int degree, const std::vector<Partition>& profiles) {
  Bracket b{genus, degree, {}, profiles};
  for (auto c : m) {
    auto v = FreeVariable::decode(c);
    b.insertions.push_back(tau(v.level, CohClass{static_cast<ClassKind>(static_cast<int>(v.family)), v.index}));
  }
  return b;
}

namespace {

std::mutex memo_mutex;
std::map<Bracket, Rational> memo;

Rational evaluate_canonical(const Bracket& b, PipelineLog* log);

Rational evaluate_sum(const BracketSum& s, PipelineLog* log) {
  Rational total = 0;
  for (const auto& [c, br] : s.terms()) total += c * evaluate_canonical(br, log);
  return total;
}

Rational evaluate_canonical(const Bracket& b, PipelineLog* log) {
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(b);
    if (it != memo.end()) {
      if (log) log->push_back("cached " + to_string(b) + " = " + to_string(it->second));
      return it->second;
    }
  }
  Rational value;
  if (b.count(ClassKind::Identity) > 0) {
    int top = 0;
    for (const auto& i : b.insertions)
      if (i.cls.kind == ClassKind::Identity) top = std::max(top, i.level);
    BracketSum s = constraint_identity(top - 1, b);
    if (log) log->push_back("L_" + std::to_string(top - 1) + ": " + to_string(b) + " = " + s.to_string());
    value = evaluate_sum(s, log);
  } else if (b.count(ClassKind::Alpha) + b.count(ClassKind::Beta) > 0) {
    BracketSum s = odd_reduce(b);
    if (log) log->push_back("odd_reduce: " + to_string(b) + " = " + s.to_string());
    value = evaluate_sum(s, log);
  } else {
    StationaryQuery q{b.genus, b.degree, {}, b.profiles};
    for (const auto& i : b.insertions) q.omega_levels.push_back(i.level);
    value = stationary_invariant(q);
    if (log) log->push_back("stationary: " + to_string(b) + " = " + to_string(value));
  }
  std::lock_guard<std::mutex> lock(memo_mutex);
  memo[b] = value;
  return value;
}

}  // namespace

Rational evaluate(const Bracket& b, PipelineLog* log) {
  validate(b);
  auto n = normalize(b);
  if (n.sign == 0) {
    if (log) log->push_back("repeated odd insertion: " + to_string(b) + " = 0");
    return 0;
  }
  if (log && n.sign < 0) log->push_back("normalize: " + to_string(b) + " = -" + to_string(n.canonical));
  return n.sign * evaluate_canonical(n.canonical, log);
}

Rational evaluate(const BracketSum& s) { return evaluate_sum(s, nullptr); }

void clear_evaluation_memo() {
  std::lock_guard<std::mutex> lock(memo_mutex);
  memo.clear();
}

}  // namespace gwc
