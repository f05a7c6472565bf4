#include "gwc/partitions.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>

namespace gwc {

bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

int size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

std::string to_string(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

namespace {
void enumerate_into(int remaining, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    enumerate_into(remaining - p, p, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> enumerate_partitions(int d) {
  if (d < 0) throw DomainError("negative partition size");
  std::vector<Partition> out;
  Partition cur;
  enumerate_into(d, d, cur, out);
  return out;
}

Integer aut_factor(const Partition& mu) {
  Integer r = 1;
  std::size_t i = 0;
  while (i < mu.size()) {
    std::size_t j = i;
    while (j < mu.size() && mu[j] == mu[i]) {
      r *= mu[j];
      ++j;
    }
    r *= factorial(static_cast<int>(j - i));
    i = j;
  }
  return r;
}

Integer dimension(const Partition& lambda) {
  if (!is_partition(lambda)) throw DomainError("not a partition: " + to_string(lambda));
  // hook length formula
  Integer hooks = 1;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      int arm = lambda[i] - j - 1;
      int leg = 0;
      for (std::size_t k = i + 1; k < lambda.size() && lambda[k] > j; ++k) ++leg;
      hooks *= arm + leg + 1;
    }
  }
  return factorial(size(lambda)) / hooks;
}

namespace {

std::mutex mn_mutex;
std::map<std::pair<Partition, Partition>, Integer> mn_memo;

// beta numbers of lambda with exactly len beads
std::vector<int> beta_set(const Partition& lambda, std::size_t len) {
  std::vector<int> b(len);
  for (std::size_t i = 0; i < len; ++i) {
    int part = i < lambda.size() ? lambda[i] : 0;
    b[i] = part + static_cast<int>(len - 1 - i);
  }
  return b;
}

Partition from_beta(std::vector<int> b) {
  std::sort(b.rbegin(), b.rend());
  Partition p;
  std::size_t len = b.size();
  for (std::size_t i = 0; i < len; ++i) {
    int part = b[i] - static_cast<int>(len - 1 - i);
    if (part > 0) p.push_back(part);
  }
  return p;
}

// eta is consumed from the front; memo keyed on the remaining suffix
Integer mn(const Partition& lambda, const Partition& eta) {
  if (eta.empty()) return lambda.empty() ? 1 : 0;
  auto key = std::make_pair(lambda, eta);
  {
    std::lock_guard<std::mutex> lock(mn_mutex);
    auto it = mn_memo.find(key);
    if (it != mn_memo.end()) return it->second;
  }
  int r = eta.front();
  Partition rest(eta.begin() + 1, eta.end());
  std::vector<int> b = beta_set(lambda, lambda.size());
  std::set<int> occupied(b.begin(), b.end());
  Integer total = 0;
  for (int bead : b) {
    int target = bead - r;
    if (target < 0 || occupied.count(target)) continue;
    // leg length = beads strictly between target and bead
    int between = 0;
    for (int x : b)
      if (x > target && x < bead) ++between;
    std::vector<int> moved = b;
    std::replace(moved.begin(), moved.end(), bead, target);
    Integer sub = mn(from_beta(moved), rest);
    if (between % 2) total -= sub;
    else total += sub;
  }
  std::lock_guard<std::mutex> lock(mn_mutex);
  mn_memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

Integer character(const Partition& lambda, const Partition& eta) {
  if (!is_partition(lambda) || !is_partition(eta)) throw DomainError("character: malformed partition");
  if (size(lambda) != size(eta))
    throw DomainError("character: size mismatch " + to_string(lambda) + " vs " + to_string(eta));
  return mn(lambda, eta);
}

Integer class_size(const Partition& eta) {
  if (!is_partition(eta)) throw DomainError("class_size: malformed partition");
  return factorial(size(eta)) / aut_factor(eta);
}

std::size_t CharacterTable::index_of(const Partition& p) const {
  auto it = std::lower_bound(partitions.begin(), partitions.end(), p, std::greater<Partition>());
  if (it == partitions.end() || *it != p)
    throw DomainError("partition " + to_string(p) + " not of degree " + std::to_string(degree));
  return static_cast<std::size_t>(it - partitions.begin());
}

bool CharacterTable::consistent() const {
  std::size_t n = count();
  if (dim.size() != n || class_size.size() != n || chi.size() != n * n) return false;
  if (partitions != enumerate_partitions(degree)) return false;
  Integer fact = factorial(degree);
  Integer sd = 0, sc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sd += dim[i] * dim[i];
    sc += class_size[i];
  }
  return sd == fact && sc == fact;
}

CharacterTable build_character_table(int d) {
  CharacterTable t;
  t.degree = d;
  t.partitions = enumerate_partitions(d);
  std::size_t n = t.count();
  for (const auto& p : t.partitions) {
    t.dim.push_back(dimension(p));
    t.class_size.push_back(class_size(p));
  }
  t.chi.reserve(n * n);
  for (const auto& l : t.partitions)
    for (const auto& e : t.partitions) t.chi.push_back(mn(l, e));
  return t;
}

namespace {
std::mutex table_mutex;
std::map<int, std::shared_ptr<const CharacterTable>> tables;
TablePersistence persistence;
}  // namespace

void set_table_persistence(TablePersistence hooks) {
  std::lock_guard<std::mutex> lock(table_mutex);
  persistence = std::move(hooks);
}

void clear_character_tables() {
  std::lock_guard<std::mutex> lock(table_mutex);
  tables.clear();
}

std::shared_ptr<const CharacterTable> character_table(int d) {
  if (d < 0) throw DomainError("negative degree");
  std::lock_guard<std::mutex> lock(table_mutex);
  auto it = tables.find(d);
  if (it != tables.end()) return it->second;
  std::optional<CharacterTable> loaded;
  if (persistence.load) loaded = persistence.load(d);
  std::shared_ptr<const CharacterTable> table;
  if (loaded && loaded->degree == d && loaded->consistent()) {
    table = std::make_shared<const CharacterTable>(std::move(*loaded));
  } else {
    table = std::make_shared<const CharacterTable>(build_character_table(d));
    if (persistence.store) persistence.store(*table);
  }
  tables.emplace(d, table);
  return table;
}

}  // namespace gwc
