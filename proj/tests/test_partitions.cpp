#include "gwc/partitions.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

using namespace gwc;

namespace {

using Poly = std::map<std::vector<int>, long>;

Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// Frobenius: chi^lambda_eta = [x^{lambda + delta}] a_delta(x) prod_i p_{eta_i}(x), n = d variables
long frobenius_character(const Partition& lambda, const Partition& eta) {
  const int n = std::max(1, size(lambda));
  Poly acc{{std::vector<int>(n, 0), 1}};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> ei(n, 0), ej(n, 0);
      ei[i] = 1;
      ej[j] = 1;
      acc = multiply(acc, Poly{{ei, 1}, {ej, -1}});
    }
  for (int part : eta) {
    Poly p;
    for (int i = 0; i < n; ++i) {
      std::vector<int> e(n, 0);
      e[i] = part;
      p[e] = 1;
    }
    acc = multiply(acc, p);
  }
  std::vector<int> target(n, 0);
  for (int i = 0; i < n; ++i) target[i] = (i < static_cast<int>(lambda.size()) ? lambda[i] : 0) + n - 1 - i;
  auto it = acc.find(target);
  return it == acc.end() ? 0 : it->second;
}

// standard Young tableaux by removing corners
long count_tableaux(Partition p) {
  if (p.empty()) return 1;
  long total = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i + 1 < p.size() && p[i + 1] == p[i]) continue;
    Partition q = p;
    if (--q[i] == 0) q.pop_back();
    total += count_tableaux(q);
  }
  return total;
}

Partition cycle_type(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size());
  Partition t;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    t.push_back(len);
  }
  std::sort(t.rbegin(), t.rend());
  return t;
}

}  // namespace

TEST(Partitions, Enumeration) {
  EXPECT_EQ(enumerate_partitions(0), std::vector<Partition>{Partition{}});
  EXPECT_EQ(enumerate_partitions(3), (std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}}));
  // brute force: count weakly decreasing compositions
  for (int d = 0; d <= 10; ++d) {
    std::function<long(int, int)> count = [&](int rest, int hi) -> long {
      if (rest == 0) return 1;
      long c = 0;
      for (int p = std::min(rest, hi); p >= 1; --p) c += count(rest - p, p);
      return c;
    };
    auto ps = enumerate_partitions(d);
    EXPECT_EQ(static_cast<long>(ps.size()), count(d, d));
    for (const auto& p : ps) EXPECT_TRUE(is_partition(p) && size(p) == d);
  }
  EXPECT_EQ(enumerate_partitions(8).size(), 22u);
  EXPECT_THROW(enumerate_partitions(-1), DomainError);
}

TEST(Partitions, AutFactor) {
  EXPECT_EQ(aut_factor({1, 1}), 2);
  EXPECT_EQ(aut_factor({2, 1}), 2);
  EXPECT_EQ(aut_factor({2, 2, 1}), 8);
  EXPECT_EQ(aut_factor({}), 1);
}

TEST(Partitions, DimensionMatchesTableauCount) {
  EXPECT_EQ(dimension({2, 1}), 2);
  EXPECT_EQ(dimension({2, 2}), 2);
  for (int d = 1; d <= 8; ++d) {
    EXPECT_EQ(dimension({d}), 1);
    for (const auto& l : enumerate_partitions(d)) {
      EXPECT_EQ(dimension(l), count_tableaux(l)) << to_string(l);
      EXPECT_EQ(dimension(l), character(l, Partition(d, 1)));
    }
  }
}

TEST(Partitions, CharactersMatchFrobeniusFormula) {
  EXPECT_EQ(character({1, 1}, {2}), -1);
  EXPECT_EQ(character({2, 1}, {3}), -1);
  for (int d = 1; d <= 5; ++d)
    for (const auto& l : enumerate_partitions(d)) {
      for (const auto& e : enumerate_partitions(d))
        EXPECT_EQ(character(l, e), frobenius_character(l, e)) << to_string(l) << " " << to_string(e);
    }
  for (const auto& e : enumerate_partitions(4)) EXPECT_EQ(character({4}, e), 1);
  EXPECT_THROW(character({2}, {1}), DomainError);
}

TEST(Partitions, ClassSizesMatchPermutationCount) {
  EXPECT_EQ(class_size({1, 1, 1}), 1);
  EXPECT_EQ(class_size({2, 1}), 3);
  EXPECT_EQ(class_size({3}), 2);
  for (int d = 1; d <= 6; ++d) {
    std::map<Partition, long> counts;
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    do counts[cycle_type(perm)]++;
    while (std::next_permutation(perm.begin(), perm.end()));
    for (const auto& e : enumerate_partitions(d)) EXPECT_EQ(class_size(e), counts[e]) << to_string(e);
  }
}

TEST(CharacterTables, Orthogonality) {
  for (int d = 0; d <= 8; ++d) {
    auto t = character_table(d);
    ASSERT_TRUE(t->consistent());
    const std::size_t n = t->count();
    Integer sum_dim2 = 0, sum_class = 0;
    for (std::size_t i = 0; i < n; ++i) {
      sum_dim2 += t->dim[i] * t->dim[i];
      sum_class += t->class_size[i];
    }
    EXPECT_EQ(sum_dim2, factorial(d));
    EXPECT_EQ(sum_class, factorial(d));
    for (std::size_t e = 0; e < n; ++e)
      for (std::size_t s = 0; s < n; ++s) {
        Integer col = 0;
        for (std::size_t l = 0; l < n; ++l) col += t->value(l, e) * t->value(l, s);
        EXPECT_EQ(col, e == s ? Integer(factorial(d) / t->class_size[e]) : Integer(0));
      }
  }
}

TEST(CharacterTables, SharedAndBuiltOnce) {
  clear_character_tables();
  std::atomic<int> stores = 0;
  set_table_persistence({[](int) { return std::optional<CharacterTable>{}; },
                         [&](const CharacterTable&) { ++stores; }});
  std::vector<std::thread> threads;
  std::vector<std::shared_ptr<const CharacterTable>> got(8);
  for (int i = 0; i < 8; ++i) threads.emplace_back([&, i] { got[i] = character_table(7); });
  for (auto& th : threads) th.join();
  for (const auto& g : got) EXPECT_EQ(g.get(), got[0].get());
  EXPECT_EQ(stores.load(), 1);

  // a consistent table from persistence is used as is
  clear_character_tables();
  int loads = 0;
  const CharacterTable built = build_character_table(5);
  set_table_persistence({[&](int d) {
                           ++loads;
                           return d == 5 ? std::optional<CharacterTable>(built) : std::nullopt;
                         },
                         [](const CharacterTable&) {}});
  EXPECT_EQ(character_table(5)->chi, built.chi);
  EXPECT_EQ(loads, 1);
  set_table_persistence({});
  clear_character_tables();
}
