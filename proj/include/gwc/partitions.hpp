#pragma once

#include "gwc/exactnum.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gwc {

// weakly decreasing positive parts; empty for d = 0
using Partition = std::vector<int>;

bool is_partition(const Partition& p);
int size(const Partition& p);
std::string to_string(const Partition& p);

// all partitions of d, reverse lexicographic: (3), (2,1), (1,1,1)
std::vector<Partition> enumerate_partitions(int d);

// |Aut(mu)| * prod mu_i
Integer aut_factor(const Partition& mu);
Integer dimension(const Partition& lambda);
Integer character(const Partition& lambda, const Partition& eta);
Integer class_size(const Partition& eta);

struct CharacterTable {
  int degree = 0;
  std::vector<Partition> partitions;
  std::vector<Integer> dim;
  std::vector<Integer> class_size;
  std::vector<Integer> chi;  // row-major, chi[lambda * n + eta]

  std::size_t count() const { return partitions.size(); }
  std::size_t index_of(const Partition& p) const;
  const Integer& value(std::size_t lambda, std::size_t eta) const { return chi[lambda * count() + eta]; }
  // sum dim^2 = d!, sum class sizes = d!
  bool consistent() const;
};

CharacterTable build_character_table(int d);
// shared per-degree table; the first caller builds it, later callers reuse it
std::shared_ptr<const CharacterTable> character_table(int d);

struct TablePersistence {
  std::function<std::optional<CharacterTable>(int)> load;
  std::function<void(const CharacterTable&)> store;
};
void set_table_persistence(TablePersistence hooks);
void clear_character_tables();

}  // namespace gwc
