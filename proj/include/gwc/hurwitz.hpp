#pragma once

#include "gwc/partitions.hpp"

namespace gwc {

struct StationaryQuery {
  int genus = 0;
  int degree = 0;
  std::vector<int> omega_levels;
  std::vector<Partition> profiles;
};

// p_l(lambda) = sum_i [(lambda_i - i + 1/2)^l - (-i + 1/2)^l] + l! c_{l+1}
Rational completed_cycle(int l, const Partition& lambda);
// |C_eta| chi^lambda_eta / dim lambda
Rational f_value(const Partition& eta, const Partition& lambda);
// disconnected bracket of omega descendents relative to the profiles
Rational stationary_invariant(const StationaryQuery& q);

}  // namespace gwc
