#include "gwc/hurwitz.hpp"

namespace gwc {

namespace {
Rational rpow(const Rational& x, int l) {
  Rational r = 1;
  for (int i = 0; i < l; ++i) r *= x;
  return r;
}
}  // namespace

Rational completed_cycle(int l, const Partition& lambda) {
  if (l <= 0) throw DomainError("completed_cycle: l must be positive");
  if (!is_partition(lambda)) throw DomainError("completed_cycle: malformed partition");
  Rational sum = 0;
  for (std::size_t idx = 0; idx < lambda.size(); ++idx) {
    int i = static_cast<int>(idx) + 1;
    sum += rpow(Rational(2 * (lambda[idx] - i) + 1, 2), l) - rpow(Rational(-2 * i + 1, 2), l);
  }
  return sum + Rational(factorial(l)) * c_coefficients(l + 1)[l + 1];
}

Rational f_value(const Partition& eta, const Partition& lambda) {
  if (size(eta) != size(lambda)) throw DomainError("f_value: size mismatch");
  return Rational(class_size(eta) * character(lambda, eta)) / Rational(dimension(lambda));
}

Rational stationary_invariant(const StationaryQuery& q) {
  if (q.degree < 0 || q.genus < 0) throw DomainError("stationary_invariant: negative genus or degree");
  for (const auto& eta : q.profiles)
    if (!is_partition(eta) || size(eta) != q.degree)
      throw DomainError("profile " + to_string(eta) + " does not partition " + std::to_string(q.degree));
  for (int z : q.omega_levels)
    if (z < 0) throw DomainError("stationary_invariant: negative level");

  auto table = character_table(q.degree);
  std::vector<std::size_t> eta_idx;
  for (const auto& eta : q.profiles) eta_idx.push_back(table->index_of(eta));
  Rational dfact(factorial(q.degree));
  int exponent = 2 - 2 * q.genus;

  Rational total = 0;
  for (std::size_t li = 0; li < table->count(); ++li) {
    const auto& lambda = table->partitions[li];
    Rational dim(table->dim[li]);
    Rational term = 1;
    Rational base = dim / dfact;
    if (exponent >= 0) {
      term = rpow(base, exponent);
    } else {
      term = rpow(1 / base, -exponent);
    }
    for (int z : q.omega_levels) {
      term *= completed_cycle(z + 1, lambda) / Rational(factorial(z + 1));
      if (term == 0) break;
    }
    for (std::size_t e : eta_idx) term *= Rational(table->class_size[e] * table->value(li, e)) / dim;
    total += term;
  }
  return total;
}

}  // namespace gwc
