#include "equichar/local.hpp"

namespace equichar {

long LocalExtensionData::different_order() const {
  long sum = 0;
  for (long s = 0; order_at(s) > 1; ++s) sum += order_at(s) - 1;
  return sum;
}

void LocalExtensionData::validate() const {
  if (!is_prime(p)) throw Error(Error::Kind::domain, "residue characteristic must be prime");
  if (filtration_orders.empty())
    throw Error(Error::Kind::domain, "empty filtration");
  for (std::size_t i = 0; i < filtration_orders.size(); ++i) {
    if (filtration_orders[i] < 1)
      throw Error(Error::Kind::domain, "filtration orders must be positive");
    if (i > 0 && filtration_orders[i] > filtration_orders[i - 1])
      throw Error(Error::Kind::domain, "filtration orders must be non-increasing");
    if (i > 0 && filtration_orders[i - 1] % filtration_orders[i] != 0)
      throw Error(Error::Kind::domain, "filtration orders must divide each other");
  }
  // |G_0 / G_1| prime to p; |G_s| a power of p for s >= 1.
  long tame = order_at(0) / order_at(1);
  if (tame % p == 0)
    throw Error(Error::Kind::domain, "|G_0/G_1| must be coprime to the residue characteristic");
  for (long s = 1; order_at(s) > 1; ++s) {
    long o = order_at(s);
    while (o % p == 0) o /= p;
    if (o != 1)
      throw Error(Error::Kind::domain, "|G_s| must be a p-power for s >= 1");
  }
}

bool decide_free(const LocalExtensionData& ext, long b) {
  ext.validate();
  return ext.weakly_ramified() && mod_nonneg(b - 1, ext.order_at(1)) == 0;
}

long invariant_valuation(long b, long e) {
  if (e < 1) throw Error(Error::Kind::domain, "ramification index must be positive");
  return static_cast<long>(1 + floor_div(b - 1, e));
}

long trace_valuation(long b, long e, long different_order) {
  if (e < 1) throw Error(Error::Kind::domain, "ramification index must be positive");
  if (different_order < 0) throw Error(Error::Kind::domain, "negative different order");
  return static_cast<long>(floor_div(different_order + b, e));
}

bool surjectivity_of_trace(const LocalExtensionData& ext, long b) {
  ext.validate();
  const long p = ext.p;
  if (ext.group_order() != p || ext.ramification_index() != p)
    throw Error(Error::Kind::domain,
                "supported only for totally ramified extensions of degree p");
  long s = 0;
  while (ext.order_at(s + 1) == p) ++s;
  if (s < 1)
    throw Error(Error::Kind::domain,
                "supported only for wildly ramified extensions (jump at s >= 1)");
  long different = (s + 1) * (p - 1);
  return trace_valuation(b, p, different) == invariant_valuation(b, p);
}

}  // namespace equichar
