#pragma once

#include <vector>

#include "equichar/numbers.hpp"

namespace equichar {

/// Numerical data of a finite Galois extension of local fields: the orders
/// |G_{-1}| >= |G_0| >= |G_1| >= ... of the ramification filtration
/// (trailing 1s may be omitted) and the residue characteristic.
struct LocalExtensionData {
  std::vector<long> filtration_orders;  // starts at |G_{-1}| = |G|
  long p = 0;

  long order_at(long s) const {  // |G_s|, s >= -1
    std::size_t idx = static_cast<std::size_t>(s + 1);
    return idx < filtration_orders.size() ? filtration_orders[idx] : 1;
  }
  long group_order() const { return order_at(-1); }
  long ramification_index() const { return order_at(0); }
  long different_order() const;
  bool weakly_ramified() const { return order_at(2) == 1; }

  void validate() const;
};

/// Whether the fractional ideal m_L^b is free over O_K[G]: true iff the
/// extension is weakly ramified and b == 1 (mod |G_1|).
bool decide_free(const LocalExtensionData& ext, long b);

/// K-valuation of the invariants (m_L^b)^G: a = 1 + floor((b-1)/e).
long invariant_valuation(long b, long e);

/// K-valuation of the trace image Tr(m_L^b): a' = floor((ord(different) + b)/e).
long trace_valuation(long b, long e, long different_order);

/// For a totally ramified cyclic degree-p extension with ramification jump
/// at s (orders p through G_s, trivial after): whether the trace map is
/// surjective onto the invariants of m_L^b, i.e. whether
/// trace_valuation(b, p, (s+1)(p-1)) equals invariant_valuation(b, p).
bool surjectivity_of_trace(const LocalExtensionData& ext, long b);

}  // namespace equichar
