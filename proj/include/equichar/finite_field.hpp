#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "equichar/cyclotomic.hpp"
#include "equichar/numbers.hpp"

namespace equichar {

/// The finite field F_{p^s} with a fixed deterministic modulus and a fixed
/// multiplicative generator.
///
/// Elements are encoded as integers sum c_i p^i for coordinates c_i over the
/// polynomial basis. The modulus is the irreducible monic polynomial of
/// degree s whose coefficient encoding is smallest; the generator is the
/// smallest element that generates the multiplicative group and is
/// norm-compatible with the generators of all subfields, i.e.
/// g^{(p^s-1)/(p^t-1)} is a root of the minimal polynomial of the designated
/// generator of F_{p^t} for every t | s. This makes the Teichmueller-style
/// lift below independent of the field an element is computed in.
class FiniteField {
 public:
  using Elt = std::uint32_t;

  /// Cached access; the same (p, s) always returns the same field object.
  static std::shared_ptr<const FiniteField> get(long p, long s);

  long characteristic() const { return p_; }
  long degree() const { return s_; }
  long size() const { return q_; }
  Elt zero() const { return 0; }
  Elt one() const { return 1; }
  Elt generator() const { return gen_; }
  const std::vector<long>& modulus() const { return modulus_; }

  Elt add(Elt a, Elt b) const;
  Elt sub(Elt a, Elt b) const;
  Elt neg(Elt a) const;
  Elt mul(Elt a, Elt b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
  }
  Elt inv(Elt a) const;
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
  Elt pow(Elt a, long e) const;
  Elt from_int(long c) const;  // image of an integer (prime-field element)

  /// Discrete logarithm with respect to the designated generator.
  long dlog(Elt a) const;
  long element_order(Elt a) const;
  /// A root of unity of exact order t (requires t | p^s - 1).
  Elt root_of_unity(long t) const;

  /// The canonical lift of a nonzero element into Q(zeta_{p^s-1}):
  /// x = g^i maps to zeta_{p^s-1}^i. Multiplicative, and compatible with
  /// embed() across extensions.
  Cyclotomic lift(Elt a) const;

  /// The designated embedding into F_{p^{s*t}}.
  Elt embed(Elt a, const FiniteField& bigger) const;

  /// Minimal polynomial over F_p (monic, ascending coefficients).
  std::vector<long> min_poly(Elt a) const;

  std::string to_string(Elt a) const;

 private:
  FiniteField(long p, long s);

  std::vector<long> decode(Elt a) const;
  Elt encode(const std::vector<long>& coords) const;

  long p_, s_, q_;
  std::vector<long> modulus_;  // ascending, degree s, monic (leading 1 implicit -- stored with it)
  std::vector<Elt> exp_;       // exp_[i] = g^i, size q-1
  std::vector<long> log_;      // log_[code], log_[0] = -1
  Elt gen_ = 0;
};

/// Lift of a nonzero finite-field element to a root of unity in canonical
/// cyclotomic form. Raises a domain error on zero.
Cyclotomic brauer_lift(const FiniteField& field, FiniteField::Elt x);

}  // namespace equichar
