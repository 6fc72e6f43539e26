#pragma once

#include <string>
#include <vector>

#include "equichar/numbers.hpp"

namespace equichar {

/// An element of a cyclotomic field Q(zeta_m), stored at its minimal
/// conductor over the power basis {zeta_m^i : 0 <= i < phi(m)} reduced
/// modulo the m-th cyclotomic polynomial.
///
/// The representation is canonical: two values are equal in the field iff
/// conductor and coefficient vectors coincide, so equality is a pure data
/// comparison. All arithmetic is exact.
class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), coeffs_{Rational(0)} {}
  explicit Cyclotomic(const Rational& r) : conductor_(1), coeffs_{r} {}
  explicit Cyclotomic(long n) : conductor_(1), coeffs_{Rational(n)} {}

  /// zeta_m^k, canonicalized (e.g. zeta_4^2 comes back as -1).
  static Cyclotomic root_of_unity(long m, long k);

  long conductor() const { return conductor_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const { return conductor_ == 1; }
  /// The value as a rational; throws unless is_rational().
  Rational rational_value() const;
  bool is_integer_value() const { return is_rational() && equichar::is_integer(coeffs_[0]); }

  Cyclotomic operator-() const;
  Cyclotomic operator+(const Cyclotomic& other) const;
  Cyclotomic operator-(const Cyclotomic& other) const;
  Cyclotomic operator*(const Cyclotomic& other) const;
  Cyclotomic operator/(const Cyclotomic& other) const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  /// Multiplicative inverse; throws an arithmetic error on zero.
  Cyclotomic inverse() const;
  Cyclotomic pow(long k) const;

  /// Complex conjugation, i.e. the image under zeta |-> zeta^{-1}.
  Cyclotomic conjugate() const;

  bool operator==(const Cyclotomic& other) const {
    return conductor_ == other.conductor_ && coeffs_ == other.coeffs_;
  }
  bool operator!=(const Cyclotomic& other) const { return !(*this == other); }

  /// Human-readable form, e.g. "1/2 + 2*z12 - z12^3".
  std::string to_string() const;

 private:
  Cyclotomic(long conductor, std::vector<Rational> coeffs)
      : conductor_(conductor), coeffs_(std::move(coeffs)) {}

  void canonicalize();

  long conductor_;
  std::vector<Rational> coeffs_;
};

inline Cyclotomic operator*(const Rational& r, const Cyclotomic& x) {
  return Cyclotomic(r) * x;
}

/// The m-th cyclotomic polynomial as integer coefficients c_0..c_{phi(m)}.
const std::vector<Integer>& cyclotomic_polynomial(long m);

}  // namespace equichar
