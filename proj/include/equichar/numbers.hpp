#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace equichar {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Error raised by library operations, tagged with a coarse category so the
/// CLI can map failures onto exit codes.
class Error : public std::runtime_error {
 public:
  enum class Kind {
    arithmetic,    // division by zero and friends
    domain,        // argument outside the operation's domain
    shape,         // dimension / size mismatch
    construction,  // invalid group table, action, filtration, ...
    hypothesis,    // input violates a stated hypothesis
    inconsistent,  // data cannot come from an actual cover / module
    unsupported,   // valid request outside the implemented families
    parse,         // malformed input file
  };

  Error(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

inline bool is_integer(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

inline Integer to_integer(const Rational& r) {
  if (!is_integer(r)) throw Error(Error::Kind::arithmetic, "rational is not an integer");
  return boost::multiprecision::numerator(r);
}

std::string rational_to_string(const Rational& r);
Rational parse_rational(const std::string& text);

/// Floor division (round towards minus infinity), as used by valuation
/// formulas with possibly negative arguments.
inline long long floor_div(long long a, long long b) {
  if (b <= 0) throw Error(Error::Kind::domain, "floor_div requires a positive divisor");
  long long q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

inline long long mod_nonneg(long long a, long long b) {
  long long r = a % b;
  return r < 0 ? r + b : r;
}

long euler_phi(long m);
std::vector<long> divisors_of(long m);
std::vector<long> prime_factors_of(long m);
bool is_prime(long m);

}  // namespace equichar
