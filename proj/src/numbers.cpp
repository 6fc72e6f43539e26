#include "equichar/numbers.hpp"

namespace equichar {

std::string rational_to_string(const Rational& r) {
  std::string s = boost::multiprecision::numerator(r).str();
  if (boost::multiprecision::denominator(r) != 1)
    s += "/" + boost::multiprecision::denominator(r).str();
  return s;
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw Error(Error::Kind::parse, "zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw Error(Error::Kind::parse, "cannot parse rational '" + text + "'");
  }
}

long euler_phi(long m) {
  if (m <= 0) throw Error(Error::Kind::domain, "euler_phi requires m >= 1");
  long result = m;
  long n = m;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<long> divisors_of(long m) {
  std::vector<long> small, large;
  for (long d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      small.push_back(d);
      if (d != m / d) large.push_back(m / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<long> prime_factors_of(long m) {
  std::vector<long> primes;
  long n = m;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

bool is_prime(long m) {
  if (m < 2) return false;
  for (long p = 2; p * p <= m; ++p)
    if (m % p == 0) return false;
  return true;
}

}  // namespace equichar
