#include "equichar/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "detail/linear_solve.hpp"

namespace equichar {

namespace {

using QPoly = std::vector<Rational>;  // coefficients, ascending degree

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly c(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  trim(c);
  return c;
}

// Remainder of a modulo b; b need not be monic.
QPoly qp_mod(QPoly a, const QPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational factor = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    trim(a);
  }
  return a;
}

QPoly qp_divide_exact(QPoly a, const QPoly& b) {
  trim(a);
  QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rational factor = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    trim(a);
  }
  if (!a.empty())
    throw Error(Error::Kind::arithmetic, "polynomial division was not exact");
  return q;
}

// Cached per-conductor data: the cyclotomic polynomial and the coordinates
// of zeta_m^e for all exponents needed by products and lifts.
struct ConductorData {
  long m = 1;
  long phi = 1;
  std::vector<Integer> cyclo;                  // phi(m)+1 coefficients, monic
  std::vector<std::vector<Rational>> powers;   // powers[e], e in [0, 2m)
};

const ConductorData& conductor_data(long m);

std::vector<Integer> compute_cyclotomic(long m) {
  // x^m - 1 divided by the product of the lower-level cyclotomic polynomials.
  QPoly num(m + 1, Rational(0));
  num[0] = Rational(-1);
  num[m] = Rational(1);
  for (long d : divisors_of(m)) {
    if (d == m) continue;
    const auto& cd = conductor_data(d).cyclo;
    QPoly q(cd.size());
    for (std::size_t i = 0; i < cd.size(); ++i) q[i] = Rational(cd[i]);
    num = qp_divide_exact(std::move(num), q);
  }
  std::vector<Integer> out(num.size());
  for (std::size_t i = 0; i < num.size(); ++i) {
    if (!is_integer(num[i]))
      throw Error(Error::Kind::arithmetic, "cyclotomic polynomial not integral");
    out[i] = to_integer(num[i]);
  }
  return out;
}

std::map<long, ConductorData> g_cache;
std::mutex g_cache_mutex;

const ConductorData& conductor_data(long m) {
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_cache.find(m);
    if (it != g_cache.end()) return it->second;
  }
  ConductorData data;
  data.m = m;
  data.phi = euler_phi(m);
  data.cyclo = m == 1 ? std::vector<Integer>{-1, 1} : compute_cyclotomic(m);
  data.powers.resize(2 * m);
  const long phi = data.phi;
  for (long e = 0; e < 2 * m; ++e) {
    std::vector<Rational>& v = data.powers[e];
    v.assign(phi, Rational(0));
    if (e < phi) {
      v[e] = 1;
      continue;
    }
    // zeta^e = zeta * zeta^{e-1}: shift and reduce once by the monic modulus.
    const std::vector<Rational>& prev = data.powers[e - 1];
    std::vector<Rational> shifted(phi + 1, Rational(0));
    for (long i = 0; i < phi; ++i) shifted[i + 1] = prev[i];
    Rational top = shifted[phi];
    if (top != 0)
      for (long i = 0; i < phi; ++i) shifted[i] -= top * Rational(data.cyclo[i]);
    v.assign(shifted.begin(), shifted.begin() + phi);
  }
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  return g_cache.emplace(m, std::move(data)).first->second;
}

// Reduce an arbitrary-exponent polynomial (coefficients of zeta_m^e for
// e < 2m) to power-basis coordinates.
std::vector<Rational> reduce_exponents(long m, const std::vector<Rational>& raw) {
  const ConductorData& data = conductor_data(m);
  std::vector<Rational> out(data.phi, Rational(0));
  for (std::size_t e = 0; e < raw.size(); ++e) {
    if (raw[e] == 0) continue;
    const auto& pw = data.powers[e];
    for (long i = 0; i < data.phi; ++i) out[i] += raw[e] * pw[i];
  }
  return out;
}

// Coordinates of x (given at conductor m) over the basis
// {zeta_d^j : j < phi(d)} of the subfield Q(zeta_d), if x lies in it.
std::optional<std::vector<Rational>> subfield_coordinates(
    long m, long d, const std::vector<Rational>& coords) {
  const ConductorData& data = conductor_data(m);
  const long phi_d = euler_phi(d);
  const long step = m / d;
  // Matrix columns: zeta_m^{j*step} in the conductor-m basis.
  std::vector<std::vector<Rational>> rows(data.phi, std::vector<Rational>(phi_d));
  for (long j = 0; j < phi_d; ++j) {
    const auto& col = data.powers[j * step];
    for (long i = 0; i < data.phi; ++i) rows[i][j] = col[i];
  }
  return detail::solve_linear(
      std::move(rows), coords, [](const Rational& r) { return r == 0; },
      [](const Rational& a, const Rational& b) { return a / b; });
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(long m) {
  if (m < 1) throw Error(Error::Kind::domain, "conductor must be positive");
  return conductor_data(m).cyclo;
}

void Cyclotomic::canonicalize() {
  if (conductor_ == 1) return;
  // Quick exit: a value supported on the constant coordinate is rational.
  bool constant = true;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) {
      constant = false;
      break;
    }
  if (constant) {
    Rational c = coeffs_[0];
    conductor_ = 1;
    coeffs_ = {std::move(c)};
    return;
  }
  bool descended = true;
  while (descended && conductor_ > 1) {
    descended = false;
    for (long q : prime_factors_of(conductor_)) {
      long d = conductor_ / q;
      auto sub = subfield_coordinates(conductor_, d, coeffs_);
      if (sub) {
        conductor_ = d;
        coeffs_ = std::move(*sub);
        descended = true;
        break;
      }
    }
  }
}

Cyclotomic Cyclotomic::root_of_unity(long m, long k) {
  if (m < 1) throw Error(Error::Kind::domain, "root_of_unity requires m >= 1");
  k = static_cast<long>(mod_nonneg(k, m));
  long t = m / std::gcd(m, k == 0 ? m : k);
  long e = k / (m / t);
  std::vector<Rational> raw(e + 1, Rational(0));
  raw[e] = 1;
  Cyclotomic z(t, reduce_exponents(t, raw));
  z.canonicalize();
  return z;
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational())
    throw Error(Error::Kind::arithmetic, "value is not rational (conductor " +
                                             std::to_string(conductor_) + ")");
  return coeffs_[0];
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& other) const {
  // Adding a rational never changes the minimal conductor (unless the result
  // collapses all the way to a rational, which the quick exit catches).
  if (other.conductor_ == 1) {
    Cyclotomic out = *this;
    out.coeffs_[0] += other.coeffs_[0];
    if (out.conductor_ != 1) out.canonicalize();
    return out;
  }
  if (conductor_ == 1) return other + *this;
  long m = std::lcm(conductor_, other.conductor_);
  std::vector<Rational> raw(2 * m, Rational(0));
  long step_a = m / conductor_;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) raw[i * step_a] += coeffs_[i];
  long step_b = m / other.conductor_;
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
    raw[i * step_b] += other.coeffs_[i];
  Cyclotomic out(m, reduce_exponents(m, raw));
  out.canonicalize();
  return out;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& other) const {
  return *this + (-other);
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& other) const {
  if (conductor_ == 1) {
    if (coeffs_[0] == 0) return Cyclotomic();
    Cyclotomic out = other;
    for (auto& c : out.coeffs_) c *= coeffs_[0];
    return out;  // nonzero rational scaling preserves the minimal conductor
  }
  if (other.conductor_ == 1) return other * *this;
  long m = std::lcm(conductor_, other.conductor_);
  long step_a = m / conductor_;
  long step_b = m / other.conductor_;
  std::vector<Rational> raw(2 * m, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      if (other.coeffs_[j] == 0) continue;
      raw[i * step_a + j * step_b] += coeffs_[i] * other.coeffs_[j];
    }
  }
  Cyclotomic out(m, reduce_exponents(m, raw));
  out.canonicalize();
  return out;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw Error(Error::Kind::arithmetic, "inverse of zero");
  if (conductor_ == 1) return Cyclotomic(Rational(1) / coeffs_[0]);
  // Extended Euclid against the (irreducible) cyclotomic modulus.
  const auto& cyc = conductor_data(conductor_).cyclo;
  QPoly r0(cyc.size());
  for (std::size_t i = 0; i < cyc.size(); ++i) r0[i] = Rational(cyc[i]);
  QPoly r1 = coeffs_;
  trim(r1);
  QPoly s0{}, s1{Rational(1)};
  while (true) {
    trim(r1);
    if (r1.empty())
      throw Error(Error::Kind::arithmetic, "element not invertible");
    if (r1.size() == 1) break;
    // r0 = q*r1 + r2
    QPoly r2 = r0;
    QPoly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, Rational(0));
    while (r2.size() >= r1.size() && !r2.empty()) {
      Rational factor = r2.back() / r1.back();
      std::size_t shift = r2.size() - r1.size();
      q[shift] += factor;
      for (std::size_t i = 0; i < r1.size(); ++i) r2[shift + i] -= factor * r1[i];
      trim(r2);
    }
    QPoly s2 = s0;
    QPoly qs = qp_mul(q, s1);
    if (s2.size() < qs.size()) s2.resize(qs.size(), Rational(0));
    for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // Now s1 * this == r1 (a nonzero constant) modulo the cyclotomic modulus.
  Rational unit = r1[0];
  QPoly modulus(cyc.size());
  for (std::size_t i = 0; i < cyc.size(); ++i) modulus[i] = Rational(cyc[i]);
  QPoly inv = qp_mod(std::move(s1), modulus);
  std::vector<Rational> coords(coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < inv.size(); ++i) coords[i] = inv[i] / unit;
  Cyclotomic out(conductor_, std::move(coords));
  out.canonicalize();
  return out;
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& other) const {
  return *this * other.inverse();
}

Cyclotomic Cyclotomic::pow(long k) const {
  if (k == 0) return Cyclotomic(1);
  Cyclotomic base = k < 0 ? inverse() : *this;
  unsigned long e = k < 0 ? -static_cast<unsigned long>(k) : k;
  Cyclotomic acc(1);
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Cyclotomic Cyclotomic::conjugate() const {
  if (conductor_ == 1) return *this;
  long m = conductor_;
  std::vector<Rational> raw(2 * m, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    long e = i == 0 ? 0 : m - static_cast<long>(i);
    raw[e] += coeffs_[i];
  }
  Cyclotomic out(m, reduce_exponents(m, raw));
  out.canonicalize();
  return out;
}

std::string Cyclotomic::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational abs = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (i == 0) {
      os << rational_to_string(abs);
    } else {
      if (abs != 1) os << rational_to_string(abs) << "*";
      os << "z" << conductor_;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace equichar
