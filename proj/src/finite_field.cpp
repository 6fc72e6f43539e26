#include "equichar/finite_field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace equichar {

namespace {

using Poly = std::vector<long>;  // ascending coefficients mod p

void ptrim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly pmul(const Poly& a, const Poly& b, long p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  ptrim(c);
  return c;
}

Poly pmod(Poly a, const Poly& m, long p) {
  ptrim(a);
  while (a.size() >= m.size() && !a.empty()) {
    long lead_inv = 1;
    // modulus is monic in all uses
    long factor = (a.back() * lead_inv) % p;
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i)
      a[shift + i] = ((a[shift + i] - factor * m[i]) % p + p) % p;
    ptrim(a);
  }
  return a;
}

Poly ppowmod(Poly base, Integer e, const Poly& m, long p) {
  Poly acc{1};
  base = pmod(std::move(base), m, p);
  while (e > 0) {
    if ((e & 1) != 0) acc = pmod(pmul(acc, base, p), m, p);
    base = pmod(pmul(base, base, p), m, p);
    e >>= 1;
  }
  return acc;
}

Poly pgcd(Poly a, Poly b, long p) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    // make b monic for pmod
    long inv = 1;
    for (long x = 1; x < p; ++x)
      if ((x * b.back()) % p == 1) {
        inv = x;
        break;
      }
    for (auto& c : b) c = (c * inv) % p;
    Poly r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool poly_irreducible(const Poly& f, long p) {
  const long s = static_cast<long>(f.size()) - 1;
  // f is irreducible of degree s iff x^{p^s} == x mod f and
  // gcd(x^{p^{s/l}} - x, f) = 1 for every prime l | s.
  Integer ps = 1;
  for (long i = 0; i < s; ++i) ps *= p;
  Poly x{0, 1};
  Poly xp = ppowmod(x, ps, f, p);
  Poly diff = xp;
  if (diff.size() < 2) diff.resize(2, 0);
  diff[1] = ((diff[1] - 1) % p + p) % p;
  ptrim(diff);
  if (!diff.empty()) return false;
  for (long l : prime_factors_of(s)) {
    Integer pd = 1;
    for (long i = 0; i < s / l; ++i) pd *= p;
    Poly xq = ppowmod(x, pd, f, p);
    if (xq.size() < 2) xq.resize(2, 0);
    xq[1] = ((xq[1] - 1) % p + p) % p;
    ptrim(xq);
    Poly g = pgcd(f, xq, p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::map<std::pair<long, long>, std::shared_ptr<const FiniteField>> g_fields;
std::mutex g_fields_mutex;

}  // namespace

std::shared_ptr<const FiniteField> FiniteField::get(long p, long s) {
  if (!is_prime(p)) throw Error(Error::Kind::domain, "characteristic must be prime");
  if (s < 1 || s > 20) throw Error(Error::Kind::domain, "field degree out of range");
  {
    std::lock_guard<std::mutex> lock(g_fields_mutex);
    auto it = g_fields.find({p, s});
    if (it != g_fields.end()) return it->second;
  }
  std::shared_ptr<const FiniteField> field(new FiniteField(p, s));
  std::lock_guard<std::mutex> lock(g_fields_mutex);
  auto [it, inserted] = g_fields.emplace(std::make_pair(p, s), field);
  return it->second;
}

FiniteField::FiniteField(long p, long s) : p_(p), s_(s) {
  long q = 1;
  for (long i = 0; i < s; ++i) {
    q *= p;
    if (q > 2'000'000) throw Error(Error::Kind::domain, "field too large");
  }
  q_ = q;

  // Deterministic modulus: smallest encoding sum c_i p^i over the monic
  // irreducible polynomials x^s + c_{s-1} x^{s-1} + ... + c_0.
  if (s == 1) {
    modulus_ = {0, 1};  // x
  } else {
    for (long code = 0;; ++code) {
      if (code >= q) throw Error(Error::Kind::construction, "no irreducible polynomial found");
      Poly f(s + 1, 0);
      long c = code;
      for (long i = 0; i < s; ++i) {
        f[i] = c % p;
        c /= p;
      }
      f[s] = 1;
      if (poly_irreducible(f, p)) {
        modulus_ = f;
        break;
      }
    }
  }

  // Multiplication without tables, used during construction only.
  auto raw_mul = [&](Elt a, Elt b) -> Elt {
    Poly fa = decode(a), fb = decode(b);
    Poly prod = pmul(fa, fb, p_);
    if (s_ > 1) prod = pmod(std::move(prod), modulus_, p_);
    else if (!prod.empty()) prod = {prod[0] % p_};
    return encode(prod);
  };
  auto raw_pow = [&](Elt a, long e) -> Elt {
    Elt acc = 1, base = a;
    while (e > 0) {
      if (e & 1) acc = raw_mul(acc, base);
      base = raw_mul(base, base);
      e >>= 1;
    }
    return acc;
  };

  const long group_order = q_ - 1;
  auto primes = prime_factors_of(group_order);

  // Minimal polynomials of the designated subfield generators, needed for
  // the norm-compatibility constraint.
  std::vector<std::pair<long, std::vector<long>>> subfield_minpolys;
  for (long t = 1; t < s_; ++t) {
    if (s_ % t != 0) continue;
    auto sub = FiniteField::get(p_, t);
    subfield_minpolys.emplace_back(t, sub->min_poly(sub->generator()));
  }

  auto min_poly_raw = [&](Elt a) -> Poly {
    // Product of (x - a^{p^i}) over the Frobenius orbit of a.
    std::vector<Elt> orbit;
    Elt cur = a;
    do {
      orbit.push_back(cur);
      cur = raw_pow(cur, p_);
    } while (cur != a);
    std::vector<Elt> prod{1};
    for (Elt r : orbit) {
      std::vector<Elt> next(prod.size() + 1, 0);
      for (std::size_t i = 0; i < prod.size(); ++i) {
        next[i + 1] = add(next[i + 1], prod[i]);
        next[i] = add(next[i], raw_mul(prod[i], neg(r)));
      }
      prod = std::move(next);
    }
    Poly out(prod.size());
    for (std::size_t i = 0; i < prod.size(); ++i) {
      if (prod[i] >= static_cast<Elt>(p_))
        throw Error(Error::Kind::arithmetic, "minimal polynomial not over the prime field");
      out[i] = static_cast<long>(prod[i]);
    }
    return out;
  };

  // Smallest norm-compatible generator.
  for (Elt cand = 1; cand < static_cast<Elt>(q_); ++cand) {
    bool full_order = true;
    for (long l : primes) {
      if (raw_pow(cand, group_order / l) == 1) {
        full_order = false;
        break;
      }
    }
    if (!full_order) continue;
    bool compatible = true;
    for (const auto& [t, mp] : subfield_minpolys) {
      long pt = 1;
      for (long i = 0; i < t; ++i) pt *= p_;
      Elt h = raw_pow(cand, group_order / (pt - 1));
      if (min_poly_raw(h) != mp) {
        compatible = false;
        break;
      }
    }
    if (!compatible) continue;
    gen_ = cand;
    break;
  }
  if (gen_ == 0) throw Error(Error::Kind::construction, "no compatible generator found");

  exp_.resize(group_order);
  log_.assign(q_, -1);
  Elt cur = 1;
  for (long i = 0; i < group_order; ++i) {
    exp_[i] = cur;
    log_[cur] = i;
    cur = raw_mul(cur, gen_);
  }
  if (cur != 1) throw Error(Error::Kind::construction, "generator order mismatch");
}

std::vector<long> FiniteField::decode(Elt a) const {
  std::vector<long> out(s_, 0);
  long v = a;
  for (long i = 0; i < s_; ++i) {
    out[i] = v % p_;
    v /= p_;
  }
  ptrim(out);
  return out;
}

FiniteField::Elt FiniteField::encode(const std::vector<long>& coords) const {
  long v = 0;
  for (std::size_t i = coords.size(); i-- > 0;) v = v * p_ + mod_nonneg(coords[i], p_);
  return static_cast<Elt>(v);
}

FiniteField::Elt FiniteField::add(Elt a, Elt b) const {
  long out = 0;
  long va = a, vb = b;
  long base = 1;
  for (long i = 0; i < s_; ++i) {
    long digit = (va % p_ + vb % p_) % p_;
    out += digit * base;
    va /= p_;
    vb /= p_;
    base *= p_;
  }
  return static_cast<Elt>(out);
}

FiniteField::Elt FiniteField::sub(Elt a, Elt b) const { return add(a, neg(b)); }

FiniteField::Elt FiniteField::neg(Elt a) const {
  long out = 0, base = 1, va = a;
  for (long i = 0; i < s_; ++i) {
    long digit = (p_ - va % p_) % p_;
    out += digit * base;
    va /= p_;
    base *= p_;
  }
  return static_cast<Elt>(out);
}

FiniteField::Elt FiniteField::inv(Elt a) const {
  if (a == 0) throw Error(Error::Kind::arithmetic, "division by zero in finite field");
  long l = log_[a];
  return exp_[(q_ - 1 - l) % (q_ - 1)];
}

FiniteField::Elt FiniteField::pow(Elt a, long e) const {
  if (a == 0) {
    if (e < 0) throw Error(Error::Kind::arithmetic, "zero to a negative power");
    return e == 0 ? 1 : 0;
  }
  long l = log_[a];
  long m = mod_nonneg(l * (e % (q_ - 1)), q_ - 1);
  return exp_[m];
}

FiniteField::Elt FiniteField::from_int(long c) const {
  return static_cast<Elt>(mod_nonneg(c, p_));
}

long FiniteField::dlog(Elt a) const {
  if (a == 0) throw Error(Error::Kind::domain, "discrete log of zero");
  return log_[a];
}

long FiniteField::element_order(Elt a) const {
  if (a == 0) throw Error(Error::Kind::domain, "order of zero");
  long l = log_[a];
  return (q_ - 1) / std::gcd<long>(q_ - 1, l);
}

FiniteField::Elt FiniteField::root_of_unity(long t) const {
  if (t <= 0 || (q_ - 1) % t != 0)
    throw Error(Error::Kind::domain,
                "no root of unity of order " + std::to_string(t) + " in F_" + std::to_string(q_));
  return exp_[(q_ - 1) / t % (q_ - 1)];
}

Cyclotomic FiniteField::lift(Elt a) const {
  if (a == 0) throw Error(Error::Kind::domain, "cannot lift zero");
  return Cyclotomic::root_of_unity(q_ - 1, log_[a]);
}

FiniteField::Elt FiniteField::embed(Elt a, const FiniteField& bigger) const {
  if (bigger.p_ != p_ || bigger.s_ % s_ != 0)
    throw Error(Error::Kind::domain, "no embedding between these fields");
  if (a == 0) return 0;
  long ratio = (bigger.q_ - 1) / (q_ - 1);
  long l = log_[a];
  return bigger.exp_[static_cast<long>((static_cast<long long>(l) * ratio) % (bigger.q_ - 1))];
}

std::vector<long> FiniteField::min_poly(Elt a) const {
  std::vector<Elt> orbit;
  Elt cur = a;
  do {
    orbit.push_back(cur);
    cur = pow(cur, p_);
  } while (cur != a);
  std::vector<Elt> prod{1};
  for (Elt r : orbit) {
    std::vector<Elt> next(prod.size() + 1, 0);
    for (std::size_t i = 0; i < prod.size(); ++i) {
      next[i + 1] = add(next[i + 1], prod[i]);
      next[i] = add(next[i], mul(prod[i], neg(r)));
    }
    prod = std::move(next);
  }
  std::vector<long> out(prod.size());
  for (std::size_t i = 0; i < prod.size(); ++i) {
    if (prod[i] >= static_cast<Elt>(p_))
      throw Error(Error::Kind::arithmetic, "minimal polynomial not over the prime field");
    out[i] = static_cast<long>(prod[i]);
  }
  return out;
}

std::string FiniteField::to_string(Elt a) const {
  if (s_ == 1) return std::to_string(a);
  std::ostringstream os;
  os << "[";
  long v = a;
  for (long i = 0; i < s_; ++i) {
    if (i) os << ",";
    os << v % p_;
    v /= p_;
  }
  os << "]";
  return os.str();
}

Cyclotomic brauer_lift(const FiniteField& field, FiniteField::Elt x) {
  return field.lift(x);
}

}  // namespace equichar
