#include "equichar/oracle.hpp"

#include <algorithm>
#include <set>

#include "equichar/euler.hpp"

namespace equichar {

namespace {

using Elt = FiniteField::Elt;

// Binomial coefficients modulo the field characteristic.
std::vector<std::vector<long>> binomial_table(long rows, long p) {
  std::vector<std::vector<long>> binom(rows + 1);
  for (long i = 0; i <= rows; ++i) {
    binom[i].assign(i + 1, 1);
    for (long j = 1; j < i; ++j) binom[i][j] = (binom[i - 1][j - 1] + binom[i - 1][j]) % p;
  }
  return binom;
}

// A finite sum of monomials x^i y^j (i in Z, 0 <= j < p) in the function
// field of y^p - y = x^r. Distinct monomials have distinct orders at the
// wild point (ord = -(p i + r j) with gcd(p, r) = 1), so the order of a sum
// is the minimum over its support with no cancellation possible.
struct ASElement {
  std::map<std::pair<long, long>, Elt> terms;

  void add_term(long i, long j, Elt c, const FiniteField& f) {
    if (c == 0) return;
    auto key = std::make_pair(i, j);
    auto it = terms.find(key);
    if (it == terms.end()) {
      terms.emplace(key, c);
    } else {
      it->second = f.add(it->second, c);
      if (it->second == 0) terms.erase(it);
    }
  }
};

long as_order_at_infinity(const ASElement& e, long p, long r) {
  if (e.terms.empty()) throw Error(Error::Kind::arithmetic, "order of the zero element");
  long best = 0;
  bool first = true;
  for (const auto& [key, c] : e.terms) {
    (void)c;
    long ord = -(p * key.first + r * key.second);
    if (first || ord < best) best = ord;
    first = false;
  }
  return best;
}

}  // namespace

EquivariantDivisor OracleDivisor::to_abstract() const {
  EquivariantDivisor out;
  out.ramified = ramified;
  for (const auto& [coeff, base] : unramified) {
    (void)base;
    if (coeff != 0) out.unramified.push_back({coeff, 1});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Construction

ExplicitCover ExplicitCover::artin_schreier(long p, long r) {
  if (!is_prime(p)) throw Error(Error::Kind::domain, "p must be prime");
  if (r < 1 || r % p == 0)
    throw Error(Error::Kind::domain, "requires r >= 1 with p not dividing r");
  ExplicitCover cover;
  cover.kind_ = ExplicitKind::artin_schreier;
  cover.p_ = p;
  cover.param_ = r;
  cover.field_ = FiniteField::get(p, 1);

  GroupPtr g = CayleyGroup::cyclic(p);
  cover.derived_.group = g;
  cover.derived_.p = p;
  cover.derived_.base_genus = 0;

  // Ramification measured from first principles: G_{P,s} consists of the
  // automorphisms moving a uniformizer by something of order >= s + 1.
  std::vector<long> ord_of(p, 0);
  for (int c = 1; c < p; ++c) ord_of[c] = cover.measure_jump_raw(c);
  long max_ord = *std::max_element(ord_of.begin(), ord_of.end());

  RamificationOrbit orbit;
  orbit.name = "infty";
  orbit.decomposition = Subgroup::whole(g);
  for (long s = 0; s < max_ord; ++s) {
    std::vector<int> members{0};
    for (int c = 1; c < p; ++c)
      if (ord_of[c] >= s + 1) members.push_back(c);
    orbit.filtration.push_back(Subgroup::from_members(g, members));
  }
  orbit.filtration.push_back(Subgroup::trivial(g));
  for (int c = 0; c < p; ++c) orbit.cotangent_exponent[c] = 0;
  cover.derived_.orbits.push_back(std::move(orbit));
  cover.derived_.validate();
  cover.genus_ = genus_upstairs(cover.derived_);
  return cover;
}

ExplicitCover ExplicitCover::kummer(long m, long p) {
  if (!is_prime(p)) throw Error(Error::Kind::domain, "p must be prime");
  if (m < 2 || std::gcd(m, p) != 1)
    throw Error(Error::Kind::domain, "requires m >= 2 coprime to p");
  ExplicitCover cover;
  cover.kind_ = ExplicitKind::kummer;
  cover.p_ = p;
  cover.param_ = m;
  long s = 1, q = p;
  while ((q - 1) % m != 0) {
    ++s;
    q *= p;
    if (s > 16) throw Error(Error::Kind::domain, "field for the root of unity is too large");
  }
  cover.field_ = FiniteField::get(p, s);
  const FiniteField& f = *cover.field_;
  Elt zeta = f.root_of_unity(m);

  GroupPtr g = CayleyGroup::cyclic(m);
  cover.derived_.group = g;
  cover.derived_.p = p;
  cover.derived_.base_genus = 0;

  long unit_index = (f.size() - 1) / m;
  auto exponent_of = [&](Elt value) {
    long l = f.dlog(value);
    if (l % unit_index != 0)
      throw Error(Error::Kind::inconsistent, "cotangent value is not an m-th root of unity");
    return (l / unit_index) % m;
  };

  // sigma_j : y -> zeta^j y; the uniformizer at 0 is y, at infinity 1/y.
  for (const char* name : {"zero", "infty"}) {
    RamificationOrbit orbit;
    orbit.name = name;
    orbit.decomposition = Subgroup::whole(g);
    orbit.filtration.push_back(Subgroup::whole(g));
    orbit.filtration.push_back(Subgroup::trivial(g));
    for (int j = 0; j < m; ++j) {
      Elt value = f.pow(zeta, std::string(name) == "zero" ? j : -j);
      orbit.cotangent_exponent[j] = exponent_of(value);
    }
    cover.derived_.orbits.push_back(std::move(orbit));
  }
  cover.derived_.validate();
  cover.genus_ = genus_upstairs(cover.derived_);
  if (cover.genus_ != 0)
    throw Error(Error::Kind::inconsistent, "Kummer model must have genus 0");
  return cover;
}

ExplicitCover ExplicitCover::affine(long p) {
  if (!is_prime(p) || p < 3)
    throw Error(Error::Kind::domain, "the affine family needs an odd prime");
  ExplicitCover cover;
  cover.kind_ = ExplicitKind::affine;
  cover.p_ = p;
  cover.param_ = 0;
  cover.field_ = FiniteField::get(p, 1);
  const FiniteField& f = *cover.field_;

  GroupPtr g = CayleyGroup::semidirect_pc_free(p, 1, p - 1);
  cover.derived_.group = g;
  cover.derived_.p = p;
  cover.derived_.base_genus = 0;

  // Element id c*p + u acts on the function field by x -> a^{-1}(x - u)
  // with a = omega^c; this makes id -> automorphism a homomorphism.
  Elt omega = f.root_of_unity(p - 1);
  auto a_of = [&](int id) { return f.pow(omega, id / p); };
  auto b_of = [&](int id) { return static_cast<Elt>(id % p); };

  {
    RamificationOrbit orbit;  // the point at infinity, fixed by everything
    orbit.name = "infty";
    orbit.decomposition = Subgroup::whole(g);
    std::vector<long> ord_of(g->order(), 0);
    for (int id = 1; id < g->order(); ++id) ord_of[id] = cover.measure_jump_raw(id);
    long max_ord = *std::max_element(ord_of.begin(), ord_of.end());
    for (long s = 0; s < max_ord; ++s) {
      std::vector<int> members{0};
      for (int id = 1; id < g->order(); ++id)
        if (ord_of[id] >= s + 1) members.push_back(id);
      orbit.filtration.push_back(Subgroup::from_members(g, members));
    }
    orbit.filtration.push_back(Subgroup::trivial(g));
    // chi(sigma) is the leading coefficient of sigma(1/x) in 1/x.
    for (int id = 0; id < g->order(); ++id)
      orbit.cotangent_exponent[id] = f.dlog(a_of(id));
    cover.derived_.orbits.push_back(std::move(orbit));
  }
  {
    RamificationOrbit orbit;  // the orbit of x = 0; stabilizer a^{-1} x
    orbit.name = "tame";
    std::vector<int> members;
    for (int id = 0; id < g->order(); ++id)
      if (b_of(id) == 0) members.push_back(id);
    orbit.decomposition = Subgroup::from_members(g, members);
    orbit.filtration.push_back(orbit.decomposition);
    orbit.filtration.push_back(Subgroup::trivial(g));
    for (int id : orbit.decomposition.members())
      orbit.cotangent_exponent[id] = f.dlog(f.inv(a_of(id)));
    cover.derived_.orbits.push_back(std::move(orbit));
  }
  cover.derived_.validate();
  cover.genus_ = genus_upstairs(cover.derived_);
  if (cover.genus_ != 0)
    throw Error(Error::Kind::inconsistent, "affine model must have genus 0");
  return cover;
}

ExplicitCover build_explicit(ExplicitKind kind, long p, long param) {
  switch (kind) {
    case ExplicitKind::artin_schreier: return ExplicitCover::artin_schreier(p, param);
    case ExplicitKind::kummer: return ExplicitCover::kummer(param, p);
    case ExplicitKind::affine: return ExplicitCover::affine(p);
  }
  throw Error(Error::Kind::domain, "unknown explicit cover kind");
}

// ---------------------------------------------------------------------------
// Jump measurement

long ExplicitCover::measure_jump_raw(int sigma) const {
  const FiniteField& f = *field_;
  switch (kind_) {
    case ExplicitKind::artin_schreier: {
      long p = p_, r = param_;
      long c = sigma;
      // Uniformizer t = y^u x^{-v} with -u r + v p = 1.
      long rinv = 0;
      for (long x = 1; x < p; ++x)
        if ((x * (r % p)) % p == 1) rinv = x;
      long u = mod_nonneg(-rinv, p);
      long v = (1 + u * r) / p;
      // sigma(t) - t = ((y + c)^u - y^u) x^{-v}
      auto binom = binomial_table(u, p);
      ASElement diff;
      for (long k = 0; k < u; ++k) {
        Elt coeff = f.mul(f.from_int(binom[u][k]),
                          f.pow(f.from_int(c), u - k));
        diff.add_term(-v, k, coeff, f);
      }
      return as_order_at_infinity(diff, p, r);
    }
    case ExplicitKind::affine: {
      // sigma(1/x) - 1/x = (x - sigma(x)) / (x sigma(x)); with
      // sigma(x) = a^{-1}(x - b) the numerator is (1 - a^{-1}) x + a^{-1} b.
      Elt omega = f.root_of_unity(p_ - 1);
      Elt a_inv = f.inv(f.pow(omega, sigma / p_));
      Elt b = static_cast<Elt>(sigma % p_);
      Elt lin = f.sub(1, a_inv);
      Elt constant = f.mul(a_inv, b);
      long num_degree;
      if (lin != 0)
        num_degree = 1;
      else if (constant != 0)
        num_degree = 0;
      else
        throw Error(Error::Kind::domain, "identity has no ramification jump");
      return 2 - num_degree;
    }
    case ExplicitKind::kummer:
      throw Error(Error::Kind::domain, "tame cover has trivial wild inertia");
  }
  throw Error(Error::Kind::domain, "unknown cover kind");
}

long ExplicitCover::measure_jump(int sigma) const {
  if (sigma <= 0 || sigma >= derived_.group->order())
    throw Error(Error::Kind::domain, "sigma must be a nontrivial group element");
  const RamificationOrbit& wild_orbit = derived_.orbit("infty");
  if (wild_orbit.filtration.size() < 2 || !wild_orbit.filtration[1].contains(sigma))
    throw Error(Error::Kind::domain, "sigma is outside the wild inertia at the wild point");
  return measure_jump_raw(sigma) - 1;
}

// ---------------------------------------------------------------------------
// Section spaces

SectionSpace ExplicitCover::h0_space(const OracleDivisor& divisor) const {
  const FiniteField& f = *field_;
  for (const auto& [name, coeff] : divisor.ramified) {
    (void)coeff;
    if (!derived_.has_orbit(name))
      throw Error(Error::Kind::domain, "divisor names unknown orbit '" + name + "'");
  }
  std::set<Elt> bases;
  for (const auto& [coeff, base] : divisor.unramified) {
    if (coeff < 0)
      throw Error(Error::Kind::unsupported,
                  "negative coefficients on unramified orbits are not supported");
    if (!bases.insert(base).second)
      throw Error(Error::Kind::domain, "duplicate unramified base value");
    if (kind_ == ExplicitKind::affine)
      throw Error(Error::Kind::unsupported,
                  "unramified divisor support is not implemented for the affine family");
    if (kind_ == ExplicitKind::kummer && base == 0)
      throw Error(Error::Kind::domain, "base value 0 is the ramified point");
    if (base >= static_cast<Elt>(f.size()))
      throw Error(Error::Kind::domain, "base value outside the model field");
  }

  long extra = 0;
  for (const auto& [coeff, base] : divisor.unramified) {
    (void)base;
    extra += coeff;
  }

  SectionSpace space;
  space.group = derived_.group;
  space.field = field_;
  space.p = p_;
  space.degree = divisor_degree(derived_, divisor.to_abstract());

  std::vector<std::pair<long, long>> monomials;
  switch (kind_) {
    case ExplicitKind::artin_schreier: {
      long n = divisor.ramified.count("infty") ? divisor.ramified.at("infty") : 0;
      long bound = n + p_ * extra;
      for (long i = 0; p_ * i <= bound; ++i)
        for (long j = 0; j < p_; ++j)
          if (p_ * i + param_ * j <= bound) monomials.push_back({i, j});
      std::sort(monomials.begin(), monomials.end(),
                [&](const auto& lhs, const auto& rhs) {
                  long pl = p_ * lhs.first + param_ * lhs.second;
                  long pr = p_ * rhs.first + param_ * rhs.second;
                  return pl != pr ? pl < pr : lhs.second < rhs.second;
                });
      for (const auto& [i, j] : monomials) {
        std::string label = "x^" + std::to_string(i) + "*y^" + std::to_string(j);
        space.basis.push_back(label);
      }
      break;
    }
    case ExplicitKind::kummer: {
      long n0 = divisor.ramified.count("zero") ? divisor.ramified.at("zero") : 0;
      long ninf = divisor.ramified.count("infty") ? divisor.ramified.at("infty") : 0;
      for (long j = -n0; j <= ninf + param_ * extra; ++j) monomials.push_back({j, 0});
      for (const auto& [j, unused] : monomials) {
        (void)unused;
        space.basis.push_back("y^" + std::to_string(j));
      }
      break;
    }
    case ExplicitKind::affine: {
      long ninf = divisor.ramified.count("infty") ? divisor.ramified.at("infty") : 0;
      long nt = divisor.ramified.count("tame") ? divisor.ramified.at("tame") : 0;
      for (long j = 0; j <= ninf + p_ * nt; ++j) monomials.push_back({j, 0});
      for (const auto& [j, unused] : monomials) {
        (void)unused;
        space.basis.push_back("x^" + std::to_string(j) + "*(x^p-x)^" + std::to_string(-nt));
      }
      break;
    }
  }

  for (int sigma = 0; sigma < derived_.group->order(); ++sigma)
    space.action.emplace(sigma, action_matrix(sigma, divisor, monomials));

  // The matrices must define a representation.
  for (int a = 0; a < derived_.group->order(); ++a)
    for (int b = 0; b < derived_.group->order(); ++b)
      if (!(space.action.at(derived_.group->mul(a, b)) ==
            space.action.at(a) * space.action.at(b)))
        throw Error(Error::Kind::inconsistent, "action matrices are not a representation");
  return space;
}

FFMatrix ExplicitCover::action_matrix(int sigma, const OracleDivisor& divisor,
                                      const std::vector<std::pair<long, long>>& monomials) const {
  const FiniteField& f = *field_;
  const std::size_t dim = monomials.size();
  FFMatrix m(field_, dim, dim);
  std::map<std::pair<long, long>, std::size_t> index;
  for (std::size_t i = 0; i < dim; ++i) index[monomials[i]] = i;

  switch (kind_) {
    case ExplicitKind::artin_schreier: {
      // x^i y^j -> x^i (y + c)^j; the common denominator is sigma-invariant.
      Elt c = f.from_int(sigma);
      auto binom = binomial_table(p_ - 1, p_);
      for (std::size_t col = 0; col < dim; ++col) {
        auto [i, j] = monomials[col];
        for (long k = 0; k <= j; ++k) {
          Elt coeff = f.mul(f.from_int(binom[j][k]), f.pow(c, j - k));
          if (coeff == 0) continue;
          auto it = index.find({i, k});
          if (it == index.end())
            throw Error(Error::Kind::inconsistent, "monomial basis is not action-stable");
          m.at(it->second, col) = f.add(m.at(it->second, col), coeff);
        }
      }
      break;
    }
    case ExplicitKind::kummer: {
      Elt zeta = f.root_of_unity(param_);
      for (std::size_t col = 0; col < dim; ++col) {
        long j = monomials[col].first;
        m.at(col, col) = f.pow(zeta, static_cast<long>(sigma) * j);
      }
      break;
    }
    case ExplicitKind::affine: {
      long nt = divisor.ramified.count("tame") ? divisor.ramified.at("tame") : 0;
      Elt omega = f.root_of_unity(p_ - 1);
      Elt a = f.pow(omega, sigma / p_);
      Elt b = static_cast<Elt>(sigma % p_);
      long bound = static_cast<long>(dim) - 1;
      auto binom = binomial_table(std::max<long>(bound, 0), p_);
      for (std::size_t col = 0; col < dim; ++col) {
        long j = monomials[col].first;
        // x^j (x^p - x)^{-nt} -> a^{nt - j} (x - b)^j (x^p - x)^{-nt}
        Elt scale = f.pow(a, nt - j);
        for (long k = 0; k <= j; ++k) {
          Elt coeff = f.mul(f.from_int(binom[j][k]), f.pow(f.neg(b), j - k));
          coeff = f.mul(coeff, scale);
          if (coeff == 0) continue;
          m.at(index.at({k, 0}), col) = f.add(m.at(index.at({k, 0}), col), coeff);
        }
      }
      break;
    }
  }
  return m;
}

OracleDivisor ExplicitCover::canonical_oracle_divisor() const {
  EquivariantDivisor abstract =
      canonical_divisor(derived_, {{"infty", -2}}, {});
  OracleDivisor out;
  out.ramified = abstract.ramified;
  return out;
}

SectionSpace ExplicitCover::omega_space(const std::vector<std::string>& orbit_names) const {
  OracleDivisor d = canonical_oracle_divisor();
  std::set<std::string> seen;
  for (const auto& name : orbit_names) {
    if (!derived_.has_orbit(name))
      throw Error(Error::Kind::domain, "unknown orbit '" + name + "'");
    if (!seen.insert(name).second)
      throw Error(Error::Kind::domain, "duplicate orbit '" + name + "'");
    d.ramified[name] += 1;
  }
  return h0_space(d);
}

BrauerClassFunction ExplicitCover::oracle_euler(const OracleDivisor& divisor) const {
  SectionSpace space = h0_space(divisor);
  if (space.degree <= 2 * genus_ - 2)
    throw Error(Error::Kind::unsupported,
                "need deg D > 2g - 2 so that H^1 vanishes (H^1 is not modeled)");
  long expected = space.degree + 1 - genus_;
  if (space.dimension() != expected)
    throw Error(Error::Kind::inconsistent, "section count disagrees with Riemann-Roch");
  return decompose(space).character;
}

ModuleDecomposition ExplicitCover::decompose(const SectionSpace& space) const {
  const FiniteField& f = *field_;
  const GroupPtr g = derived_.group;
  ModuleDecomposition out;

  BrauerClassFunction character(g, p_);
  std::vector<Cyclotomic> values;
  for (int rep : character.class_reps()) {
    const FFMatrix& m = space.action.at(rep);
    long t = g->element_order(rep);
    if ((f.size() - 1) % t != 0)
      throw Error(Error::Kind::inconsistent, "model field lacks the needed roots of unity");
    Cyclotomic value;
    long total = 0;
    for (long i = 0; i < t; ++i) {
      Elt lambda = f.pow(f.root_of_unity(t), i);
      std::size_t mult = eigenspace_dimension(m, lambda);
      total += static_cast<long>(mult);
      if (mult > 0) value += Cyclotomic(static_cast<long>(mult)) * f.lift(lambda);
    }
    if (total != space.dimension())
      throw Error(Error::Kind::inconsistent, "p-regular action is not semisimple");
    values.push_back(std::move(value));
  }
  out.character = BrauerClassFunction::from_values(g, p_, std::move(values));

  bool wild_group = g->order() % p_ == 0;
  if (wild_group && space.dimension() > 0) {
    // Element id 1 generates the wild part in all three families.
    out.jordan = jordan_type_of_unipotent(space.action.at(1));
    out.projective = true;
    for (const auto& [size, count] : out.jordan) {
      (void)count;
      if (size != static_cast<std::size_t>(p_)) out.projective = false;
    }
  } else {
    out.projective = true;  // every module over a p'-group ring is projective
  }

  if (out.projective) {
    auto basis = projective_basis(g, p_);
    out.projective_class = cartan_preimage(out.character, basis);
    Rational rank = Rational(space.dimension(), g->order());
    if (is_integer(rank)) {
      ProjectiveClass regular =
          cartan_preimage(BrauerClassFunction::regular(g, p_), basis);
      out.free_module = *out.projective_class == regular.scaled(rank);
      if (out.free_module) out.free_rank = static_cast<long>(to_integer(rank));
    }
  }
  return out;
}

}  // namespace equichar
