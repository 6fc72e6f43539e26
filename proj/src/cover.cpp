#include "equichar/cover.hpp"

#include <algorithm>
#include <set>

namespace equichar {

RamificationInvariants RamificationOrbit::invariants() const {
  RamificationInvariants inv;
  inv.e = decomposition.size();
  inv.e_wild = subgroup_order_at(1);
  inv.e_tame = inv.e / inv.e_wild;
  inv.different_order = 0;
  for (std::size_t s = 0; s < filtration.size(); ++s)
    inv.different_order += filtration[s].size() - 1;
  return inv;
}

long RamificationOrbit::wild_term() const {
  RamificationInvariants inv = invariants();
  long tail = 0;
  for (std::size_t s = 2; s < filtration.size(); ++s) tail += filtration[s].size() - 1;
  return (inv.e_wild - 1) * (inv.e_tame + 1) + tail;
}

Cyclotomic RamificationOrbit::chi_value(int gid, long power) const {
  auto it = cotangent_exponent.find(gid);
  if (it == cotangent_exponent.end())
    throw Error(Error::Kind::domain, "element outside the decomposition group");
  long e_tame = invariants().e_tame;
  return Cyclotomic::root_of_unity(e_tame, it->second * power);
}

BrauerClassFunction RamificationOrbit::chi_power_char(long d, long p) const {
  BrauerClassFunction out(decomposition.group(), p);
  std::vector<Cyclotomic> values;
  for (int rep : out.class_reps()) values.push_back(chi_value(decomposition.to_global(rep), d));
  return BrauerClassFunction::from_values(decomposition.group(), p, std::move(values));
}

void RamificationOrbit::validate(long p) const {
  if (filtration.empty())
    throw Error(Error::Kind::construction, "orbit '" + name + "': empty filtration");
  if (!(filtration[0] == decomposition))
    throw Error(Error::Kind::construction,
                "orbit '" + name + "': filtration must start at the decomposition group");
  for (std::size_t s = 0; s + 1 < filtration.size(); ++s) {
    for (int m : filtration[s + 1].members())
      if (!filtration[s].contains(m))
        throw Error(Error::Kind::construction,
                    "orbit '" + name + "': filtration is not descending");
  }
  if (filtration.back().size() != 1)
    throw Error(Error::Kind::construction,
                "orbit '" + name + "': filtration must end at the trivial subgroup");
  for (std::size_t s = 1; s < filtration.size(); ++s)
    if (!filtration[s].is_normal_in(decomposition))
      throw Error(Error::Kind::construction,
                  "orbit '" + name + "': ramification subgroups must be normal in the "
                  "decomposition group");
  const Subgroup& wild = filtration.size() > 1 ? filtration[1] : filtration[0];
  if (filtration.size() > 1) {
    for (int m : wild.members()) {
      long o = decomposition.parent()->element_order(m);
      while (o > 1 && o % p == 0) o /= p;
      if (o != 1)
        throw Error(Error::Kind::construction,
                    "orbit '" + name + "': wild inertia is not a p-group");
    }
  }
  RamificationInvariants inv = invariants();
  if (inv.e_tame % p == 0 && inv.e_tame > 1)
    throw Error(Error::Kind::construction,
                "orbit '" + name + "': tame index must be coprime to p");
  // cotangent character: defined on all of G_P, a homomorphism into
  // Z/e_tame, trivial exactly on the wild part.
  for (int m : decomposition.members())
    if (!cotangent_exponent.count(m))
      throw Error(Error::Kind::construction,
                  "orbit '" + name + "': cotangent character misses an element");
  auto expo = [&](int g) { return mod_nonneg(cotangent_exponent.at(g), inv.e_tame); };
  const CayleyGroup& g = *decomposition.parent();
  for (int x : decomposition.members())
    for (int y : decomposition.members())
      if (expo(g.mul(x, y)) != mod_nonneg(expo(x) + expo(y), inv.e_tame))
        throw Error(Error::Kind::construction,
                    "orbit '" + name + "': cotangent exponents are not a homomorphism");
  // Kernel must be exactly the wild inertia, and the induced character of
  // the tame quotient must be injective (equivalently, surjective onto
  // Z/e_tame).
  std::set<long> values_taken;
  for (int x : decomposition.members()) {
    bool in_wild = filtration.size() > 1 ? filtration[1].contains(x) : x == 0;
    if (in_wild && expo(x) != 0)
      throw Error(Error::Kind::construction,
                  "orbit '" + name + "': cotangent character must be trivial on wild inertia");
    if (!in_wild && expo(x) == 0)
      throw Error(Error::Kind::construction,
                  "orbit '" + name +
                      "': cotangent character kernel must be exactly the wild inertia");
    values_taken.insert(expo(x));
  }
  if (static_cast<long>(values_taken.size()) != inv.e_tame)
    throw Error(Error::Kind::construction,
                "orbit '" + name +
                    "': cotangent character must be injective on the tame quotient");
}

const RamificationOrbit& CoverDescription::orbit(const std::string& name) const {
  for (const auto& o : orbits)
    if (o.name == name) return o;
  throw Error(Error::Kind::domain, "no orbit named '" + name + "'");
}

bool CoverDescription::has_orbit(const std::string& name) const {
  for (const auto& o : orbits)
    if (o.name == name) return true;
  return false;
}

void CoverDescription::validate() const {
  if (!group) throw Error(Error::Kind::construction, "cover has no group");
  if (!is_prime(p)) throw Error(Error::Kind::construction, "characteristic must be prime");
  if (base_genus < 0) throw Error(Error::Kind::construction, "negative base genus");
  std::set<std::string> names;
  for (const auto& o : orbits) {
    if (!names.insert(o.name).second)
      throw Error(Error::Kind::construction, "duplicate orbit name '" + o.name + "'");
    if (o.decomposition.parent() != group)
      throw Error(Error::Kind::construction, "orbit subgroup belongs to a different group");
    o.validate(p);
  }
  genus_upstairs(*this);  // throws when the Hurwitz data is inconsistent
}

std::string to_string(Ramification r) {
  switch (r) {
    case Ramification::unramified: return "unramified";
    case Ramification::tame: return "tame";
    case Ramification::weakly_ramified: return "weakly ramified";
    case Ramification::wild: return "wild";
  }
  return "?";
}

Ramification classify_ramification(const CoverDescription& cover) {
  Ramification level = Ramification::unramified;
  for (const auto& o : cover.orbits) {
    RamificationInvariants inv = o.invariants();
    Ramification here = Ramification::unramified;
    if (o.subgroup_order_at(2) > 1)
      here = Ramification::wild;
    else if (inv.e_wild > 1)
      here = Ramification::weakly_ramified;
    else if (inv.e > 1)
      here = Ramification::tame;
    if (static_cast<int>(here) > static_cast<int>(level)) level = here;
  }
  return level;
}

long genus_upstairs(const CoverDescription& cover) {
  long long rhs = static_cast<long long>(cover.group->order()) * (2 * cover.base_genus - 2);
  for (const auto& o : cover.orbits)
    rhs += static_cast<long long>(o.orbit_size()) * o.invariants().different_order;
  if (rhs % 2 != 0)
    throw Error(Error::Kind::inconsistent,
                "Hurwitz formula gives an odd value for 2g - 2; cover data is inconsistent");
  long long g = rhs / 2 + 1;
  if (g < 0)
    throw Error(Error::Kind::inconsistent,
                "Hurwitz formula gives negative genus; cover data is inconsistent");
  return static_cast<long>(g);
}

long divisor_degree(const CoverDescription& cover, const EquivariantDivisor& d) {
  long deg = 0;
  for (const auto& [name, coeff] : d.ramified) deg += cover.orbit(name).orbit_size() * coeff;
  for (const auto& [mult, count] : d.unramified) deg += cover.group->order() * mult * count;
  return deg;
}

void EquivariantSheafData::validate(const CoverDescription& cover) const {
  if (rank < 1) throw Error(Error::Kind::construction, "sheaf rank must be positive");
  for (const auto& o : cover.orbits) {
    auto it = fibres.find(o.name);
    if (it == fibres.end())
      throw Error(Error::Kind::domain, "missing fibre data at orbit '" + o.name + "'");
    if (it->second.group() != o.decomposition.group())
      throw Error(Error::Kind::construction,
                  "fibre at '" + o.name + "' lives on the wrong group");
    if (!(it->second.dimension() == Cyclotomic(rank)))
      throw Error(Error::Kind::construction,
                  "fibre dimension at '" + o.name + "' does not match the rank");
  }
}

EquivariantSheafData structure_sheaf(const CoverDescription& cover) {
  EquivariantSheafData sheaf;
  sheaf.rank = 1;
  sheaf.degree = 0;
  for (const auto& o : cover.orbits)
    sheaf.fibres.emplace(o.name, BrauerClassFunction::trivial_char(o.decomposition.group(), cover.p));
  return sheaf;
}

EquivariantSheafData divisor_to_sheaf(const CoverDescription& cover, const EquivariantDivisor& d) {
  EquivariantSheafData sheaf;
  sheaf.rank = 1;
  sheaf.degree = divisor_degree(cover, d);
  for (const auto& o : cover.orbits)
    sheaf.fibres.emplace(o.name, o.chi_power_char(-d.coefficient(o.name), cover.p));
  return sheaf;
}

EquivariantDivisor canonical_divisor(const CoverDescription& cover,
                                     const std::map<std::string, long>& base_coefficients,
                                     const std::vector<std::pair<long, long>>& unramified_base) {
  EquivariantDivisor out;
  for (const auto& o : cover.orbits) {
    auto it = base_coefficients.find(o.name);
    long r = it == base_coefficients.end() ? 0 : it->second;
    RamificationInvariants inv = o.invariants();
    out.ramified[o.name] = inv.e * r + inv.different_order;
  }
  for (const auto& entry : unramified_base)
    if (entry.first != 0) out.unramified.push_back(entry);
  long expected = 2 * genus_upstairs(cover) - 2;
  if (divisor_degree(cover, out) != expected)
    throw Error(Error::Kind::inconsistent,
                "canonical divisor degree mismatch: downstairs coefficients do not describe "
                "a canonical divisor of the base");
  return out;
}

SubcoverResult derive_subcover(const CoverDescription& cover, const Subgroup& h) {
  if (h.parent() != cover.group)
    throw Error(Error::Kind::domain, "subgroup belongs to a different group");
  SubcoverResult result;
  result.h = h;
  result.cover.group = h.group();
  result.cover.p = cover.p;

  const GroupPtr g = cover.group;
  long g_x = genus_upstairs(cover);

  for (const auto& o : cover.orbits) {
    std::vector<int> reps = double_coset_representatives(*g, h, o.decomposition);
    int index = 0;
    for (int sigma : reps) {
      // Stabilizer in H of the point sigma(P~): H meet sigma G_P sigma^{-1}.
      Subgroup conj = o.decomposition.conjugate_by(sigma);
      Subgroup stab_in_g = h.intersect(conj);
      SubcoverResult::Entry entry;
      entry.parent_orbit = o.name;
      entry.conjugator = sigma;
      entry.ramified = stab_in_g.size() > 1;
      if (!entry.ramified) {
        result.entries.push_back(entry);
        ++index;
        continue;
      }
      RamificationOrbit derived;
      derived.name = o.name + "." + std::to_string(index);
      entry.derived_name = derived.name;

      auto localize = [&](const Subgroup& global_subgroup_of_g) {
        std::vector<int> local_members;
        for (int m : global_subgroup_of_g.members()) local_members.push_back(h.to_local(m));
        return Subgroup::from_members(h.group(), std::move(local_members));
      };
      derived.decomposition = localize(stab_in_g);
      for (const auto& level : o.filtration) {
        Subgroup level_conj = level.conjugate_by(sigma);
        derived.filtration.push_back(localize(h.intersect(level_conj)));
      }
      while (derived.filtration.size() > 1 &&
             derived.filtration[derived.filtration.size() - 2].size() == 1)
        derived.filtration.pop_back();

      long e_tame_old = o.invariants().e_tame;
      long e_tame_new = derived.invariants().e_tame;
      int sigma_inv = g->inverse(sigma);
      for (int hm : stab_in_g.members()) {
        int pulled = g->mul(g->mul(sigma_inv, hm), sigma);
        long exp_old = mod_nonneg(o.cotangent_exponent.at(pulled), e_tame_old);
        long ratio = e_tame_old / e_tame_new;
        if (exp_old % ratio != 0)
          throw Error(Error::Kind::inconsistent,
                      "conjugated cotangent character does not restrict to the subcover");
        derived.cotangent_exponent[h.to_local(hm)] = exp_old / ratio;
      }
      result.cover.orbits.push_back(std::move(derived));
      result.entries.push_back(entry);
      ++index;
    }
  }

  // Base genus of X/H: solve 2g_X - 2 = |H| (2g' - 2) + sum of differents.
  long long different = 0;
  for (const auto& o : result.cover.orbits)
    different += static_cast<long long>(h.size() / o.decomposition.size()) *
                 o.invariants().different_order;
  long long numerator = 2 * static_cast<long long>(g_x) - 2 - different;
  if (numerator % h.size() != 0 || (numerator / h.size()) % 2 != 0)
    throw Error(Error::Kind::inconsistent, "subcover Hurwitz data is not integral");
  long long gy = numerator / h.size() / 2 + 1;
  if (gy < 0) throw Error(Error::Kind::inconsistent, "subcover base genus is negative");
  result.cover.base_genus = static_cast<long>(gy);
  result.cover.validate();
  return result;
}

EquivariantDivisor SubcoverResult::transport_divisor(const EquivariantDivisor& d) const {
  EquivariantDivisor out;
  for (const auto& entry : entries) {
    long coeff = d.coefficient(entry.parent_orbit);
    if (entry.ramified) {
      out.ramified[entry.derived_name] = coeff;
    } else if (coeff != 0) {
      out.unramified.push_back({coeff, 1});
    }
  }
  const long n = h.parent()->order();
  for (const auto& [mult, count] : d.unramified)
    if (mult != 0) out.unramified.push_back({mult, count * (n / h.size())});
  return out;
}

EquivariantSheafData SubcoverResult::transport_sheaf(const CoverDescription& original,
                                                     const EquivariantSheafData& sheaf) const {
  EquivariantSheafData out;
  out.rank = sheaf.rank;
  out.degree = sheaf.degree;
  const GroupPtr g = h.parent();
  for (const auto& entry : entries) {
    if (!entry.ramified) continue;
    const RamificationOrbit& parent = original.orbit(entry.parent_orbit);
    const RamificationOrbit& derived = cover.orbit(entry.derived_name);
    const BrauerClassFunction& fibre = sheaf.fibres.at(entry.parent_orbit);
    int sigma_inv = g->inverse(entry.conjugator);
    BrauerClassFunction probe(derived.decomposition.group(), cover.p);
    std::vector<Cyclotomic> values;
    for (int rep : probe.class_reps()) {
      int hm = h.to_global(derived.decomposition.to_global(rep));
      int pulled = g->mul(g->mul(sigma_inv, hm), entry.conjugator);
      values.push_back(fibre.value_at_element(parent.decomposition.to_local(pulled)));
    }
    out.fibres.emplace(entry.derived_name,
                       BrauerClassFunction::from_values(derived.decomposition.group(), cover.p,
                                                        std::move(values)));
  }
  return out;
}

}  // namespace equichar
