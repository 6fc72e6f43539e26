#pragma once

#include <map>
#include <string>
#include <vector>

#include "equichar/brauer.hpp"
#include "equichar/group.hpp"

namespace equichar {

struct RamificationInvariants {
  long e = 1;        // |G_{P,0}|
  long e_tame = 1;   // e / e_wild
  long e_wild = 1;   // |G_{P,1}|
  long different_order = 0;  // sum over s >= 0 of (|G_{P,s}| - 1)
};

/// One ramified orbit of a G-cover: the decomposition group at a chosen
/// point of the orbit, its ramification filtration, and the character by
/// which the decomposition group acts on the cotangent line at that point
/// (stored as exponents with respect to the fixed root-of-unity lift:
/// chi(sigma) = zeta_{e_tame}^{exponent(sigma)}).
struct RamificationOrbit {
  std::string name;
  Subgroup decomposition;            // equals filtration[0]
  std::vector<Subgroup> filtration;  // index s = 0, 1, ...; ends at the trivial subgroup
  std::map<int, long> cotangent_exponent;  // global element id -> exponent mod e_tame

  RamificationInvariants invariants() const;
  long orbit_size() const { return decomposition.parent()->order() / decomposition.size(); }
  long subgroup_order_at(std::size_t s) const {
    return s < filtration.size() ? filtration[s].size() : 1;
  }
  /// The wild part (e_wild - 1)(e_tame + 1) + sum_{s>=2}(|G_{P,s}| - 1)
  /// entering the Euler characteristic formula.
  long wild_term() const;

  Cyclotomic chi_value(int gid, long power = 1) const;
  /// chi^d as a one-dimensional Brauer class function on decomposition.group().
  BrauerClassFunction chi_power_char(long d, long p) const;

  void validate(long p) const;
};

/// Abstract ramification data of a cover pi : X -> Y = X/G. Points are never
/// enumerated; everything is stored per orbit.
struct CoverDescription {
  GroupPtr group;
  long p = 0;          // characteristic
  long base_genus = 0; // genus of Y
  std::vector<RamificationOrbit> orbits;

  const RamificationOrbit& orbit(const std::string& name) const;
  bool has_orbit(const std::string& name) const;
  void validate() const;
};

enum class Ramification { unramified, tame, weakly_ramified, wild };
std::string to_string(Ramification r);

/// Finest applicable label over all orbits.
Ramification classify_ramification(const CoverDescription& cover);

/// Genus of X from the Hurwitz formula
///   2g_X - 2 = |G| (2g_Y - 2) + sum_P ord(different at P),
/// the sum running over all points (orbit size times the per-point
/// different order). Throws on non-integral or negative solutions.
long genus_upstairs(const CoverDescription& cover);

/// An equivariant divisor: one coefficient per ramified orbit, plus free
/// orbits collected as (multiplicity, number of base points) pairs.
struct EquivariantDivisor {
  std::map<std::string, long> ramified;
  std::vector<std::pair<long, long>> unramified;  // (multiplicity, base point count)

  long coefficient(const std::string& orbit_name) const {
    auto it = ramified.find(orbit_name);
    return it == ramified.end() ? 0 : it->second;
  }
};

long divisor_degree(const CoverDescription& cover, const EquivariantDivisor& d);

/// Rank, degree and fibre data of an equivariant locally free sheaf. The
/// fibre at a ramified orbit is the class of the decomposition-group
/// representation on E(P) = E_P / m_P E_P.
struct EquivariantSheafData {
  long rank = 1;
  long degree = 0;
  std::map<std::string, BrauerClassFunction> fibres;

  void validate(const CoverDescription& cover) const;
};

/// O_X with its canonical equivariant structure.
EquivariantSheafData structure_sheaf(const CoverDescription& cover);
/// O_X(D): rank one, fibre chi^{-n_P} at a ramified orbit with coefficient n_P.
EquivariantSheafData divisor_to_sheaf(const CoverDescription& cover, const EquivariantDivisor& d);

/// A canonical divisor with equivariant coefficients, built from a chosen
/// canonical divisor K_Y = sum r_Q [Q] downstairs:
///   n'_P = e_P r_{pi(P)} + ord(different at P).
/// base_coefficients maps orbit name -> r at the base point under it;
/// unramified_base lists (r, count) for base points away from the branch
/// locus. The result's degree is checked against 2g_X - 2.
EquivariantDivisor canonical_divisor(const CoverDescription& cover,
                                     const std::map<std::string, long>& base_coefficients,
                                     const std::vector<std::pair<long, long>>& unramified_base);

/// The cover X -> X/H for a subgroup H, with orbits refined along
/// H\G/G_P double cosets, filtrations intersected and cotangent characters
/// conjugated. Keeps enough bookkeeping to transport divisors and sheaves.
struct SubcoverResult {
  CoverDescription cover;  // group is h.group()
  Subgroup h;

  struct Entry {
    std::string parent_orbit;
    int conjugator = 0;          // sigma: the derived point is sigma(P~)
    std::string derived_name;    // empty when the derived orbit is free
    bool ramified = false;
  };
  std::vector<Entry> entries;

  EquivariantDivisor transport_divisor(const EquivariantDivisor& d) const;
  EquivariantSheafData transport_sheaf(const CoverDescription& original,
                                       const EquivariantSheafData& sheaf) const;
};

SubcoverResult derive_subcover(const CoverDescription& cover, const Subgroup& h);

}  // namespace equichar
