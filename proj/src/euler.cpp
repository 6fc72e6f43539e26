#include "equichar/euler.hpp"

namespace equichar {

BrauerClassFunction euler_characteristic(const CoverDescription& cover,
                                         const EquivariantSheafData& sheaf) {
  sheaf.validate(cover);
  const GroupPtr g = cover.group;
  const long n = g->order();
  const long r = sheaf.rank;

  Rational coefficient = Rational(1 - cover.base_genus) * r;
  coefficient += Rational(sheaf.degree, n);
  Rational wild_sum(0);
  for (const auto& o : cover.orbits)
    wild_sum += Rational(o.orbit_size()) * Rational(o.wild_term());
  coefficient -= Rational(r, 2 * n) * wild_sum;

  BrauerClassFunction result = BrauerClassFunction::regular(g, cover.p).scaled(coefficient);

  for (const auto& o : cover.orbits) {
    RamificationInvariants inv = o.invariants();
    if (inv.e_tame <= 1) continue;
    const BrauerClassFunction& fibre = sheaf.fibres.at(o.name);
    // Per-point term summed over the orbit and scaled by 1/n:
    // (orbit size) * e^w / n = 1 / e^t.
    for (long d = 1; d < inv.e_tame; ++d) {
      BrauerClassFunction induced = induce(fibre.tensor(o.chi_power_char(d, cover.p)),
                                           o.decomposition);
      result = result - induced.scaled(Rational(d, inv.e_tame));
    }
  }
  return result;
}

long riemann_roch_dim(const CoverDescription& cover, const EquivariantSheafData& sheaf) {
  return (1 - genus_upstairs(cover)) * sheaf.rank + sheaf.degree;
}

std::vector<FixedPointTerm> fixed_point_data(const CoverDescription& cover,
                                             const EquivariantSheafData& sheaf, int sigma) {
  const GroupPtr g = cover.group;
  if (sigma == 0) throw Error(Error::Kind::domain, "sigma must be nontrivial");
  if (g->element_order(sigma) % cover.p == 0)
    throw Error(Error::Kind::domain, "sigma must have order prime to p");
  std::vector<FixedPointTerm> data;
  for (const auto& o : cover.orbits) {
    const BrauerClassFunction& fibre = sheaf.fibres.at(o.name);
    // tau(P) is fixed by sigma iff tau^{-1} sigma tau lies in G_P; each
    // coset tau G_P is one point of the orbit.
    std::vector<bool> coset_seen(g->order(), false);
    for (int tau = 0; tau < g->order(); ++tau) {
      if (coset_seen[tau]) continue;
      for (int m : o.decomposition.members()) coset_seen[g->mul(tau, m)] = true;
      int pulled = g->mul(g->mul(g->inverse(tau), sigma), tau);
      if (!o.decomposition.contains(pulled)) continue;
      FixedPointTerm term;
      term.trace = fibre.value_at_element(o.decomposition.to_local(pulled));
      term.chi = o.chi_value(pulled);
      data.push_back(std::move(term));
    }
  }
  return data;
}

Cyclotomic lefschetz_value(const CoverDescription& cover, const EquivariantSheafData& sheaf,
                           int sigma, const std::vector<FixedPointTerm>& data) {
  (void)cover;
  (void)sheaf;
  (void)sigma;
  Cyclotomic sum;
  for (const auto& term : data) {
    Cyclotomic denom = Cyclotomic(1) - term.chi;
    if (denom.is_zero())
      throw Error(Error::Kind::inconsistent,
                  "cotangent character value 1 at a fixed point of a tame automorphism");
    sum += term.trace / denom;
  }
  return sum;
}

Cyclotomic lefschetz_value(const CoverDescription& cover, const EquivariantSheafData& sheaf,
                           int sigma) {
  return lefschetz_value(cover, sheaf, sigma, fixed_point_data(cover, sheaf, sigma));
}

InductionDivisibility induction_divisibility(const CoverDescription& cover,
                                             const BrauerTable& table) {
  if (cover.p == 2)
    throw Error(Error::Kind::hypothesis, "the divisibility relation requires odd characteristic");
  const GroupPtr g = cover.group;
  InductionDivisibility out;
  out.element = BrauerClassFunction(g, cover.p);
  for (const auto& o : cover.orbits) {
    RamificationInvariants inv = o.invariants();
    long wild = o.wild_term();
    if (wild % 2 != 0)
      throw Error(Error::Kind::inconsistent, "odd wild term in odd characteristic");
    for (long d = 0; d < inv.e_tame; ++d) {
      long coeff = inv.e_wild * (d + wild / 2);
      if (coeff == 0) continue;
      BrauerClassFunction induced = induce(o.chi_power_char(d, cover.p), o.decomposition);
      out.element = out.element + induced.scaled(Rational(coeff) * Rational(o.orbit_size()));
    }
  }
  auto quotient = divide_in_k0(out.element, table, Integer(g->order()));
  out.divisible = quotient.has_value();
  if (quotient) out.quotient = std::move(*quotient);
  return out;
}

InductionDivisibility induction_divisibility(const CoverDescription& cover) {
  return induction_divisibility(cover, compute_brauer_table(cover.group, cover.p));
}

}  // namespace equichar
