#pragma once

#include <optional>

#include "equichar/cover.hpp"

namespace equichar {

/// The equivariant Euler characteristic chi(G, X, E) = [H^0] - [H^1] in
/// K0(G,k) tensor Q, evaluated from the closed formula
///
///   ((1 - g_Y) r + deg(E)/n - (r/2n) sum_P ((e^w-1)(e^t+1) + sum_{s>=2}(|G_{P,s}|-1))) [k[G]]
///   - (1/n) sum_P e^w sum_{d=1}^{e^t-1} d [Ind_{G_P}^G(E(P) tensor chi_P^d)],
///
/// with point sums computed orbit-wise.
BrauerClassFunction euler_characteristic(const CoverDescription& cover,
                                         const EquivariantSheafData& sheaf);

/// (1 - g_X) r + deg(E), the dimension the Euler characteristic must have
/// at the identity class.
long riemann_roch_dim(const CoverDescription& cover, const EquivariantSheafData& sheaf);

/// One fixed point of sigma: the trace of sigma on the fibre and the
/// cotangent character value at sigma.
struct FixedPointTerm {
  Cyclotomic trace;
  Cyclotomic chi;
};

/// Fixed-point data of a p-regular sigma != 1 derived group-theoretically:
/// the points of the orbit of P fixed by sigma correspond to cosets tau G_P
/// with tau^{-1} sigma tau in G_P.
std::vector<FixedPointTerm> fixed_point_data(const CoverDescription& cover,
                                             const EquivariantSheafData& sheaf, int sigma);

/// sum over fixed points of Trace(sigma|E(P)) / (1 - chi_P(sigma)).
Cyclotomic lefschetz_value(const CoverDescription& cover, const EquivariantSheafData& sheaf,
                           int sigma, const std::vector<FixedPointTerm>& data);
Cyclotomic lefschetz_value(const CoverDescription& cover, const EquivariantSheafData& sheaf,
                           int sigma);

/// The global relation between the induced cotangent characters: the sum
/// over points and d of n_{P,d} [Ind_{G_P}^G(chi_P^d)] with
/// n_{P,d} = e^w (d + wild_term/2), which must be divisible by |G| in
/// K0(G,k). Requires odd characteristic.
struct InductionDivisibility {
  BrauerClassFunction element;
  bool divisible = false;
  std::optional<BrauerClassFunction> quotient;
};
InductionDivisibility induction_divisibility(const CoverDescription& cover,
                                             const BrauerTable& table);
InductionDivisibility induction_divisibility(const CoverDescription& cover);

}  // namespace equichar
