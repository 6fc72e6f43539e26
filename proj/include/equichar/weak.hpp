#pragma once

#include "equichar/cover.hpp"

namespace equichar {

/// The unique (l, m) with n = (e_wild - 1) + (l + m e_tame) e_wild and
/// 0 <= l < e_tame. Requires n == -1 (mod e_wild).
struct CoeffDecomposition {
  long l = 0;
  long m = 0;
};
CoeffDecomposition decompose_divisor_coefficient(long n, long e_tame, long e_wild);

/// Ind_{G_P}^G(Cov(chi_P^d)) as a projective class: the projective cover of
/// the cotangent character power, induced up to the full group. For tame
/// orbits the cover is the character itself.
ProjectiveClass induced_cover_class(const CoverDescription& cover, const RamificationOrbit& orbit,
                                    long d, const std::shared_ptr<const ProjectiveBasis>& basis);

/// The canonical projective module N of a weakly ramified cover, defined by
///   n copies of N == direct sum over P, d of e^w d copies of
///   Ind_{G_P}^G(Cov(chi_P^d)).
/// Fails with an "inconsistent cover data" error when the division by |G|
/// does not come out integral (which cannot happen for data coming from an
/// actual cover).
ProjectiveClass canonical_projective(const CoverDescription& cover,
                                     const std::shared_ptr<const ProjectiveBasis>& basis);

/// chi(G, X, O_X(D)) as an integral combination of projective classes:
///   -[N] + sum_{Q in Y} sum_{d=1}^{l_Q} [Ind(Cov(chi_Q^{-d}))]
///        + (1 - g_Y + sum_Q m_Q) [k[G]].
/// Requires a weakly ramified cover and n_P == -1 (mod e^w) everywhere
/// (orbits missing from D carry coefficient 0).
ProjectiveClass euler_projective(const CoverDescription& cover, const EquivariantDivisor& d,
                                 const std::shared_ptr<const ProjectiveBasis>& basis);

/// A G-stable set of points described by ramified orbit names plus a count
/// of unramified base points (each an orbit of |G| free points).
struct StableSet {
  std::vector<std::string> orbit_names;
  long unramified_points = 0;
  long orbit_count() const { return static_cast<long>(orbit_names.size()) + unramified_points; }
};

/// H^1 of the ideal sheaf of S:
///   [H^1(X, I(S))] = [N] + sum_{Q in pi(S)} [Ind(Cov(chi_Q^0))] + (g_Y - 1) [k[G]],
/// with S required to contain every wildly ramified orbit. The precise form
/// adds one regular module on both sides; actual_module reports whether
/// H^1 + k[G] has non-negative integral coordinates.
struct IdealSheafResult {
  ProjectiveClass h1_class;
  ProjectiveClass precise_left;  // h1_class + [k[G]]
  bool actual_module = false;
};
IdealSheafResult ideal_sheaf_h1(const CoverDescription& cover, const StableSet& s,
                                const std::shared_ptr<const ProjectiveBasis>& basis);

/// The class of the global logarithmic differentials along S (S must
/// contain all ramified orbits):
///   [H^0(X, Omega_X(S))] = (|S/G| + g_Y - 1) [k[G]] - [N];
/// H^0 + N is free of rank |S/G| + g_Y - 1.
struct LogDifferentialsResult {
  ProjectiveClass h0_class;
  long free_rank = 0;
  bool h0_is_actual_module = false;
};
LogDifferentialsResult log_differentials_class(const CoverDescription& cover, const StableSet& s,
                                               const std::shared_ptr<const ProjectiveBasis>& basis);

/// Checks the duality identity
///   N^* + (sum_{Q in pi(S)} Ind(Cov(chi_Q^0))^*) + N == |S/G| [k[G]]
/// in K0(k[G]).
bool duality_identity_check(const CoverDescription& cover, const StableSet& s,
                            const std::shared_ptr<const ProjectiveBasis>& basis);

}  // namespace equichar
