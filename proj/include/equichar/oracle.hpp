#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "equichar/cover.hpp"
#include "equichar/linalg.hpp"
#include "equichar/weak.hpp"

namespace equichar {

enum class ExplicitKind { artin_schreier, kummer, affine };

/// A divisor on an explicit cover: coefficients on the distinguished
/// ramified orbits plus optional support on free orbits over concrete
/// unramified base values.
struct OracleDivisor {
  std::map<std::string, long> ramified;
  std::vector<std::pair<long, FiniteField::Elt>> unramified;  // (coefficient >= 0, base value)

  EquivariantDivisor to_abstract() const;
};

/// Global sections of an equivariant line bundle on an explicit cover:
/// a monomial basis and the matrices of the full group action.
struct SectionSpace {
  GroupPtr group;
  std::shared_ptr<const FiniteField> field;
  long p = 0;
  long degree = 0;  // degree of the divisor
  std::vector<std::string> basis;
  std::map<int, FFMatrix> action;  // group element id -> matrix

  long dimension() const { return static_cast<long>(basis.size()); }
};

/// Module-level analysis of a section space: Brauer character from lifted
/// eigenvalues, projectivity read off the Sylow p-subgroup action, and the
/// decomposition into projective indecomposables when applicable.
struct ModuleDecomposition {
  BrauerClassFunction character;
  std::map<std::size_t, std::size_t> jordan;  // Jordan type of a wild generator
  bool projective = false;
  bool free_module = false;
  long free_rank = 0;
  std::optional<ProjectiveClass> projective_class;
};

/// A concrete cover of the projective line with computable sections:
///  - artin_schreier(p, r): y^p - y = x^r, cyclic of order p, one wild
///    point over infinity with ramification jump r;
///  - kummer(m; p): y^m = x, cyclic of order m, tame at 0 and infinity;
///  - affine(p): x |-> ax + b on the x-line, order p(p-1), weakly ramified
///    at infinity (e = p(p-1), wild part p) with one tame orbit of size p.
class ExplicitCover {
 public:
  static ExplicitCover artin_schreier(long p, long r);
  static ExplicitCover kummer(long m, long p);
  static ExplicitCover affine(long p);

  ExplicitKind kind() const { return kind_; }
  long characteristic() const { return p_; }
  long parameter() const { return param_; }
  const std::shared_ptr<const FiniteField>& field() const { return field_; }
  const CoverDescription& derived() const { return derived_; }
  long genus() const { return genus_; }

  /// ord_P(sigma(t) - t) - 1 for a constructed uniformizer t at the wild
  /// point; sigma must be a nontrivial element of the wild inertia.
  long measure_jump(int sigma) const;

  /// Exact global sections of O_X(D) with the full action; supported for
  /// divisors on the distinguished orbits (plus non-negative coefficients
  /// over unramified base values for the cyclic families).
  SectionSpace h0_space(const OracleDivisor& divisor) const;

  /// The model's canonical divisor cut out by the invariant differential
  /// pulled back from the base line.
  OracleDivisor canonical_oracle_divisor() const;

  /// H^0(X, Omega_X(S)) for a stable set given by orbit names, computed as
  /// sections of O_X(K + S) through the invariant differential.
  SectionSpace omega_space(const std::vector<std::string>& orbit_names) const;

  /// Brauer character of H^0(X, O_X(D)); requires deg D > 2g - 2 so that
  /// H^1 vanishes and the section space is the whole Euler characteristic.
  BrauerClassFunction oracle_euler(const OracleDivisor& divisor) const;

  ModuleDecomposition decompose(const SectionSpace& space) const;

 private:
  ExplicitCover() = default;

  /// ord_P(sigma(t) - t) at the wild point, for any nontrivial sigma fixing
  /// it; used both for jump measurement and to build the filtration.
  long measure_jump_raw(int sigma) const;
  FFMatrix action_matrix(int sigma, const OracleDivisor& divisor,
                         const std::vector<std::pair<long, long>>& monomials) const;

  ExplicitKind kind_ = ExplicitKind::artin_schreier;
  long p_ = 0;
  long param_ = 0;  // r for artin_schreier, m for kummer, unused for affine
  std::shared_ptr<const FiniteField> field_;
  CoverDescription derived_;
  long genus_ = 0;
};

ExplicitCover build_explicit(ExplicitKind kind, long p, long param);

}  // namespace equichar
