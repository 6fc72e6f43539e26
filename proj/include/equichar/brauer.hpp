#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "equichar/cyclotomic.hpp"
#include "equichar/group.hpp"

namespace equichar {

/// A class function on the p-regular conjugacy classes of a group, with
/// values in cyclotomic fields. These represent elements of the
/// Grothendieck group K0(G,k) (k of characteristic p) and, with rational
/// coefficients, of K0(G,k) tensor Q: equality of Brauer characters is
/// equality in K0.
class BrauerClassFunction {
 public:
  BrauerClassFunction() = default;
  /// The zero function.
  BrauerClassFunction(GroupPtr group, long p);
  static BrauerClassFunction trivial_char(GroupPtr group, long p);
  /// Brauer character of the regular module: |G| at the identity, 0 on the
  /// other p-regular classes.
  static BrauerClassFunction regular(GroupPtr group, long p);
  /// Values aligned with group->p_regular_class_reps(p).
  static BrauerClassFunction from_values(GroupPtr group, long p,
                                         std::vector<Cyclotomic> values);

  bool valid() const { return group_ != nullptr; }
  GroupPtr group() const { return group_; }
  long characteristic() const { return p_; }
  const std::vector<int>& class_reps() const { return reps_; }
  const std::vector<Cyclotomic>& values() const { return values_; }

  /// Value at the conjugacy class of an arbitrary p-regular element.
  const Cyclotomic& value_at_element(int gid) const;
  const Cyclotomic& dimension() const { return values_.at(0); }

  BrauerClassFunction operator+(const BrauerClassFunction& o) const;
  BrauerClassFunction operator-(const BrauerClassFunction& o) const;
  BrauerClassFunction operator-() const;
  BrauerClassFunction scaled(const Rational& r) const;
  /// Pointwise product (the tensor product of representations).
  BrauerClassFunction tensor(const BrauerClassFunction& o) const;
  /// g |-> value(g^{ -1}); the contragredient representation.
  BrauerClassFunction dual() const;

  bool is_zero() const;
  bool operator==(const BrauerClassFunction& o) const;
  bool operator!=(const BrauerClassFunction& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void index_classes();
  GroupPtr group_;
  long p_ = 0;
  std::vector<int> reps_;
  std::vector<Cyclotomic> values_;
  std::vector<int> pos_by_class_;  // class index -> position in reps_, or -1
};

/// Induced class function: phi lives on h.group(), the result on h.parent().
BrauerClassFunction induce(const BrauerClassFunction& phi, const Subgroup& h);
/// Restriction along class fusion: the result lives on h.group().
BrauerClassFunction restrict_to(const BrauerClassFunction& phi, const Subgroup& h);
/// Inflation along a quotient projection (as produced by quotient_group).
BrauerClassFunction inflate(const BrauerClassFunction& phi_on_quotient, GroupPtr group,
                            const std::vector<int>& projection);

/// The irreducible Brauer characters of a group.
struct BrauerTable {
  GroupPtr group;
  long p = 0;
  std::vector<BrauerClassFunction> rows;
  enum class Provenance { computed, user_supplied };
  Provenance provenance = Provenance::computed;
};

/// Automatic table computation. Supported: groups with a normal Sylow
/// p-subgroup and abelian quotient (this covers cyclic groups and the
/// P x| C decomposition groups of weakly ramified covers, where the
/// irreducibles are the characters of C), and abelian groups of order prime
/// to p. Throws an unsupported error otherwise; supply a table by hand in
/// that case.
BrauerTable compute_brauer_table(GroupPtr group, long p);
/// Wraps user rows after validating row count, invertibility of the value
/// matrix and positive integral dimensions.
BrauerTable user_brauer_table(GroupPtr group, long p,
                              std::vector<std::vector<Cyclotomic>> rows);

/// Coordinates of a class function over the irreducible basis, if the
/// (always solvable) linear system has rational solutions.
std::optional<std::vector<Rational>> irreducible_coordinates(const BrauerClassFunction& fn,
                                                             const BrauerTable& table);

/// x / n over the irreducible basis when every coordinate is an integer
/// multiple of n; nullopt otherwise.
std::optional<BrauerClassFunction> divide_in_k0(const BrauerClassFunction& fn,
                                                const BrauerTable& table, const Integer& n);

/// The projective indecomposable characters of a group (the basis of
/// K0(k[G]) inside K0(G,k) under the Cartan homomorphism).
struct ProjectiveBasis {
  GroupPtr group;
  long p = 0;
  std::vector<BrauerClassFunction> chars;
  std::vector<std::string> labels;
};

/// Computed for groups with a normal Sylow p-subgroup and a cyclic
/// complement (induction of the complement characters), and for groups of
/// order prime to p (the irreducibles themselves).
std::shared_ptr<const ProjectiveBasis> projective_basis(GroupPtr group, long p);
std::shared_ptr<const ProjectiveBasis> user_projective_basis(GroupPtr group, long p,
                                                             std::vector<BrauerClassFunction> chars);

/// An element of K0(k[G]): rational coordinates over the projective
/// indecomposable basis.
class ProjectiveClass {
 public:
  ProjectiveClass() = default;
  ProjectiveClass(std::shared_ptr<const ProjectiveBasis> basis, std::vector<Rational> coords);
  static ProjectiveClass zero(std::shared_ptr<const ProjectiveBasis> basis);

  bool valid() const { return basis_ != nullptr; }
  const std::shared_ptr<const ProjectiveBasis>& basis() const { return basis_; }
  const std::vector<Rational>& coordinates() const { return coords_; }

  /// The Brauer character of the class (its image in K0(G,k)).
  BrauerClassFunction character() const;
  Rational dimension() const;
  /// True iff all coordinates are non-negative integers, i.e. the class is
  /// an actual projective module rather than a virtual one.
  bool is_actual_module() const;

  ProjectiveClass operator+(const ProjectiveClass& o) const;
  ProjectiveClass operator-(const ProjectiveClass& o) const;
  ProjectiveClass scaled(const Rational& r) const;
  ProjectiveClass dual() const;

  bool operator==(const ProjectiveClass& o) const;
  bool operator!=(const ProjectiveClass& o) const { return !(*this == o); }
  std::string to_string() const;

 private:
  std::shared_ptr<const ProjectiveBasis> basis_;
  std::vector<Rational> coords_;
};

/// Forgetful map K0(k[G]) -> K0(G,k); injective, so the round trip through
/// cartan_preimage is the identity.
BrauerClassFunction cartan_image(const ProjectiveClass& p);
/// Solves for integer coordinates over the projective basis; throws a
/// domain error ("not in the image of the Cartan homomorphism") when the
/// class function is not an integral combination of projective characters.
ProjectiveClass cartan_preimage(const BrauerClassFunction& fn,
                                std::shared_ptr<const ProjectiveBasis> basis);
/// Rational-coordinate solve without the integrality requirement.
std::optional<ProjectiveClass> projective_coordinates(const BrauerClassFunction& fn,
                                                      std::shared_ptr<const ProjectiveBasis> basis);
std::optional<ProjectiveClass> divide_projective(const ProjectiveClass& p, const Integer& n);

/// The projective cover of a one-dimensional representation chi of a
/// complement subgroup C inside H = P x| C, as a class in K0(k[H]); this is
/// the induced module Ind_C^H(chi). Requires the conjugation action of C on
/// the nontrivial elements of the normal Sylow subgroup to be free.
ProjectiveClass projective_cover(const BrauerClassFunction& chi_on_c, const Subgroup& c_in_h);

}  // namespace equichar
