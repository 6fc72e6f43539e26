#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "equichar/numbers.hpp"

namespace equichar {

/// Structure metadata for groups built as P x| C with P elementary abelian
/// of order p^a and C cyclic of order t acting on P.
struct SemidirectInfo {
  long p = 0, a = 0, t = 0;
  std::vector<int> p_part;  // element ids of P
  std::vector<int> c_part;  // element ids of the distinguished complement C
  int c_generator = 0;      // id of the designated generator of C
  bool free_action = false; // C \ {1} acts without fixed points on P \ {1}
};

class Subgroup;
class CayleyGroup;
std::pair<std::shared_ptr<const CayleyGroup>, std::vector<int>> quotient_group(
    std::shared_ptr<const CayleyGroup> g, const Subgroup& normal);

/// A finite group given by its full multiplication table. Element ids are
/// 0..n-1 with 0 the identity. Instances are immutable once constructed;
/// conjugacy data is computed on first use and cached.
class CayleyGroup : public std::enable_shared_from_this<CayleyGroup> {
 public:
  static constexpr long kMaxOrder = 10'000;

  /// Validates the table (Latin square, identity at 0, inverses,
  /// associativity) for orders up to 512; larger tables are rejected.
  static std::shared_ptr<const CayleyGroup> from_table(std::vector<int> table);

  static std::shared_ptr<const CayleyGroup> cyclic(long n);
  static std::shared_ptr<const CayleyGroup> elementary_abelian(long p, long a);
  /// P x| C with the action of the generator of C given by an invertible
  /// a x a matrix over F_p whose order divides t.
  static std::shared_ptr<const CayleyGroup> semidirect_pc(
      long p, long a, long t, const std::vector<std::vector<long>>& action);
  /// Canonical free-action build: C of order t | p^a - 1 acts on the
  /// additive group of F_{p^a} by multiplication with a root of unity.
  static std::shared_ptr<const CayleyGroup> semidirect_pc_free(long p, long a, long t);

  long order() const { return n_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  int inverse(int a) const { return inv_[a]; }
  int conjugate(int g, int x) const { return mul(mul(g, x), inverse(g)); }
  long element_order(int a) const { return order_[a]; }
  int power(int a, long e) const;
  bool is_abelian() const { return abelian_; }
  const std::vector<int>& table() const { return table_; }

  long class_count() const { ensure_classes(); return class_reps_.size(); }
  int class_of(int a) const { ensure_classes(); return class_index_[a]; }
  /// Minimal element id of each conjugacy class, ascending.
  const std::vector<int>& class_reps() const { ensure_classes(); return class_reps_; }
  const std::vector<long>& class_sizes() const { ensure_classes(); return class_sizes_; }

  /// Representatives of the conjugacy classes of elements whose order is
  /// coprime to p, ascending.
  std::vector<int> p_regular_class_reps(long p) const;

  const std::optional<SemidirectInfo>& semidirect_info() const { return sd_; }

 private:
  friend class Subgroup;
  friend std::pair<std::shared_ptr<const CayleyGroup>, std::vector<int>> quotient_group(
      std::shared_ptr<const CayleyGroup> g, const Subgroup& normal);

  CayleyGroup(std::vector<int> table, long n);
  void ensure_classes() const;

  long n_ = 1;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<long> order_;
  bool abelian_ = true;
  std::optional<SemidirectInfo> sd_;

  mutable std::once_flag classes_once_;
  mutable std::vector<int> class_index_;
  mutable std::vector<int> class_reps_;
  mutable std::vector<long> class_sizes_;
};

using GroupPtr = std::shared_ptr<const CayleyGroup>;

/// A subgroup of a CayleyGroup, with its own materialized group structure
/// and id translation in both directions.
class Subgroup {
 public:
  Subgroup() = default;

  static Subgroup whole(GroupPtr g);
  static Subgroup trivial(GroupPtr g);
  /// Validates closure under product and inverse.
  static Subgroup from_members(GroupPtr g, std::vector<int> members);
  static Subgroup generated(GroupPtr g, const std::vector<int>& generators);

  bool valid() const { return parent_ != nullptr; }
  const std::vector<int>& members() const { return members_; }
  long size() const { return static_cast<long>(members_.size()); }
  bool contains(int gid) const { return to_local_[gid] >= 0; }
  GroupPtr parent() const { return parent_; }
  /// The subgroup as a group in its own right (ids 0..size-1, sorted by
  /// the global ids).
  GroupPtr group() const { return local_; }
  int to_local(int gid) const;
  int to_global(int lid) const { return members_[lid]; }

  bool is_normal() const;
  bool is_normal_in(const Subgroup& bigger) const;
  Subgroup intersect(const Subgroup& other) const;
  Subgroup conjugate_by(int g) const;

  bool operator==(const Subgroup& other) const {
    return parent_ == other.parent_ && members_ == other.members_;
  }

 private:
  GroupPtr parent_, local_;
  std::vector<int> members_;
  std::vector<int> to_local_;
  void materialize();
};

/// One representative (the minimal element id) per H\G/K double coset,
/// ascending.
std::vector<int> double_coset_representatives(const CayleyGroup& g, const Subgroup& h,
                                              const Subgroup& k);

/// Quotient of g by a normal subgroup: the coset group (classes labelled by
/// minimal coset element, identity first) and the projection map.
std::pair<GroupPtr, std::vector<int>> quotient_group(GroupPtr g, const Subgroup& normal);

/// All subgroups (small orders only).
std::vector<Subgroup> all_subgroups(GroupPtr g);

/// Structural checks on a candidate wild inertia subgroup inside a
/// decomposition group: elementary abelian of exponent p, cyclic
/// prime-to-p quotient, free conjugation action of the quotient on the
/// nontrivial wild elements, and the resulting congruence
/// e^wild == 1 (mod e^tame). Throws a domain error unless `wild` is normal.
struct InertiaReport {
  bool wild_elementary_abelian = false;
  bool quotient_cyclic = false;
  bool quotient_order_prime_to_p = false;
  bool conjugation_free = false;
  bool congruence_holds = false;  // e^w == 1 mod e^t
  long e = 0, e_wild = 0, e_tame = 0;
  bool all_pass() const {
    return wild_elementary_abelian && quotient_cyclic && quotient_order_prime_to_p &&
           conjugation_free && congruence_holds;
  }
};
InertiaReport validate_wild_inertia(const Subgroup& wild, long p);

/// An element c of minimal id generating a cyclic complement of `normal`
/// (i.e. <c> . normal = parent, <c> meet normal = 1), if one exists.
std::optional<int> cyclic_complement_generator(const Subgroup& normal);

}  // namespace equichar
