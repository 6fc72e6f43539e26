#include "equichar/weak.hpp"

#include <set>

namespace equichar {

namespace {

void require_weakly_ramified(const CoverDescription& cover) {
  Ramification r = classify_ramification(cover);
  if (r == Ramification::wild)
    throw Error(Error::Kind::hypothesis,
                "requires a weakly ramified cover (all G_{P,s} trivial for s >= 2)");
}

void require_congruences(const CoverDescription& cover, const EquivariantDivisor& d) {
  for (const auto& o : cover.orbits) {
    long e_wild = o.invariants().e_wild;
    long n = d.coefficient(o.name);
    if (mod_nonneg(n + 1, e_wild) != 0)
      throw Error(Error::Kind::hypothesis,
                  "orbit '" + o.name + "': requires n_P == -1 (mod e_P^w), got n_P = " +
                      std::to_string(n) + ", e_P^w = " + std::to_string(e_wild));
  }
}

ProjectiveClass regular_class(const CoverDescription& cover,
                              const std::shared_ptr<const ProjectiveBasis>& basis) {
  return cartan_preimage(BrauerClassFunction::regular(cover.group, cover.p), basis);
}

}  // namespace

CoeffDecomposition decompose_divisor_coefficient(long n, long e_tame, long e_wild) {
  if (e_tame < 1 || e_wild < 1) throw Error(Error::Kind::domain, "invalid ramification indices");
  if (mod_nonneg(n + 1, e_wild) != 0)
    throw Error(Error::Kind::hypothesis,
                "requires n == -1 (mod e^w), got n = " + std::to_string(n) +
                    ", e^w = " + std::to_string(e_wild));
  long q = (n - (e_wild - 1)) / e_wild;  // = l + m e_tame, exact by the congruence
  CoeffDecomposition out;
  out.l = mod_nonneg(q, e_tame);
  out.m = (q - out.l) / e_tame;
  return out;
}

ProjectiveClass induced_cover_class(const CoverDescription& cover, const RamificationOrbit& orbit,
                                    long d, const std::shared_ptr<const ProjectiveBasis>& basis) {
  RamificationInvariants inv = orbit.invariants();
  BrauerClassFunction cover_char;
  if (inv.e_wild == 1) {
    cover_char = orbit.chi_power_char(d, cover.p);
  } else {
    // Split G_P as wild inertia x| cyclic complement and induce chi^d from
    // the complement; freeness of the conjugation action is what makes this
    // the projective cover.
    GroupPtr local = orbit.decomposition.group();
    std::vector<int> wild_local;
    for (int m : orbit.filtration[1].members())
      wild_local.push_back(orbit.decomposition.to_local(m));
    Subgroup wild = Subgroup::from_members(local, std::move(wild_local));
    InertiaReport report = validate_wild_inertia(wild, cover.p);
    if (!report.all_pass())
      throw Error(Error::Kind::inconsistent,
                  "orbit '" + orbit.name +
                      "': decomposition group is not of the weakly ramified form "
                      "(wild part elementary abelian, cyclic tame quotient acting freely)");
    auto cgen = cyclic_complement_generator(wild);
    if (!cgen)
      throw Error(Error::Kind::inconsistent,
                  "orbit '" + orbit.name + "': no cyclic complement of the wild inertia");
    Subgroup complement = Subgroup::generated(local, {*cgen});
    BrauerClassFunction chi_on_c(complement.group(), cover.p);
    std::vector<Cyclotomic> values;
    for (int rep : chi_on_c.class_reps()) {
      int global = orbit.decomposition.to_global(complement.to_global(rep));
      values.push_back(orbit.chi_value(global, d));
    }
    chi_on_c = BrauerClassFunction::from_values(complement.group(), cover.p, std::move(values));
    cover_char = induce(chi_on_c, complement);
  }
  return cartan_preimage(induce(cover_char, orbit.decomposition), basis);
}

ProjectiveClass canonical_projective(const CoverDescription& cover,
                                     const std::shared_ptr<const ProjectiveBasis>& basis) {
  require_weakly_ramified(cover);
  ProjectiveClass sum = ProjectiveClass::zero(basis);
  for (const auto& o : cover.orbits) {
    RamificationInvariants inv = o.invariants();
    for (long d = 1; d < inv.e_tame; ++d) {
      ProjectiveClass cls = induced_cover_class(cover, o, d, basis);
      sum = sum + cls.scaled(Rational(inv.e_wild * d) * Rational(o.orbit_size()));
    }
  }
  auto quotient = divide_projective(sum, Integer(cover.group->order()));
  if (!quotient)
    throw Error(Error::Kind::inconsistent,
                "inconsistent cover data: the canonical projective relation is not divisible "
                "by |G| in K0(k[G])");
  return *quotient;
}

ProjectiveClass euler_projective(const CoverDescription& cover, const EquivariantDivisor& d,
                                 const std::shared_ptr<const ProjectiveBasis>& basis) {
  require_weakly_ramified(cover);
  require_congruences(cover, d);
  ProjectiveClass n_module = canonical_projective(cover, basis);
  ProjectiveClass result = ProjectiveClass::zero(basis) - n_module;
  Rational m_sum(0);
  for (const auto& o : cover.orbits) {
    RamificationInvariants inv = o.invariants();
    CoeffDecomposition lm =
        decompose_divisor_coefficient(d.coefficient(o.name), inv.e_tame, inv.e_wild);
    m_sum += lm.m;
    for (long j = 1; j <= lm.l; ++j)
      result = result + induced_cover_class(cover, o, -j, basis);
  }
  for (const auto& [mult, count] : d.unramified) m_sum += Rational(mult) * count;
  Rational regular_coeff = Rational(1 - cover.base_genus) + m_sum;
  result = result + regular_class(cover, basis).scaled(regular_coeff);
  return result;
}

namespace {

void check_stable_set(const CoverDescription& cover, const StableSet& s, bool need_all_ramified) {
  if (s.orbit_names.empty() && s.unramified_points == 0)
    throw Error(Error::Kind::hypothesis, "the stable set S must be non-empty");
  if (s.unramified_points < 0)
    throw Error(Error::Kind::hypothesis, "negative number of unramified points");
  std::set<std::string> named(s.orbit_names.begin(), s.orbit_names.end());
  if (named.size() != s.orbit_names.size())
    throw Error(Error::Kind::domain, "duplicate orbit in stable set");
  for (const auto& name : s.orbit_names) cover.orbit(name);  // existence check
  for (const auto& o : cover.orbits) {
    bool in_set = named.count(o.name) > 0;
    if (in_set) continue;
    if (need_all_ramified)
      throw Error(Error::Kind::hypothesis,
                  "S must contain every ramified orbit; missing '" + o.name + "'");
    if (o.invariants().e_wild != 1)
      throw Error(Error::Kind::hypothesis,
                  "S must contain every wildly ramified orbit; missing '" + o.name + "'");
  }
}

}  // namespace

IdealSheafResult ideal_sheaf_h1(const CoverDescription& cover, const StableSet& s,
                                const std::shared_ptr<const ProjectiveBasis>& basis) {
  require_weakly_ramified(cover);
  check_stable_set(cover, s, /*need_all_ramified=*/false);
  ProjectiveClass regular = regular_class(cover, basis);
  ProjectiveClass result = canonical_projective(cover, basis);
  for (const auto& name : s.orbit_names)
    result = result + induced_cover_class(cover, cover.orbit(name), 0, basis);
  // Unramified base points contribute Ind_1^G(trivial) = k[G] each.
  result = result + regular.scaled(Rational(s.unramified_points));
  result = result + regular.scaled(Rational(cover.base_genus - 1));
  IdealSheafResult out;
  out.h1_class = result;
  out.precise_left = result + regular;
  out.actual_module = out.precise_left.is_actual_module();
  return out;
}

LogDifferentialsResult log_differentials_class(const CoverDescription& cover, const StableSet& s,
                                               const std::shared_ptr<const ProjectiveBasis>& basis) {
  require_weakly_ramified(cover);
  check_stable_set(cover, s, /*need_all_ramified=*/true);
  LogDifferentialsResult out;
  out.free_rank = s.orbit_count() + cover.base_genus - 1;
  ProjectiveClass n_module = canonical_projective(cover, basis);
  out.h0_class = regular_class(cover, basis).scaled(Rational(out.free_rank)) - n_module;
  out.h0_is_actual_module = out.h0_class.is_actual_module();
  return out;
}

bool duality_identity_check(const CoverDescription& cover, const StableSet& s,
                            const std::shared_ptr<const ProjectiveBasis>& basis) {
  require_weakly_ramified(cover);
  check_stable_set(cover, s, /*need_all_ramified=*/true);
  ProjectiveClass n_module = canonical_projective(cover, basis);
  ProjectiveClass lhs = n_module.dual() + n_module;
  for (const auto& name : s.orbit_names)
    lhs = lhs + induced_cover_class(cover, cover.orbit(name), 0, basis).dual();
  ProjectiveClass regular = regular_class(cover, basis);
  lhs = lhs + regular.scaled(Rational(s.unramified_points));  // k[G]^* = k[G]
  ProjectiveClass rhs = regular.scaled(Rational(s.orbit_count()));
  return lhs == rhs;
}

}  // namespace equichar
