#include "equichar/brauer.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "detail/linear_solve.hpp"

namespace equichar {

namespace {

void check_prime(long p) {
  if (!is_prime(p)) throw Error(Error::Kind::domain, "characteristic must be prime");
}

}  // namespace

BrauerClassFunction::BrauerClassFunction(GroupPtr group, long p)
    : group_(std::move(group)), p_(p) {
  check_prime(p);
  reps_ = group_->p_regular_class_reps(p_);
  values_.assign(reps_.size(), Cyclotomic());
  index_classes();
}

void BrauerClassFunction::index_classes() {
  pos_by_class_.assign(group_->class_count(), -1);
  for (std::size_t i = 0; i < reps_.size(); ++i)
    pos_by_class_[group_->class_of(reps_[i])] = static_cast<int>(i);
}

BrauerClassFunction BrauerClassFunction::trivial_char(GroupPtr group, long p) {
  BrauerClassFunction fn(std::move(group), p);
  for (auto& v : fn.values_) v = Cyclotomic(1);
  return fn;
}

BrauerClassFunction BrauerClassFunction::regular(GroupPtr group, long p) {
  BrauerClassFunction fn(group, p);
  fn.values_[0] = Cyclotomic(group->order());
  return fn;
}

BrauerClassFunction BrauerClassFunction::from_values(GroupPtr group, long p,
                                                     std::vector<Cyclotomic> values) {
  BrauerClassFunction fn(std::move(group), p);
  if (values.size() != fn.reps_.size())
    throw Error(Error::Kind::shape, "wrong number of class-function values");
  fn.values_ = std::move(values);
  return fn;
}

const Cyclotomic& BrauerClassFunction::value_at_element(int gid) const {
  int pos = pos_by_class_.at(group_->class_of(gid));
  if (pos < 0)
    throw Error(Error::Kind::domain, "element is not p-regular");
  return values_[pos];
}

BrauerClassFunction BrauerClassFunction::operator+(const BrauerClassFunction& o) const {
  if (group_ != o.group_ || p_ != o.p_)
    throw Error(Error::Kind::domain, "class functions live on different groups");
  BrauerClassFunction out = *this;
  for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] = values_[i] + o.values_[i];
  return out;
}

BrauerClassFunction BrauerClassFunction::operator-(const BrauerClassFunction& o) const {
  return *this + (-o);
}

BrauerClassFunction BrauerClassFunction::operator-() const {
  BrauerClassFunction out = *this;
  for (auto& v : out.values_) v = -v;
  return out;
}

BrauerClassFunction BrauerClassFunction::scaled(const Rational& r) const {
  BrauerClassFunction out = *this;
  Cyclotomic c(r);
  for (auto& v : out.values_) v = c * v;
  return out;
}

BrauerClassFunction BrauerClassFunction::tensor(const BrauerClassFunction& o) const {
  if (group_ != o.group_ || p_ != o.p_)
    throw Error(Error::Kind::domain, "class functions live on different groups");
  BrauerClassFunction out = *this;
  for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] = values_[i] * o.values_[i];
  return out;
}

BrauerClassFunction BrauerClassFunction::dual() const {
  BrauerClassFunction out = *this;
  for (std::size_t i = 0; i < reps_.size(); ++i)
    out.values_[i] = value_at_element(group_->inverse(reps_[i]));
  return out;
}

bool BrauerClassFunction::is_zero() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const Cyclotomic& v) { return v.is_zero(); });
}

bool BrauerClassFunction::operator==(const BrauerClassFunction& o) const {
  return group_ == o.group_ && p_ == o.p_ && values_ == o.values_;
}

std::string BrauerClassFunction::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    if (i) os << ", ";
    os << reps_[i] << ": " << values_[i].to_string();
  }
  os << "}";
  return os.str();
}

BrauerClassFunction induce(const BrauerClassFunction& phi, const Subgroup& h) {
  GroupPtr g = h.parent();
  if (phi.group() != h.group())
    throw Error(Error::Kind::domain, "character does not live on the given subgroup");
  BrauerClassFunction out(g, phi.characteristic());
  std::vector<Cyclotomic> values;
  values.reserve(out.class_reps().size());
  const Rational inv_h(1, h.size());
  for (int rep : out.class_reps()) {
    Cyclotomic sum;
    for (int x = 0; x < g->order(); ++x) {
      int conj = g->mul(g->mul(g->inverse(x), rep), x);
      if (!h.contains(conj)) continue;
      sum += phi.value_at_element(h.to_local(conj));
    }
    values.push_back(inv_h * sum);
  }
  return BrauerClassFunction::from_values(g, phi.characteristic(), std::move(values));
}

BrauerClassFunction restrict_to(const BrauerClassFunction& phi, const Subgroup& h) {
  if (phi.group() != h.parent())
    throw Error(Error::Kind::domain, "subgroup does not sit in the character's group");
  BrauerClassFunction out(h.group(), phi.characteristic());
  std::vector<Cyclotomic> values;
  for (int rep : out.class_reps()) values.push_back(phi.value_at_element(h.to_global(rep)));
  return BrauerClassFunction::from_values(h.group(), phi.characteristic(), std::move(values));
}

BrauerClassFunction inflate(const BrauerClassFunction& phi_on_quotient, GroupPtr group,
                            const std::vector<int>& projection) {
  BrauerClassFunction out(group, phi_on_quotient.characteristic());
  std::vector<Cyclotomic> values;
  for (int rep : out.class_reps())
    values.push_back(phi_on_quotient.value_at_element(projection.at(rep)));
  return BrauerClassFunction::from_values(group, phi_on_quotient.characteristic(),
                                          std::move(values));
}

// ---------------------------------------------------------------------------

namespace {

// All homomorphisms from an abelian group into roots of unity, as value
// vectors indexed by element id. Deterministically ordered.
std::vector<std::vector<Cyclotomic>> abelian_characters(GroupPtr a) {
  const long n = a->order();
  // Greedy generating set: highest order first, then anything new.
  std::vector<int> gens;
  std::vector<bool> in_closure(n, false);
  auto close = [&]() {
    std::fill(in_closure.begin(), in_closure.end(), false);
    std::vector<int> reach{0};
    in_closure[0] = true;
    for (std::size_t i = 0; i < reach.size(); ++i)
      for (int gen : gens) {
        int y = a->mul(reach[i], gen);
        if (!in_closure[y]) {
          in_closure[y] = true;
          reach.push_back(y);
        }
      }
  };
  close();
  while (true) {
    int best = -1;
    for (int x = 0; x < n; ++x)
      if (!in_closure[x] && (best < 0 || a->element_order(x) > a->element_order(best))) best = x;
    if (best < 0) break;
    gens.push_back(best);
    close();
  }
  // Word structure: parent pointers along multiplication by generators.
  std::vector<std::pair<int, int>> word(n, {-1, -1});  // (previous element, generator index)
  std::vector<int> order_of_visit{0};
  for (std::size_t i = 0; i < order_of_visit.size(); ++i)
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      int y = a->mul(order_of_visit[i], gens[gi]);
      if (y != 0 && word[y].first < 0) {
        word[y] = {order_of_visit[i], static_cast<int>(gi)};
        order_of_visit.push_back(y);
      }
    }

  long candidates = 1;
  for (int gen : gens) {
    candidates *= a->element_order(gen);
    if (candidates > 100'000)
      throw Error(Error::Kind::unsupported, "abelian character enumeration too large");
  }

  std::vector<std::vector<Cyclotomic>> result;
  std::vector<long> exps(gens.size(), 0);
  for (long c = 0; c < candidates; ++c) {
    long rem = c;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      long ord = a->element_order(gens[i]);
      exps[i] = rem % ord;
      rem /= ord;
    }
    std::vector<Cyclotomic> gen_values(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i)
      gen_values[i] = Cyclotomic::root_of_unity(a->element_order(gens[i]), exps[i]);
    std::vector<Cyclotomic> values(n);
    values[0] = Cyclotomic(1);
    for (std::size_t i = 1; i < order_of_visit.size(); ++i) {
      int x = order_of_visit[i];
      values[x] = values[word[x].first] * gen_values[word[x].second];
    }
    bool valid = true;
    for (int x = 0; x < n && valid; ++x)
      for (std::size_t gi = 0; gi < gens.size(); ++gi)
        if (values[a->mul(x, gens[gi])] != values[x] * gen_values[gi]) {
          valid = false;
          break;
        }
    if (valid) result.push_back(std::move(values));
  }
  if (static_cast<long>(result.size()) != n)
    throw Error(Error::Kind::construction, "character enumeration failed");
  std::sort(result.begin(), result.end(),
            [](const std::vector<Cyclotomic>& x, const std::vector<Cyclotomic>& y) {
              for (std::size_t i = 0; i < x.size(); ++i) {
                if (x[i] == y[i]) continue;
                return x[i].to_string() < y[i].to_string();
              }
              return false;
            });
  return result;
}

Subgroup p_elements_subgroup(GroupPtr g, long p) {
  std::vector<int> members;
  for (int x = 0; x < g->order(); ++x) {
    long o = g->element_order(x);
    bool p_power = true;
    while (o > 1) {
      if (o % p != 0) {
        p_power = false;
        break;
      }
      o /= p;
    }
    if (p_power) members.push_back(x);
  }
  return Subgroup::from_members(g, std::move(members));
}

}  // namespace

BrauerTable compute_brauer_table(GroupPtr group, long p) {
  check_prime(p);
  BrauerTable table;
  table.group = group;
  table.p = p;
  table.provenance = BrauerTable::Provenance::computed;

  if (group->order() % p != 0) {
    if (!group->is_abelian())
      throw Error(Error::Kind::unsupported,
                  "automatic Brauer tables cover abelian p'-groups and groups with a normal "
                  "Sylow p-subgroup and abelian quotient; supply a table");
    auto chars = abelian_characters(group);
    for (auto& values : chars) {
      std::vector<Cyclotomic> on_reps;
      BrauerClassFunction probe(group, p);
      for (int rep : probe.class_reps()) on_reps.push_back(values[rep]);
      table.rows.push_back(BrauerClassFunction::from_values(group, p, std::move(on_reps)));
    }
    return table;
  }

  Subgroup sylow;
  try {
    sylow = p_elements_subgroup(group, p);
  } catch (const Error&) {
    throw Error(Error::Kind::unsupported,
                "the p-elements do not form a subgroup; supply a Brauer table");
  }
  if (!sylow.is_normal())
    throw Error(Error::Kind::unsupported,
                "no normal Sylow p-subgroup; supply a Brauer table");
  auto [quotient, projection] = quotient_group(group, sylow);
  if (!quotient->is_abelian())
    throw Error(Error::Kind::unsupported,
                "quotient by the Sylow p-subgroup is not abelian; supply a Brauer table");
  auto chars = abelian_characters(quotient);
  for (auto& values : chars) {
    BrauerClassFunction probe(group, p);
    std::vector<Cyclotomic> on_reps;
    for (int rep : probe.class_reps()) on_reps.push_back(values[projection[rep]]);
    table.rows.push_back(BrauerClassFunction::from_values(group, p, std::move(on_reps)));
  }
  if (table.rows.size() != BrauerClassFunction(group, p).class_reps().size())
    throw Error(Error::Kind::construction, "irreducible count mismatch");
  return table;
}

namespace {

// Solve sum_j c_j row_j = fn over the cyclotomic field.
std::optional<std::vector<Cyclotomic>> solve_against_rows(
    const std::vector<BrauerClassFunction>& rows, const BrauerClassFunction& fn) {
  const std::size_t classes = fn.values().size();
  std::vector<std::vector<Cyclotomic>> a(classes, std::vector<Cyclotomic>(rows.size()));
  for (std::size_t j = 0; j < rows.size(); ++j)
    for (std::size_t i = 0; i < classes; ++i) a[i][j] = rows[j].values()[i];
  return detail::solve_linear(
      std::move(a), fn.values(), [](const Cyclotomic& c) { return c.is_zero(); },
      [](const Cyclotomic& x, const Cyclotomic& y) { return x / y; });
}

}  // namespace

BrauerTable user_brauer_table(GroupPtr group, long p,
                              std::vector<std::vector<Cyclotomic>> rows) {
  check_prime(p);
  BrauerTable table;
  table.group = group;
  table.p = p;
  table.provenance = BrauerTable::Provenance::user_supplied;
  const auto reps = group->p_regular_class_reps(p);
  if (rows.size() != reps.size())
    throw Error(Error::Kind::construction,
                "a Brauer table needs exactly one row per p-regular class");
  for (auto& row : rows) {
    auto fn = BrauerClassFunction::from_values(group, p, std::move(row));
    if (!fn.dimension().is_integer_value() || fn.dimension().rational_value() <= 0)
      throw Error(Error::Kind::construction, "table dimensions must be positive integers");
    table.rows.push_back(std::move(fn));
  }
  // Invertibility: every unit vector must be expressible.
  BrauerClassFunction probe(group, p);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    std::vector<Cyclotomic> unit(reps.size());
    unit[i] = Cyclotomic(1);
    auto fn = BrauerClassFunction::from_values(group, p, std::move(unit));
    if (!solve_against_rows(table.rows, fn))
      throw Error(Error::Kind::construction, "table rows are not linearly independent");
  }
  return table;
}

std::optional<std::vector<Rational>> irreducible_coordinates(const BrauerClassFunction& fn,
                                                             const BrauerTable& table) {
  if (fn.group() != table.group || fn.characteristic() != table.p)
    throw Error(Error::Kind::domain, "table and class function live on different groups");
  auto sol = solve_against_rows(table.rows, fn);
  if (!sol) return std::nullopt;
  std::vector<Rational> out;
  out.reserve(sol->size());
  for (const auto& c : *sol) {
    if (!c.is_rational()) return std::nullopt;
    out.push_back(c.rational_value());
  }
  return out;
}

std::optional<BrauerClassFunction> divide_in_k0(const BrauerClassFunction& fn,
                                                const BrauerTable& table, const Integer& n) {
  auto coords = irreducible_coordinates(fn, table);
  if (!coords) return std::nullopt;
  for (const auto& c : *coords) {
    Rational q = c / Rational(n);
    if (!is_integer(q)) return std::nullopt;
  }
  return fn.scaled(Rational(1) / Rational(n));
}

// ---------------------------------------------------------------------------

std::shared_ptr<const ProjectiveBasis> projective_basis(GroupPtr group, long p) {
  check_prime(p);
  auto basis = std::make_shared<ProjectiveBasis>();
  basis->group = group;
  basis->p = p;
  if (group->order() % p != 0) {
    auto table = compute_brauer_table(group, p);
    basis->chars = table.rows;
    for (std::size_t i = 0; i < basis->chars.size(); ++i)
      basis->labels.push_back("irr" + std::to_string(i));
    return basis;
  }
  Subgroup sylow;
  try {
    sylow = p_elements_subgroup(group, p);
  } catch (const Error&) {
    throw Error(Error::Kind::unsupported,
                "the p-elements do not form a subgroup; supply projective characters");
  }
  if (!sylow.is_normal())
    throw Error(Error::Kind::unsupported,
                "no normal Sylow p-subgroup; supply projective characters");
  auto cgen = cyclic_complement_generator(sylow);
  if (!cgen)
    throw Error(Error::Kind::unsupported,
                "no cyclic complement of the Sylow p-subgroup; supply projective characters");
  Subgroup c = Subgroup::generated(group, {*cgen});
  const long t = c.size();
  // chi_j on C sends the designated generator to zeta_t^j; its induction to
  // the whole group is the projective cover of the corresponding simple.
  for (long j = 0; j < t; ++j) {
    BrauerClassFunction chi(c.group(), p);
    std::vector<Cyclotomic> values;
    for (int rep : chi.class_reps()) {
      // rep is a power of the generator inside the cyclic complement
      long e = 0;
      int cur = 0;
      int gen_local = c.to_local(*cgen);
      while (cur != rep) {
        cur = c.group()->mul(cur, gen_local);
        ++e;
        if (e > t) throw Error(Error::Kind::construction, "complement is not cyclic");
      }
      values.push_back(Cyclotomic::root_of_unity(t, j * e));
    }
    auto chi_fn = BrauerClassFunction::from_values(c.group(), p, std::move(values));
    basis->chars.push_back(induce(chi_fn, c));
    basis->labels.push_back("cov" + std::to_string(j));
  }
  return basis;
}

std::shared_ptr<const ProjectiveBasis> user_projective_basis(
    GroupPtr group, long p, std::vector<BrauerClassFunction> chars) {
  auto basis = std::make_shared<ProjectiveBasis>();
  basis->group = group;
  basis->p = p;
  basis->chars = std::move(chars);
  for (std::size_t i = 0; i < basis->chars.size(); ++i) {
    if (basis->chars[i].group() != group)
      throw Error(Error::Kind::construction, "projective character on the wrong group");
    basis->labels.push_back("proj" + std::to_string(i));
  }
  return basis;
}

ProjectiveClass::ProjectiveClass(std::shared_ptr<const ProjectiveBasis> basis,
                                 std::vector<Rational> coords)
    : basis_(std::move(basis)), coords_(std::move(coords)) {
  if (coords_.size() != basis_->chars.size())
    throw Error(Error::Kind::shape, "wrong number of projective coordinates");
}

ProjectiveClass ProjectiveClass::zero(std::shared_ptr<const ProjectiveBasis> basis) {
  std::vector<Rational> coords(basis->chars.size(), Rational(0));
  return ProjectiveClass(std::move(basis), std::move(coords));
}

BrauerClassFunction ProjectiveClass::character() const {
  BrauerClassFunction out(basis_->group, basis_->p);
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    if (coords_[j] == 0) continue;
    out = out + basis_->chars[j].scaled(coords_[j]);
  }
  return out;
}

Rational ProjectiveClass::dimension() const {
  Rational d(0);
  for (std::size_t j = 0; j < coords_.size(); ++j)
    d += coords_[j] * basis_->chars[j].dimension().rational_value();
  return d;
}

bool ProjectiveClass::is_actual_module() const {
  for (const auto& c : coords_)
    if (!is_integer(c) || c < 0) return false;
  return true;
}

ProjectiveClass ProjectiveClass::operator+(const ProjectiveClass& o) const {
  if (basis_ != o.basis_) throw Error(Error::Kind::domain, "projective classes over different bases");
  std::vector<Rational> coords(coords_);
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords_[i];
  return ProjectiveClass(basis_, std::move(coords));
}

ProjectiveClass ProjectiveClass::operator-(const ProjectiveClass& o) const {
  return *this + o.scaled(Rational(-1));
}

ProjectiveClass ProjectiveClass::scaled(const Rational& r) const {
  std::vector<Rational> coords(coords_);
  for (auto& c : coords) c *= r;
  return ProjectiveClass(basis_, std::move(coords));
}

ProjectiveClass ProjectiveClass::dual() const {
  return cartan_preimage(character().dual(), basis_);
}

bool ProjectiveClass::operator==(const ProjectiveClass& o) const {
  return basis_ == o.basis_ && coords_ == o.coords_;
}

std::string ProjectiveClass::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    if (coords_[j] == 0) continue;
    if (!first) os << " + ";
    os << rational_to_string(coords_[j]) << "*" << basis_->labels[j];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

BrauerClassFunction cartan_image(const ProjectiveClass& p) { return p.character(); }

std::optional<ProjectiveClass> projective_coordinates(
    const BrauerClassFunction& fn, std::shared_ptr<const ProjectiveBasis> basis) {
  auto sol = solve_against_rows(basis->chars, fn);
  if (!sol) return std::nullopt;
  std::vector<Rational> coords;
  for (const auto& c : *sol) {
    if (!c.is_rational()) return std::nullopt;
    coords.push_back(c.rational_value());
  }
  // The solver leaves free variables at zero; verify exactness.
  ProjectiveClass candidate(basis, std::move(coords));
  if (candidate.character() != fn) return std::nullopt;
  return candidate;
}

ProjectiveClass cartan_preimage(const BrauerClassFunction& fn,
                                std::shared_ptr<const ProjectiveBasis> basis) {
  auto candidate = projective_coordinates(fn, basis);
  if (!candidate)
    throw Error(Error::Kind::domain, "not in the image of the Cartan homomorphism");
  for (const auto& c : candidate->coordinates())
    if (!is_integer(c))
      throw Error(Error::Kind::domain, "not in the image of the Cartan homomorphism");
  return *candidate;
}

std::optional<ProjectiveClass> divide_projective(const ProjectiveClass& p, const Integer& n) {
  std::vector<Rational> coords;
  for (const auto& c : p.coordinates()) {
    Rational q = c / Rational(n);
    if (!is_integer(q)) return std::nullopt;
    coords.push_back(q);
  }
  return ProjectiveClass(p.basis(), std::move(coords));
}

ProjectiveClass projective_cover(const BrauerClassFunction& chi_on_c, const Subgroup& c_in_h) {
  if (chi_on_c.group() != c_in_h.group())
    throw Error(Error::Kind::domain, "character does not live on the complement");
  if (!(chi_on_c.dimension() == Cyclotomic(1)))
    throw Error(Error::Kind::domain, "projective covers are taken of one-dimensional characters");
  GroupPtr h = c_in_h.parent();
  const long p = chi_on_c.characteristic();
  Subgroup sylow = p_elements_subgroup(h, p);
  if (sylow.size() > 1) {
    InertiaReport report = validate_wild_inertia(sylow, p);
    if (!report.conjugation_free)
      throw Error(Error::Kind::domain,
                  "the complement must act freely on the nontrivial elements of the "
                  "normal p-subgroup");
  }
  if (sylow.size() * c_in_h.size() != h->order())
    throw Error(Error::Kind::domain, "subgroup is not a complement of the p-part");
  return cartan_preimage(induce(chi_on_c, c_in_h), projective_basis(h, p));
}

}  // namespace equichar
