#include "equichar/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "equichar/finite_field.hpp"

namespace equichar {

CayleyGroup::CayleyGroup(std::vector<int> table, long n) : n_(n), table_(std::move(table)) {
  inv_.assign(n_, -1);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) == 0) inv_[a] = b;
  for (int a = 0; a < n_; ++a)
    if (inv_[a] < 0) throw Error(Error::Kind::construction, "element without inverse");
  order_.assign(n_, 0);
  for (int a = 0; a < n_; ++a) {
    long k = 1;
    int cur = a;
    while (cur != 0) {
      cur = mul(cur, a);
      ++k;
      if (k > n_) throw Error(Error::Kind::construction, "element order exceeds group order");
    }
    order_[a] = k;
  }
  abelian_ = true;
  for (int a = 0; a < n_ && abelian_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) {
        abelian_ = false;
        break;
      }
}

void CayleyGroup::ensure_classes() const {
  std::call_once(classes_once_, [this]() {
    class_index_.assign(n_, -1);
    if (abelian_) {
      class_reps_.resize(n_);
      std::iota(class_reps_.begin(), class_reps_.end(), 0);
      class_sizes_.assign(n_, 1);
      std::iota(class_index_.begin(), class_index_.end(), 0);
      return;
    }
    for (int a = 0; a < n_; ++a) {
      if (class_index_[a] >= 0) continue;
      int idx = static_cast<int>(class_reps_.size());
      class_reps_.push_back(a);
      long size = 0;
      for (int g = 0; g < n_; ++g) {
        int c = conjugate(g, a);
        if (class_index_[c] < 0) {
          class_index_[c] = idx;
          ++size;
        }
      }
      class_sizes_.push_back(size);
    }
  });
}

int CayleyGroup::power(int a, long e) const {
  e = mod_nonneg(e, order_[a]);
  int acc = 0;
  int base = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::vector<int> CayleyGroup::p_regular_class_reps(long p) const {
  ensure_classes();
  std::vector<int> out;
  for (int rep : class_reps_)
    if (element_order(rep) % p != 0) out.push_back(rep);
  return out;
}

std::shared_ptr<const CayleyGroup> CayleyGroup::from_table(std::vector<int> table) {
  const long n2 = static_cast<long>(table.size());
  long n = 0;
  while (n * n < n2) ++n;
  if (n * n != n2 || n == 0)
    throw Error(Error::Kind::construction, "multiplication table is not square");
  if (n > 512)
    throw Error(Error::Kind::construction, "user-supplied tables are capped at order 512");
  auto at = [&](int a, int b) { return table[static_cast<std::size_t>(a) * n + b]; };
  for (long i = 0; i < n2; ++i)
    if (table[i] < 0 || table[i] >= n)
      throw Error(Error::Kind::construction, "table entry out of range");
  for (int a = 0; a < n; ++a) {
    if (at(0, a) != a || at(a, 0) != a)
      throw Error(Error::Kind::construction, "element 0 must be the identity");
    std::vector<bool> seen_row(n, false), seen_col(n, false);
    for (int b = 0; b < n; ++b) {
      if (seen_row[at(a, b)] || seen_col[at(b, a)])
        throw Error(Error::Kind::construction, "table is not a Latin square");
      seen_row[at(a, b)] = true;
      seen_col[at(b, a)] = true;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c)))
          throw Error(Error::Kind::construction, "multiplication table is not associative");
  return std::shared_ptr<const CayleyGroup>(new CayleyGroup(std::move(table), n));
}

std::shared_ptr<const CayleyGroup> CayleyGroup::cyclic(long n) {
  if (n < 1 || n > kMaxOrder) throw Error(Error::Kind::construction, "order out of range");
  std::vector<int> table(n * n);
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) table[a * n + b] = static_cast<int>((a + b) % n);
  return std::shared_ptr<const CayleyGroup>(new CayleyGroup(std::move(table), n));
}

namespace {

long power_long(long p, long a) {
  long out = 1;
  for (long i = 0; i < a; ++i) {
    out *= p;
    if (out > CayleyGroup::kMaxOrder) throw Error(Error::Kind::construction, "order out of range");
  }
  return out;
}

// Digit vector of u in base p, length a.
std::vector<long> digits(long u, long p, long a) {
  std::vector<long> d(a);
  for (long i = 0; i < a; ++i) {
    d[i] = u % p;
    u /= p;
  }
  return d;
}

long undigits(const std::vector<long>& d, long p) {
  long u = 0;
  for (std::size_t i = d.size(); i-- > 0;) u = u * p + mod_nonneg(d[i], p);
  return u;
}

}  // namespace

std::shared_ptr<const CayleyGroup> CayleyGroup::elementary_abelian(long p, long a) {
  if (!is_prime(p)) throw Error(Error::Kind::construction, "p must be prime");
  long q = power_long(p, a);
  std::vector<int> table(q * q);
  for (long u = 0; u < q; ++u)
    for (long v = 0; v < q; ++v) {
      auto du = digits(u, p, a), dv = digits(v, p, a);
      for (long i = 0; i < a; ++i) du[i] = (du[i] + dv[i]) % p;
      table[u * q + v] = static_cast<int>(undigits(du, p));
    }
  return std::shared_ptr<const CayleyGroup>(new CayleyGroup(std::move(table), q));
}

std::shared_ptr<const CayleyGroup> CayleyGroup::semidirect_pc(
    long p, long a, long t, const std::vector<std::vector<long>>& action) {
  if (!is_prime(p)) throw Error(Error::Kind::construction, "p must be prime");
  if (t < 1) throw Error(Error::Kind::construction, "t must be positive");
  long q = power_long(p, a);
  if (q * t > kMaxOrder) throw Error(Error::Kind::construction, "order out of range");
  if (static_cast<long>(action.size()) != a)
    throw Error(Error::Kind::construction, "action matrix has wrong size");
  for (const auto& row : action)
    if (static_cast<long>(row.size()) != a)
      throw Error(Error::Kind::construction, "action matrix has wrong size");

  auto apply = [&](const std::vector<std::vector<long>>& m, long u) {
    auto d = digits(u, p, a);
    std::vector<long> out(a, 0);
    for (long i = 0; i < a; ++i)
      for (long j = 0; j < a; ++j) out[i] = (out[i] + m[i][j] * d[j]) % p;
    return undigits(out, p);
  };
  auto mat_mul = [&](const std::vector<std::vector<long>>& x,
                     const std::vector<std::vector<long>>& y) {
    std::vector<std::vector<long>> z(a, std::vector<long>(a, 0));
    for (long i = 0; i < a; ++i)
      for (long k = 0; k < a; ++k)
        for (long j = 0; j < a; ++j) z[i][j] = (z[i][j] + x[i][k] * y[k][j]) % p;
    return z;
  };

  // Powers of the action; the order of the matrix must divide t, and the
  // matrix must be invertible (power t returns to the identity).
  std::vector<std::vector<std::vector<long>>> powers(t);
  std::vector<std::vector<long>> id(a, std::vector<long>(a, 0));
  for (long i = 0; i < a; ++i) id[i][i] = 1;
  powers[0] = id;
  for (long c = 1; c < t; ++c) powers[c] = mat_mul(powers[c - 1], action);
  if (mat_mul(powers[t - 1], action) != id)
    throw Error(Error::Kind::construction, "action order does not divide t (or is singular)");

  long n = q * t;
  std::vector<int> table(n * n);
  auto ident = [&](long u, long c) { return c * q + u; };
  for (long c1 = 0; c1 < t; ++c1)
    for (long u1 = 0; u1 < q; ++u1)
      for (long c2 = 0; c2 < t; ++c2)
        for (long u2 = 0; u2 < q; ++u2) {
          long moved = apply(powers[c1], u2);
          auto d1 = digits(u1, p, a), dm = digits(moved, p, a);
          for (long i = 0; i < a; ++i) d1[i] = (d1[i] + dm[i]) % p;
          table[static_cast<std::size_t>(ident(u1, c1)) * n + ident(u2, c2)] =
              static_cast<int>(ident(undigits(d1, p), (c1 + c2) % t));
        }

  auto g = std::shared_ptr<CayleyGroup>(new CayleyGroup(std::move(table), n));
  SemidirectInfo info;
  info.p = p;
  info.a = a;
  info.t = t;
  for (long u = 0; u < q; ++u) info.p_part.push_back(static_cast<int>(u));
  for (long c = 0; c < t; ++c) info.c_part.push_back(static_cast<int>(c * q));
  info.c_generator = static_cast<int>(q % n);
  info.free_action = true;
  for (long c = 1; c < t && info.free_action; ++c)
    for (long u = 1; u < q; ++u)
      if (apply(powers[c], u) == u) {
        info.free_action = false;
        break;
      }
  g->sd_ = info;
  return g;
}

std::shared_ptr<const CayleyGroup> CayleyGroup::semidirect_pc_free(long p, long a, long t) {
  long q = power_long(p, a);
  if ((q - 1) % t != 0)
    throw Error(Error::Kind::construction,
                "free action requires t | p^a - 1 (got t=" + std::to_string(t) + ")");
  if (t == 1) {
    std::vector<std::vector<long>> id(a, std::vector<long>(a, 0));
    for (long i = 0; i < a; ++i) id[i][i] = 1;
    return semidirect_pc(p, a, 1, id);
  }
  auto field = FiniteField::get(p, a);
  FiniteField::Elt omega = field->root_of_unity(t);
  // Matrix of multiplication by omega over the polynomial basis of F_{p^a}.
  std::vector<std::vector<long>> m(a, std::vector<long>(a, 0));
  for (long j = 0; j < a; ++j) {
    long basis = 1;
    for (long i = 0; i < j; ++i) basis *= p;  // code of x^j
    FiniteField::Elt image = field->mul(omega, static_cast<FiniteField::Elt>(basis));
    auto d = digits(image, p, a);
    for (long i = 0; i < a; ++i) m[i][j] = d[i];
  }
  return semidirect_pc(p, a, t, m);
}

// ---------------------------------------------------------------------------

void Subgroup::materialize() {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  to_local_.assign(parent_->order(), -1);
  for (std::size_t i = 0; i < members_.size(); ++i) to_local_[members_[i]] = static_cast<int>(i);
  if (members_.empty() || members_[0] != 0)
    throw Error(Error::Kind::construction, "subgroup must contain the identity");
  const long m = static_cast<long>(members_.size());
  std::vector<int> table(m * m);
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < m; ++j) {
      int prod = parent_->mul(members_[i], members_[j]);
      int local = to_local_[prod];
      if (local < 0)
        throw Error(Error::Kind::construction, "set is not closed under multiplication");
      table[i * m + j] = local;
    }
  local_ = std::shared_ptr<const CayleyGroup>(new CayleyGroup(std::move(table), m));
}

Subgroup Subgroup::whole(GroupPtr g) {
  Subgroup s;
  s.parent_ = g;
  s.members_.resize(g->order());
  std::iota(s.members_.begin(), s.members_.end(), 0);
  s.materialize();
  return s;
}

Subgroup Subgroup::trivial(GroupPtr g) {
  Subgroup s;
  s.parent_ = g;
  s.members_ = {0};
  s.materialize();
  return s;
}

Subgroup Subgroup::from_members(GroupPtr g, std::vector<int> members) {
  Subgroup s;
  s.parent_ = std::move(g);
  for (int m : members)
    if (m < 0 || m >= s.parent_->order())
      throw Error(Error::Kind::construction, "subgroup member out of range");
  s.members_ = std::move(members);
  s.materialize();
  return s;
}

Subgroup Subgroup::generated(GroupPtr g, const std::vector<int>& generators) {
  std::set<int> closure{0};
  std::vector<int> queue{0};
  for (int gen : generators)
    if (closure.insert(gen).second) queue.push_back(gen);
  while (!queue.empty()) {
    int x = queue.back();
    queue.pop_back();
    for (int gen : generators) {
      for (int y : {g->mul(x, gen), g->mul(gen, x), g->inverse(x)}) {
        if (closure.insert(y).second) queue.push_back(y);
      }
    }
  }
  return from_members(g, std::vector<int>(closure.begin(), closure.end()));
}

int Subgroup::to_local(int gid) const {
  int l = to_local_[gid];
  if (l < 0) throw Error(Error::Kind::domain, "element not in subgroup");
  return l;
}

bool Subgroup::is_normal() const {
  for (int g = 0; g < parent_->order(); ++g)
    for (int m : members_)
      if (!contains(parent_->conjugate(g, m))) return false;
  return true;
}

bool Subgroup::is_normal_in(const Subgroup& bigger) const {
  for (int g : bigger.members())
    for (int m : members_)
      if (!contains(parent_->conjugate(g, m))) return false;
  return true;
}

Subgroup Subgroup::intersect(const Subgroup& other) const {
  if (parent_ != other.parent_)
    throw Error(Error::Kind::domain, "intersection of subgroups of different groups");
  std::vector<int> common;
  for (int m : members_)
    if (other.contains(m)) common.push_back(m);
  return from_members(parent_, std::move(common));
}

Subgroup Subgroup::conjugate_by(int g) const {
  std::vector<int> conj;
  conj.reserve(members_.size());
  for (int m : members_) conj.push_back(parent_->conjugate(g, m));
  return from_members(parent_, std::move(conj));
}

std::vector<int> double_coset_representatives(const CayleyGroup& g, const Subgroup& h,
                                              const Subgroup& k) {
  std::vector<bool> seen(g.order(), false);
  std::vector<int> reps;
  for (int x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    reps.push_back(x);
    for (int a : h.members())
      for (int b : k.members()) seen[g.mul(g.mul(a, x), b)] = true;
  }
  return reps;
}

std::pair<GroupPtr, std::vector<int>> quotient_group(GroupPtr g, const Subgroup& normal) {
  if (!normal.is_normal()) throw Error(Error::Kind::domain, "subgroup is not normal");
  const long n = g->order();
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (coset_of[x] >= 0) continue;
    int idx = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int m : normal.members()) coset_of[g->mul(x, m)] = idx;
  }
  const long q = static_cast<long>(reps.size());
  std::vector<int> table(q * q);
  for (long i = 0; i < q; ++i)
    for (long j = 0; j < q; ++j) table[i * q + j] = coset_of[g->mul(reps[i], reps[j])];
  auto quotient = std::shared_ptr<const CayleyGroup>(new CayleyGroup(std::move(table), q));
  return {quotient, coset_of};
}

std::vector<Subgroup> all_subgroups(GroupPtr g) {
  if (g->order() > 128)
    throw Error(Error::Kind::unsupported, "subgroup enumeration is limited to order <= 128");
  std::set<std::vector<int>> known;
  std::vector<Subgroup> out;
  auto add = [&](Subgroup s) {
    if (known.insert(s.members()).second) out.push_back(std::move(s));
  };
  add(Subgroup::trivial(g));
  for (int x = 1; x < g->order(); ++x) add(Subgroup::generated(g, {x}));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Subgroup> snapshot = out;
    for (const auto& a : snapshot)
      for (const auto& b : snapshot) {
        if (a.members().size() == 1 || b.members().size() == 1) continue;
        std::vector<int> gens = a.members();
        gens.insert(gens.end(), b.members().begin(), b.members().end());
        Subgroup joined = Subgroup::generated(g, gens);
        if (!known.count(joined.members())) {
          add(std::move(joined));
          grew = true;
        }
      }
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& x, const Subgroup& y) {
    if (x.members().size() != y.members().size()) return x.members().size() < y.members().size();
    return x.members() < y.members();
  });
  return out;
}

InertiaReport validate_wild_inertia(const Subgroup& wild, long p) {
  const GroupPtr gp = wild.parent();
  if (!wild.is_normal())
    throw Error(Error::Kind::domain, "wild inertia subgroup must be normal");
  InertiaReport report;
  report.e = gp->order();
  report.e_wild = wild.size();
  report.e_tame = gp->order() / wild.size();

  report.wild_elementary_abelian = wild.group()->is_abelian();
  for (int m : wild.members())
    if (m != 0 && gp->element_order(m) != p) report.wild_elementary_abelian = false;

  auto [quotient, projection] = quotient_group(gp, wild);
  report.quotient_order_prime_to_p = quotient->order() % p != 0;
  report.quotient_cyclic = false;
  for (int x = 0; x < quotient->order(); ++x)
    if (quotient->element_order(x) == quotient->order()) {
      report.quotient_cyclic = true;
      break;
    }

  // Freeness of the conjugation action of the quotient on wild \ {1}:
  // no coset outside the wild part may centralize a nontrivial wild element.
  report.conjugation_free = true;
  std::vector<bool> coset_checked(quotient->order(), false);
  for (int g = 0; g < gp->order() && report.conjugation_free; ++g) {
    int coset = projection[g];
    if (coset == projection[0] || coset_checked[coset]) continue;
    coset_checked[coset] = true;
    for (int m : wild.members()) {
      if (m == 0) continue;
      if (gp->conjugate(g, m) == m) {
        report.conjugation_free = false;
        break;
      }
    }
  }

  report.congruence_holds = report.e_tame == 0 ? false : (report.e_wild - 1) % report.e_tame == 0;
  return report;
}

std::optional<int> cyclic_complement_generator(const Subgroup& normal) {
  const GroupPtr g = normal.parent();
  const long t = g->order() / normal.size();
  for (int c = 0; c < g->order(); ++c) {
    if (g->element_order(c) != t) continue;
    // <c> must meet the normal subgroup trivially.
    bool clean = true;
    int cur = c;
    while (cur != 0) {
      if (normal.contains(cur)) {
        clean = false;
        break;
      }
      cur = g->mul(cur, c);
    }
    if (clean) return c;
  }
  return std::nullopt;
}

}  // namespace equichar
