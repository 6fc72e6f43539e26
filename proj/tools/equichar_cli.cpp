// Command-line front end: loads cover-description files, dispatches the
// library computations and prints human- or machine-readable reports.
//
// Exit codes: 0 on success, 1 when a verdict fails, 2 on invalid input or
// violated hypotheses.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "equichar/cover_io.hpp"
#include "equichar/euler.hpp"
#include "equichar/local.hpp"
#include "equichar/oracle.hpp"

using namespace equichar;
using nlohmann::json;

namespace {

struct Report {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  struct Verdict {
    std::string name;
    bool pass = false;
    std::string detail;
  };
  std::vector<Verdict> verdicts;

  void verdict(const std::string& name, bool pass, const std::string& detail = "") {
    verdicts.push_back({name, pass, detail});
  }
  bool ok() const {
    for (const auto& v : verdicts)
      if (!v.pass) return false;
    return true;
  }
  json to_json() const {
    json jv = json::array();
    for (const auto& v : verdicts)
      jv.push_back(json{{"name", v.name}, {"pass", v.pass}, {"detail", v.detail}});
    return json{{"command", command},
                {"inputs", inputs},
                {"results", results},
                {"verdicts", jv},
                {"status", ok() ? "ok" : "verdict-failure"}};
  }
  void print(bool as_json) const {
    if (as_json) {
      std::cout << to_json().dump(2) << "\n";
      return;
    }
    std::cout << "== " << command << " ==\n";
    if (!inputs.empty()) std::cout << "inputs: " << inputs.dump() << "\n";
    for (auto it = results.begin(); it != results.end(); ++it)
      std::cout << it.key() << ": "
                << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump())
                << "\n";
    for (const auto& v : verdicts)
      std::cout << "[" << (v.pass ? "PASS" : "FAIL") << "] " << v.name
                << (v.detail.empty() ? "" : ": " + v.detail) << "\n";
  }
};

std::string class_to_text(const BrauerClassFunction& fn) { return fn.to_string(); }

json class_to_json_full(const BrauerClassFunction& fn) { return class_function_to_json(fn); }

json projective_to_json(const ProjectiveClass& cls) {
  json coords = json::array();
  for (const auto& c : cls.coordinates()) coords.push_back(rational_to_string(c));
  return json{{"coordinates", coords},
              {"labels", cls.basis()->labels},
              {"character", class_to_json_full(cls.character())},
              {"dimension", rational_to_string(cls.dimension())},
              {"actual_module", cls.is_actual_module()}};
}

EquivariantSheafData pick_sheaf(const CoverFile& file, const std::string& sheaf_name,
                                const std::string& divisor_name) {
  if (!sheaf_name.empty()) {
    auto it = file.sheaves.find(sheaf_name);
    if (it == file.sheaves.end())
      throw Error(Error::Kind::domain, "no sheaf named '" + sheaf_name + "' in the file");
    return it->second;
  }
  if (!divisor_name.empty()) {
    auto it = file.divisors.find(divisor_name);
    if (it == file.divisors.end())
      throw Error(Error::Kind::domain, "no divisor named '" + divisor_name + "' in the file");
    return divisor_to_sheaf(file.cover, it->second);
  }
  return structure_sheaf(file.cover);
}

const EquivariantDivisor& pick_divisor(const CoverFile& file, const std::string& name) {
  auto it = file.divisors.find(name);
  if (it == file.divisors.end())
    throw Error(Error::Kind::domain, "no divisor named '" + name + "' in the file");
  return it->second;
}

std::vector<long> parse_filtration(const std::string& text) {
  std::vector<long> orders;
  std::string current;
  for (char c : text + ",") {
    if (c == ',') {
      if (!current.empty()) orders.push_back(std::stol(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (orders.empty()) throw Error(Error::Kind::parse, "empty filtration");
  return orders;
}

std::pair<long, long> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos)
    throw Error(Error::Kind::parse, "range must look like a..b");
  long lo = std::stol(text.substr(0, dots));
  long hi = std::stol(text.substr(dots + 2));
  if (lo > hi) throw Error(Error::Kind::parse, "empty range");
  return {lo, hi};
}

StableSet parse_stable_set(const std::string& orbits, long unramified) {
  StableSet s;
  std::string current;
  for (char c : orbits + ",") {
    if (c == ',') {
      if (!current.empty()) s.orbit_names.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  s.unramified_points = unramified;
  return s;
}

// ---------------------------------------------------------------------------

int run_euler(const std::string& path, const std::string& sheaf_name,
              const std::string& divisor_name, bool as_json) {
  CoverFile file = load_cover_file(path);
  EquivariantSheafData sheaf = pick_sheaf(file, sheaf_name, divisor_name);
  Report report;
  report.command = "euler";
  report.inputs = {{"cover", path}, {"rank", sheaf.rank}, {"degree", sheaf.degree}};
  BrauerClassFunction chi = euler_characteristic(file.cover, sheaf);
  report.results["class"] = class_to_text(chi);
  report.results["class_values"] = class_to_json_full(chi);
  long rr = riemann_roch_dim(file.cover, sheaf);
  report.results["riemann_roch_dimension"] = rr;
  report.verdict("dimension-identity", chi.dimension() == Cyclotomic(rr),
                 "identity value vs (1-g)r + deg");
  if (file.table) {
    auto coords = irreducible_coordinates(chi, *file.table);
    if (coords) {
      json jc = json::array();
      for (const auto& c : *coords) jc.push_back(rational_to_string(c));
      report.results["irreducible_coordinates"] = jc;
    }
  }
  report.print(as_json);
  return report.ok() ? 0 : 1;
}

int run_n_module(const std::string& path, bool as_json) {
  CoverFile file = load_cover_file(path);
  Report report;
  report.command = "n-module";
  report.inputs = {{"cover", path}};
  auto basis = projective_basis(file.cover.group, file.cover.p);
  ProjectiveClass n = canonical_projective(file.cover, basis);
  report.results["N"] = n.to_string();
  report.results["N_data"] = projective_to_json(n);
  report.verdict("canonical-projective-divisibility", true,
                 "the defining relation divides by |G| in K0(k[G])");
  report.print(as_json);
  return report.ok() ? 0 : 1;
}

int run_euler_projective(const std::string& path, const std::string& divisor_name, bool as_json) {
  CoverFile file = load_cover_file(path);
  const EquivariantDivisor& d = pick_divisor(file, divisor_name);
  Report report;
  report.command = "euler-projective";
  report.inputs = {{"cover", path}, {"divisor", divisor_to_json(d)}};
  auto basis = projective_basis(file.cover.group, file.cover.p);
  ProjectiveClass chi = euler_projective(file.cover, d, basis);
  report.results["class"] = chi.to_string();
  report.results["class_data"] = projective_to_json(chi);
  BrauerClassFunction weak = euler_characteristic(file.cover, divisor_to_sheaf(file.cover, d));
  report.verdict("cartan-consistency", cartan_image(chi) == weak,
                 "projective class maps to the rational Euler class");
  report.print(as_json);
  return report.ok() ? 0 : 1;
}

int run_ideal_sheaf(const std::string& path, const StableSet& s, bool as_json) {
  CoverFile file = load_cover_file(path);
  Report report;
  report.command = "ideal-sheaf";
  report.inputs = {{"cover", path},
                   {"orbits", s.orbit_names},
                   {"unramified_points", s.unramified_points}};
  auto basis = projective_basis(file.cover.group, file.cover.p);
  IdealSheafResult res = ideal_sheaf_h1(file.cover, s, basis);
  report.results["h1_class"] = res.h1_class.to_string();
  report.results["h1_data"] = projective_to_json(res.h1_class);
  report.results["precise_form"] = res.precise_left.to_string();
  report.verdict("h1-plus-regular-is-actual", res.actual_module,
                 "H^1 + k[G] has non-negative integral coordinates");
  report.print(as_json);
  return report.ok() ? 0 : 1;
}

int run_log_differentials(const std::string& path, const StableSet& s, bool as_json) {
  CoverFile file = load_cover_file(path);
  Report report;
  report.command = "log-differentials";
  report.inputs = {{"cover", path},
                   {"orbits", s.orbit_names},
                   {"unramified_points", s.unramified_points}};
  auto basis = projective_basis(file.cover.group, file.cover.p);
  LogDifferentialsResult res = log_differentials_class(file.cover, s, basis);
  report.results["h0_class"] = res.h0_class.to_string();
  report.results["h0_data"] = projective_to_json(res.h0_class);
  report.results["free_rank"] = res.free_rank;
  ProjectiveClass n = canonical_projective(file.cover, basis);
  ProjectiveClass regular =
      cartan_preimage(BrauerClassFunction::regular(file.cover.group, file.cover.p), basis);
  report.verdict("log-differentials-freeness",
                 res.h0_class + n == regular.scaled(Rational(res.free_rank)),
                 "H^0(Omega(S)) + N is free of rank |S/G| + g_Y - 1");
  report.verdict("duality-identity", duality_identity_check(file.cover, s, basis),
                 "N* + sum Cov(chi^0)* + N is free of rank |S/G|");
  report.print(as_json);
  return report.ok() ? 0 : 1;
}

int run_local_free(const std::string& filtration, const std::string& range, long single_b,
                   bool has_single, bool as_json) {
  LocalExtensionData ext{parse_filtration(filtration), 0};
  // residue characteristic: the prime dividing |G_1| (or any prime if tame)
  long g1 = ext.filtration_orders.size() > 2 ? ext.filtration_orders[2] : 1;
  if (g1 > 1) {
    ext.p = prime_factors_of(g1)[0];
  } else {
    long g0 = ext.filtration_orders.size() > 1 ? ext.filtration_orders[1] : 1;
    ext.p = 2;
    while (g0 % ext.p == 0) ext.p = ext.p == 2 ? 3 : ext.p + 2;  // any prime not dividing e
    while (!is_prime(ext.p) || g0 % ext.p == 0) ++ext.p;
  }
  ext.validate();

  Report report;
  report.command = "local-free";
  report.inputs = {{"filtration", ext.filtration_orders}, {"p", ext.p}};
  json table = json::array();
  long lo = single_b, hi = single_b;
  if (!has_single) {
    auto [l, h] = parse_range(range);
    lo = l;
    hi = h;
  }
  std::vector<long> free_at;
  bool comparison_applicable =
      ext.group_order() == ext.p && ext.ramification_index() == ext.p && ext.order_at(1) > 1;
  bool comparison_ok = true;
  for (long b = lo; b <= hi; ++b) {
    bool free = decide_free(ext, b);
    json row{{"b", b}, {"free", free}};
    if (comparison_applicable && ext.weakly_ramified()) {
      bool surj = surjectivity_of_trace(ext, b);
      row["trace_surjective"] = surj;
      comparison_ok = comparison_ok && (surj == free);
    }
    table.push_back(row);
    if (free) free_at.push_back(b);
  }
  report.results["table"] = table;
  report.results["free_at"] = free_at;
  if (comparison_applicable && ext.weakly_ramified())
    report.verdict("trace-surjectivity-comparison", comparison_ok,
                   "freeness agrees with trace surjectivity");
  report.print(as_json);
  return report.ok() ? 0 : 1;
}

void verify_explicit(const ExplicitCover& cover, Report& report) {
  const CoverDescription& derived = cover.derived();
  long p = cover.characteristic();

  if (cover.kind() == ExplicitKind::artin_schreier) {
    long r = cover.parameter();
    bool jumps_ok = true;
    for (int c = 1; c < derived.group->order(); ++c)
      jumps_ok = jumps_ok && cover.measure_jump(c) == r;
    report.verdict("jump-measurement", jumps_ok, "measured jump equals r");
    report.verdict("genus-formula", cover.genus() == (r - 1) * (p - 1) / 2,
                   "genus equals (r-1)(p-1)/2");
  } else {
    report.verdict("genus-formula", cover.genus() == genus_upstairs(derived),
                   "model genus is Hurwitz-consistent");
  }

  // The closed Euler formula against section spaces, over a degree window.
  bool euler_ok = true;
  long g = cover.genus();
  for (long deg = 2 * g - 1; deg <= 2 * g + 6 && euler_ok; ++deg) {
    OracleDivisor d;
    const std::string& name = derived.orbits[0].name;
    d.ramified[name] = deg;  // orbit 0 has one point in all three families
    BrauerClassFunction lhs = cover.oracle_euler(d);
    BrauerClassFunction rhs =
        euler_characteristic(derived, divisor_to_sheaf(derived, d.to_abstract()));
    euler_ok = lhs == rhs;
  }
  report.verdict("euler-vs-model", euler_ok, "closed formula equals section-space class");

  if (cover.kind() == ExplicitKind::artin_schreier) {
    long r = cover.parameter();
    bool equivalence_ok = true;
    for (long n = std::max(0L, 2 * g - 1); n <= 2 * g + 6; ++n) {
      ModuleDecomposition dec = cover.decompose(cover.h0_space({{{"infty", n}}, {}}));
      bool expected = (r == 1) && mod_nonneg(n + 1, p) == 0;
      equivalence_ok = equivalence_ok && dec.projective == expected;
    }
    report.verdict("projectivity-equivalence", equivalence_ok,
                   "sections projective iff weakly ramified and n = -1 mod e^w");
  }

  if (classify_ramification(derived) != Ramification::wild) {
    auto basis = projective_basis(derived.group, p);
    ProjectiveClass n_module = canonical_projective(derived, basis);
    report.verdict("canonical-projective-divisibility", true,
                   "N exists; dim N = " + rational_to_string(n_module.dimension()));
    bool cartan_ok = true;
    for (long step = 0; step <= 2 && cartan_ok; ++step) {
      EquivariantDivisor d;
      for (const auto& o : derived.orbits) {
        RamificationInvariants inv = o.invariants();
        d.ramified[o.name] = inv.e_wild - 1 + step * inv.e_wild;
      }
      ProjectiveClass integral = euler_projective(derived, d, basis);
      cartan_ok = cartan_image(integral) == euler_characteristic(derived, divisor_to_sheaf(derived, d));
    }
    report.verdict("cartan-consistency", cartan_ok,
                   "integral classes map onto the rational Euler classes");
    StableSet s;
    for (const auto& o : derived.orbits) s.orbit_names.push_back(o.name);
    if (!s.orbit_names.empty()) {
      LogDifferentialsResult log_res = log_differentials_class(derived, s, basis);
      SectionSpace omega = cover.omega_space(s.orbit_names);
      ModuleDecomposition dec = cover.decompose(omega);
      bool match = dec.projective && dec.projective_class &&
                   *dec.projective_class == log_res.h0_class;
      report.verdict("log-differentials-vs-model", match,
                     "differential sections match the projective class");
      report.verdict("duality-identity", duality_identity_check(derived, s, basis), "");
    }
  }
}

int run_oracle(const std::string& family, long p, long r, long m, bool verify,
               const std::string& emit, bool as_json) {
  ExplicitCover cover = [&]() {
    if (family == "artin-schreier") return ExplicitCover::artin_schreier(p, r);
    if (family == "kummer") return ExplicitCover::kummer(m, p);
    if (family == "affine") return ExplicitCover::affine(p);
    throw Error(Error::Kind::parse, "unknown family '" + family + "'");
  }();
  Report report;
  report.command = "oracle " + family;
  report.inputs = {{"p", p}};
  if (family == "artin-schreier") report.inputs["r"] = r;
  if (family == "kummer") report.inputs["m"] = m;
  report.results["group_order"] = cover.derived().group->order();
  report.results["genus"] = cover.genus();
  report.results["ramification"] = to_string(classify_ramification(cover.derived()));
  if (verify) verify_explicit(cover, report);
  if (!emit.empty()) {
    CoverFile file;
    file.cover = cover.derived();
    save_cover_file(file, emit);
    CoverFile back = load_cover_file(emit);
    report.verdict("emit-roundtrip", covers_structurally_equal(back.cover, file.cover),
                   "emitted file reloads to an equal cover");
    report.results["emitted"] = emit;
  }
  report.print(as_json);
  return report.ok() ? 0 : 1;
}

int run_check(const std::string& path, bool as_json) {
  CoverFile file = load_cover_file(path);
  const CoverDescription& cover = file.cover;
  Report report;
  report.command = "check";
  report.inputs = {{"cover", path}};
  report.results["group_order"] = cover.group->order();
  report.results["genus"] = genus_upstairs(cover);
  Ramification level = classify_ramification(cover);
  report.results["ramification"] = to_string(level);

  // Hurwitz / validation already ran on load.
  report.verdict("cover-validation", true, "schema and structural invariants hold");

  if (level == Ramification::weakly_ramified) {
    bool inertia_ok = true;
    for (const auto& o : cover.orbits) {
      if (o.invariants().e_wild == 1) continue;
      std::vector<int> wild_local;
      for (int gid : o.filtration[1].members())
        wild_local.push_back(o.decomposition.to_local(gid));
      Subgroup wild = Subgroup::from_members(o.decomposition.group(), wild_local);
      inertia_ok = inertia_ok && validate_wild_inertia(wild, cover.p).all_pass();
    }
    report.verdict("inertia-structure", inertia_ok,
                   "wild inertia elementary abelian with free cyclic tame action");
  }

  EquivariantSheafData o = structure_sheaf(cover);
  BrauerClassFunction chi = euler_characteristic(cover, o);
  report.results["euler_class_of_structure_sheaf"] = class_to_text(chi);
  report.verdict("dimension-identity",
                 chi.dimension() == Cyclotomic(riemann_roch_dim(cover, o)), "");

  if (cover.p != 2) {
    try {
      InductionDivisibility div = induction_divisibility(cover);
      report.verdict("induction-divisibility", div.divisible,
                     "the cotangent induction sum is divisible by |G|");
    } catch (const Error& e) {
      if (e.kind() != Error::Kind::unsupported) throw;
      report.results["induction-divisibility"] = std::string("skipped: ") + e.what();
    }
  }

  if (level != Ramification::wild) {
    try {
      auto basis = projective_basis(cover.group, cover.p);
      ProjectiveClass n_module = canonical_projective(cover, basis);
      report.results["dim_N"] = rational_to_string(n_module.dimension());
      report.verdict("canonical-projective-divisibility", true, "");
      EquivariantDivisor e;
      for (const auto& orb : cover.orbits)
        e.ramified[orb.name] = orb.invariants().e_wild - 1;
      ProjectiveClass chi_e = euler_projective(cover, e, basis);
      ProjectiveClass expected =
          cartan_preimage(BrauerClassFunction::regular(cover.group, cover.p), basis)
              .scaled(Rational(1 - cover.base_genus)) -
          n_module;
      report.verdict("cartan-consistency",
                     chi_e == expected &&
                         cartan_image(chi_e) ==
                             euler_characteristic(cover, divisor_to_sheaf(cover, e)),
                     "chi(O(E)) = (1-g_Y)[k[G]] - [N]");
      if (!cover.orbits.empty()) {
        StableSet s;
        for (const auto& orb : cover.orbits) s.orbit_names.push_back(orb.name);
        report.verdict("duality-identity", duality_identity_check(cover, s, basis), "");
      }
    } catch (const Error& e) {
      if (e.kind() != Error::Kind::unsupported) throw;
      report.results["projective-structure"] = std::string("skipped: ") + e.what();
    }
  }

  if (cover.group->order() <= 24) {
    bool restriction_ok = true;
    for (const auto& h : all_subgroups(cover.group)) {
      SubcoverResult sub = derive_subcover(cover, h);
      BrauerClassFunction restricted = restrict_to(chi, h);
      BrauerClassFunction direct = euler_characteristic(sub.cover, structure_sheaf(sub.cover));
      restriction_ok = restriction_ok && restricted == direct;
    }
    report.verdict("restriction-consistency", restriction_ok,
                   "restricting the Euler class matches the subcover computation");
  }

  report.print(as_json);
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equivariant Euler characteristics of group actions on curves"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string cover_path, sheaf_name, divisor_name, orbits, emit_path, range = "0..0";
  long b_single = 0, unramified_points = 0;
  long p = 3, r = 1, m = 2;
  bool verify = false;

  auto* euler = app.add_subcommand("euler", "Euler characteristic of an equivariant sheaf");
  euler->add_option("--cover", cover_path)->required();
  euler->add_option("--sheaf", sheaf_name);
  euler->add_option("--divisor", divisor_name);

  auto* nmod = app.add_subcommand("n-module", "the canonical projective module N");
  nmod->add_option("--cover", cover_path)->required();

  auto* eproj = app.add_subcommand("euler-projective",
                                   "Euler characteristic as an integral projective class");
  eproj->add_option("--cover", cover_path)->required();
  eproj->add_option("--divisor", divisor_name)->required();

  auto* ideal = app.add_subcommand("ideal-sheaf", "H^1 of the ideal sheaf of a stable set");
  ideal->add_option("--cover", cover_path)->required();
  ideal->add_option("--orbits", orbits);
  ideal->add_option("--unramified-points", unramified_points);

  auto* logd = app.add_subcommand("log-differentials",
                                  "global differentials logarithmic along a stable set");
  logd->add_option("--cover", cover_path)->required();
  logd->add_option("--orbits", orbits);
  logd->add_option("--unramified-points", unramified_points);

  auto* local = app.add_subcommand("local-free",
                                   "normal-basis freeness of fractional ideals");
  local->add_option("--filtration", sheaf_name)->required();
  auto* bopt = local->add_option("--b", b_single);
  local->add_option("--b-range", range);

  auto* oracle = app.add_subcommand("oracle", "build and verify an explicit cover");
  oracle->require_subcommand(1);
  auto* as = oracle->add_subcommand("artin-schreier");
  as->add_option("--p", p)->required();
  as->add_option("--r", r)->required();
  auto* ku = oracle->add_subcommand("kummer");
  ku->add_option("--p", p)->required();
  ku->add_option("--m", m)->required();
  auto* af = oracle->add_subcommand("affine");
  af->add_option("--p", p)->required();
  for (auto* sub : {as, ku, af}) {
    sub->add_flag("--verify", verify);
    sub->add_option("--emit", emit_path);
  }

  auto* check = app.add_subcommand("check", "full invariant suite on a cover file");
  check->add_option("--cover", cover_path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*euler) return run_euler(cover_path, sheaf_name, divisor_name, as_json);
    if (*nmod) return run_n_module(cover_path, as_json);
    if (*eproj) return run_euler_projective(cover_path, divisor_name, as_json);
    if (*ideal)
      return run_ideal_sheaf(cover_path, parse_stable_set(orbits, unramified_points), as_json);
    if (*logd)
      return run_log_differentials(cover_path, parse_stable_set(orbits, unramified_points),
                                   as_json);
    if (*local) return run_local_free(sheaf_name, range, b_single, bopt->count() > 0, as_json);
    if (*oracle) {
      std::string family = (*as) ? "artin-schreier" : (*ku) ? "kummer" : "affine";
      return run_oracle(family, p, r, m, verify, emit_path, as_json);
    }
    if (*check) return run_check(cover_path, as_json);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
