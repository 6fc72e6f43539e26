#include "equichar/cover_io.hpp"

#include <fstream>

namespace equichar {

using nlohmann::json;

namespace {

constexpr const char* kFormat = "equichar-cover";
constexpr int kVersion = 1;

[[noreturn]] void parse_fail(const std::string& message) {
  throw Error(Error::Kind::parse, message);
}

const json& require(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) parse_fail(std::string("missing key '") + key + "'");
  return *it;
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  parse_fail("expected a rational (integer or \"a/b\" string)");
}

json rational_to_json(const Rational& r) {
  if (is_integer(r) && boost::multiprecision::abs(boost::multiprecision::numerator(r)) <
                           Integer(1'000'000'000))
    return json(static_cast<long long>(to_integer(r)));
  return json(rational_to_string(r));
}

}  // namespace

json cyclotomic_to_json(const Cyclotomic& value) {
  if (value.is_rational()) return rational_to_json(value.rational_value());
  json coeffs = json::array();
  for (const auto& c : value.coefficients()) coeffs.push_back(rational_to_json(c));
  return json{{"m", value.conductor()}, {"c", coeffs}};
}

Cyclotomic cyclotomic_from_json(const json& j) {
  if (j.is_number_integer() || j.is_string()) return Cyclotomic(rational_from_json(j));
  if (!j.is_object()) parse_fail("expected a cyclotomic value");
  long m = require(j, "m").get<long>();
  const json& coeffs = require(j, "c");
  if (!coeffs.is_array() || static_cast<long>(coeffs.size()) != euler_phi(m))
    parse_fail("cyclotomic coefficient vector must have length phi(m)");
  Cyclotomic out;
  long i = 0;
  for (const auto& c : coeffs) {
    Cyclotomic term = Cyclotomic(rational_from_json(c)) * Cyclotomic::root_of_unity(m, i);
    out += term;
    ++i;
  }
  return out;
}

json class_function_to_json(const BrauerClassFunction& fn) {
  json values = json::object();
  for (std::size_t i = 0; i < fn.class_reps().size(); ++i)
    values[std::to_string(fn.class_reps()[i])] = cyclotomic_to_json(fn.values()[i]);
  return json{{"characteristic", fn.characteristic()}, {"values", values}};
}

json divisor_to_json(const EquivariantDivisor& d) {
  json ram = json::object();
  for (const auto& [name, coeff] : d.ramified) ram[name] = coeff;
  json unram = json::array();
  for (const auto& [mult, count] : d.unramified) unram.push_back(json::array({mult, count}));
  return json{{"ramified", ram}, {"unramified", unram}};
}

EquivariantDivisor divisor_from_json(const json& j) {
  EquivariantDivisor d;
  if (j.contains("ramified"))
    for (auto it = j["ramified"].begin(); it != j["ramified"].end(); ++it)
      d.ramified[it.key()] = it.value().get<long>();
  if (j.contains("unramified"))
    for (const auto& entry : j["unramified"]) {
      if (!entry.is_array() || entry.size() != 2)
        parse_fail("unramified entries are [multiplicity, count] pairs");
      long mult = entry[0].get<long>();
      long count = entry[1].get<long>();
      if (count < 1) parse_fail("unramified point count must be positive");
      d.unramified.push_back({mult, count});
    }
  return d;
}

json group_to_json(const GroupPtr& g) {
  // Prefer compact named specs when they reproduce the group exactly.
  for (int x = 0; x < g->order(); ++x)
    if (g->element_order(x) == g->order()) {
      // relabeling by powers of x may differ from the stored table, so only
      // use the cyclic spec when the table already is the standard one
      bool standard = true;
      for (long a = 0; a < g->order() && standard; ++a)
        for (long b = 0; b < g->order(); ++b)
          if (g->mul(static_cast<int>(a), static_cast<int>(b)) !=
              static_cast<int>((a + b) % g->order())) {
            standard = false;
            break;
          }
      if (standard) return json{{"type", "cyclic"}, {"n", g->order()}};
      break;
    }
  if (g->semidirect_info()) {
    const SemidirectInfo& info = *g->semidirect_info();
    // Reconstruct the action of the complement generator on the p-part.
    long q = 1;
    for (long i = 0; i < info.a; ++i) q *= info.p;
    json rows = json::array();
    for (long i = 0; i < info.a; ++i) rows.push_back(json::array());
    std::vector<std::vector<long>> m(info.a, std::vector<long>(info.a, 0));
    for (long jcol = 0; jcol < info.a; ++jcol) {
      long basis = 1;
      for (long i = 0; i < jcol; ++i) basis *= info.p;
      int image = g->conjugate(info.c_generator, static_cast<int>(basis));
      long v = image;
      for (long i = 0; i < info.a; ++i) {
        m[i][jcol] = v % info.p;
        v /= info.p;
      }
    }
    json action = json::array();
    for (long i = 0; i < info.a; ++i) {
      json row = json::array();
      for (long jcol = 0; jcol < info.a; ++jcol) row.push_back(m[i][jcol]);
      action.push_back(row);
    }
    return json{{"type", "semidirect_pc"},
                {"p", info.p},
                {"a", info.a},
                {"t", info.t},
                {"action", action}};
  }
  json table = json::array();
  for (int a = 0; a < g->order(); ++a) {
    json row = json::array();
    for (int b = 0; b < g->order(); ++b) row.push_back(g->mul(a, b));
    table.push_back(row);
  }
  return json{{"type", "table"}, {"table", table}};
}

GroupPtr group_from_json(const json& j) {
  std::string type = require(j, "type").get<std::string>();
  if (type == "cyclic") return CayleyGroup::cyclic(require(j, "n").get<long>());
  if (type == "elementary_abelian")
    return CayleyGroup::elementary_abelian(require(j, "p").get<long>(),
                                           require(j, "a").get<long>());
  if (type == "semidirect_pc") {
    std::vector<std::vector<long>> action;
    for (const auto& row : require(j, "action"))
      action.push_back(row.get<std::vector<long>>());
    return CayleyGroup::semidirect_pc(require(j, "p").get<long>(), require(j, "a").get<long>(),
                                      require(j, "t").get<long>(), action);
  }
  if (type == "semidirect_pc_free")
    return CayleyGroup::semidirect_pc_free(require(j, "p").get<long>(),
                                           require(j, "a").get<long>(),
                                           require(j, "t").get<long>());
  if (type == "table") {
    std::vector<int> flat;
    const json& table = require(j, "table");
    for (const auto& row : table)
      for (const auto& entry : row) flat.push_back(entry.get<int>());
    return CayleyGroup::from_table(std::move(flat));
  }
  parse_fail("unknown group type '" + type + "'");
}

json cover_file_to_json(const CoverFile& file) {
  const CoverDescription& cover = file.cover;
  json orbits = json::array();
  for (const auto& o : cover.orbits) {
    json filtration = json::array();
    for (const auto& level : o.filtration) filtration.push_back(level.members());
    json cot = json::object();
    for (const auto& [gid, exponent] : o.cotangent_exponent)
      cot[std::to_string(gid)] = exponent;
    orbits.push_back(json{{"name", o.name}, {"filtration", filtration}, {"cotangent", cot}});
  }
  json out{{"format", kFormat},
           {"version", kVersion},
           {"characteristic", cover.p},
           {"base_genus", cover.base_genus},
           {"group", group_to_json(cover.group)},
           {"orbits", orbits}};
  if (file.table) {
    json rows = json::array();
    for (const auto& row : file.table->rows) {
      json values = json::array();
      for (const auto& v : row.values()) values.push_back(cyclotomic_to_json(v));
      rows.push_back(values);
    }
    out["brauer_table"] = rows;
  }
  if (!file.divisors.empty()) {
    json divisors = json::object();
    for (const auto& [name, d] : file.divisors) divisors[name] = divisor_to_json(d);
    out["divisors"] = divisors;
  }
  if (!file.sheaves.empty()) {
    json sheaves = json::object();
    for (const auto& [name, sheaf] : file.sheaves) {
      json fibres = json::object();
      for (const auto& [orbit, fn] : sheaf.fibres) {
        json values = json::array();
        for (const auto& v : fn.values()) values.push_back(cyclotomic_to_json(v));
        fibres[orbit] = values;
      }
      sheaves[name] = json{{"rank", sheaf.rank}, {"degree", sheaf.degree}, {"fibres", fibres}};
    }
    out["sheaves"] = sheaves;
  }
  return out;
}

CoverFile cover_file_from_json(const json& j) {
  if (!j.is_object()) parse_fail("cover file must be a JSON object");
  if (require(j, "format").get<std::string>() != kFormat)
    parse_fail("not a cover-description file");
  if (require(j, "version").get<int>() != kVersion)
    parse_fail("unsupported cover file version");

  CoverFile file;
  file.cover.p = require(j, "characteristic").get<long>();
  file.cover.base_genus = require(j, "base_genus").get<long>();
  file.cover.group = group_from_json(require(j, "group"));

  for (const auto& jo : require(j, "orbits")) {
    RamificationOrbit orbit;
    orbit.name = require(jo, "name").get<std::string>();
    const json& filtration = require(jo, "filtration");
    if (!filtration.is_array() || filtration.empty())
      parse_fail("orbit '" + orbit.name + "': filtration must be a non-empty array");
    for (const auto& level : filtration) {
      std::vector<int> members = level.get<std::vector<int>>();
      orbit.filtration.push_back(Subgroup::from_members(file.cover.group, std::move(members)));
    }
    if (orbit.filtration.back().size() != 1)
      orbit.filtration.push_back(Subgroup::trivial(file.cover.group));
    orbit.decomposition = orbit.filtration.front();
    const json& cot = require(jo, "cotangent");
    for (auto it = cot.begin(); it != cot.end(); ++it)
      orbit.cotangent_exponent[std::stoi(it.key())] = it.value().get<long>();
    file.cover.orbits.push_back(std::move(orbit));
  }
  file.cover.validate();

  if (j.contains("brauer_table")) {
    std::vector<std::vector<Cyclotomic>> rows;
    for (const auto& jrow : j["brauer_table"]) {
      std::vector<Cyclotomic> row;
      for (const auto& v : jrow) row.push_back(cyclotomic_from_json(v));
      rows.push_back(std::move(row));
    }
    file.table = user_brauer_table(file.cover.group, file.cover.p, std::move(rows));
  }
  if (j.contains("divisors"))
    for (auto it = j["divisors"].begin(); it != j["divisors"].end(); ++it)
      file.divisors[it.key()] = divisor_from_json(it.value());
  if (j.contains("sheaves")) {
    for (auto it = j["sheaves"].begin(); it != j["sheaves"].end(); ++it) {
      const json& js = it.value();
      EquivariantSheafData sheaf;
      sheaf.rank = require(js, "rank").get<long>();
      sheaf.degree = require(js, "degree").get<long>();
      const json& fibres = require(js, "fibres");
      for (auto fit = fibres.begin(); fit != fibres.end(); ++fit) {
        const RamificationOrbit& orbit = file.cover.orbit(fit.key());
        std::vector<Cyclotomic> values;
        for (const auto& v : fit.value()) values.push_back(cyclotomic_from_json(v));
        sheaf.fibres.emplace(fit.key(),
                             BrauerClassFunction::from_values(orbit.decomposition.group(),
                                                              file.cover.p, std::move(values)));
      }
      sheaf.validate(file.cover);
      file.sheaves[it.key()] = std::move(sheaf);
    }
  }
  return file;
}

CoverFile load_cover_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Error::Kind::parse, "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error(Error::Kind::parse, "invalid JSON in '" + path + "': " + e.what());
  }
  return cover_file_from_json(j);
}

void save_cover_file(const CoverFile& file, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(Error::Kind::parse, "cannot write '" + path + "'");
  out << cover_file_to_json(file).dump(2) << "\n";
}

bool covers_structurally_equal(const CoverDescription& a, const CoverDescription& b) {
  if (a.p != b.p || a.base_genus != b.base_genus) return false;
  if (a.group->order() != b.group->order()) return false;
  if (a.group->table() != b.group->table()) return false;
  if (a.orbits.size() != b.orbits.size()) return false;
  for (std::size_t i = 0; i < a.orbits.size(); ++i) {
    const auto& oa = a.orbits[i];
    const auto& ob = b.orbits[i];
    if (oa.name != ob.name) return false;
    if (oa.filtration.size() != ob.filtration.size()) return false;
    for (std::size_t s = 0; s < oa.filtration.size(); ++s)
      if (oa.filtration[s].members() != ob.filtration[s].members()) return false;
    RamificationInvariants inv = oa.invariants();
    for (const auto& [gid, exponent] : oa.cotangent_exponent) {
      auto it = ob.cotangent_exponent.find(gid);
      if (it == ob.cotangent_exponent.end()) return false;
      if (mod_nonneg(exponent, inv.e_tame) != mod_nonneg(it->second, inv.e_tame)) return false;
    }
  }
  return true;
}

}  // namespace equichar
