#pragma once

#include <json.hpp>
#include <map>
#include <optional>
#include <string>

#include "equichar/cover.hpp"

namespace equichar {

/// Parsed contents of a cover-description file: the validated cover plus
/// optional named divisors, named sheaves and a user-supplied Brauer table.
struct CoverFile {
  CoverDescription cover;
  std::optional<BrauerTable> table;
  std::map<std::string, EquivariantDivisor> divisors;
  std::map<std::string, EquivariantSheafData> sheaves;
};

nlohmann::json cyclotomic_to_json(const Cyclotomic& value);
Cyclotomic cyclotomic_from_json(const nlohmann::json& j);

nlohmann::json class_function_to_json(const BrauerClassFunction& fn);

nlohmann::json divisor_to_json(const EquivariantDivisor& d);
EquivariantDivisor divisor_from_json(const nlohmann::json& j);

/// Self-describing group spec. Emits "cyclic" for cyclic groups, the
/// semidirect description when builder metadata is available, and the raw
/// multiplication table otherwise.
nlohmann::json group_to_json(const GroupPtr& g);
GroupPtr group_from_json(const nlohmann::json& j);

nlohmann::json cover_file_to_json(const CoverFile& file);
CoverFile cover_file_from_json(const nlohmann::json& j);

CoverFile load_cover_file(const std::string& path);
void save_cover_file(const CoverFile& file, const std::string& path);

/// Structural equality (groups compared by table, not identity); used for
/// round-trip checks.
bool covers_structurally_equal(const CoverDescription& a, const CoverDescription& b);

}  // namespace equichar
