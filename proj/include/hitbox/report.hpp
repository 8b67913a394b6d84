#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hitbox/hit.hpp"

namespace hitbox {

nlohmann::json to_json(const GaloisId& id);
nlohmann::json to_json(const SpecializationRecord& r);
nlohmann::json to_json(const std::vector<SpecializationRecord>& records);
nlohmann::json to_json(const EquivalenceReport& rep);
nlohmann::json to_json(const HitData& data);

/// One row per record: t, verdict, witness, factorization type, group, match.
std::string render_table(const std::vector<SpecializationRecord>& records);

/// Summary lines followed by the violation and indeterminate rows.
std::string render_table(const EquivalenceReport& rep);

}  // namespace hitbox
