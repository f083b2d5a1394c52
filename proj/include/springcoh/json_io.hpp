#pragma once

#include <json.hpp>

#include "springcoh/characters.hpp"
#include "springcoh/inverse_system.hpp"

namespace springcoh {

/// {"d1": .., "d2": .., "entries": [[..], ..]} with a dense (d1+1) x (d2+1) matrix.
void to_json(nlohmann::json& j, const BigradedTable& table);
void from_json(const nlohmann::json& j, BigradedTable& table);

/// Keyed by the class partition string, e.g. {"1,1,1": "2", "2,1": "0", "3": "-1"}.
/// Values are exact rationals printed as strings.
void to_json(nlohmann::json& j, const ClassFunction& chi);

nlohmann::json rational_json(const Rational& q);

}  // namespace springcoh
