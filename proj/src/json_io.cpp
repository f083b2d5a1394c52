#include "springcoh/json_io.hpp"

namespace springcoh {

void to_json(nlohmann::json& j, const BigradedTable& table) {
  j = nlohmann::json{{"d1", table.d1}, {"d2", table.d2}, {"entries", table.entries}};
}

void from_json(const nlohmann::json& j, BigradedTable& table) {
  table.d1 = j.at("d1").get<int>();
  table.d2 = j.at("d2").get<int>();
  table.entries = j.at("entries").get<std::vector<std::vector<std::size_t>>>();
  if (table.entries.size() != static_cast<std::size_t>(table.d1 + 1))
    throw nlohmann::json::other_error::create(501, "bigraded table has wrong row count", &j);
  for (const auto& row : table.entries)
    if (row.size() != static_cast<std::size_t>(table.d2 + 1))
      throw nlohmann::json::other_error::create(501, "bigraded table has wrong column count", &j);
}

nlohmann::json rational_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

void to_json(nlohmann::json& j, const ClassFunction& chi) {
  j = nlohmann::json::object();
  for (const auto& [cls, v] : chi.values()) j[cls.to_string()] = rational_json(v);
}

}  // namespace springcoh
