#pragma once

#include <optional>
#include <string>

#include "json.hpp"

namespace dpz::cli {

inline constexpr const char* kVersion = "0.1.0";

using Json = nlohmann::ordered_json;

// One query result. Serialized key order: version, query, counts, fields,
// items, timing.
struct Report {
  Json query = Json::object();
  Json counts = Json::object();  // derived from items by the builders
  Json fields = Json::object();  // command-specific top-level fields
  Json items = Json::array();
  std::optional<double> elapsed_ms;
};

Json to_json(const Report& report);
Report report_from_json(const Json& j);

std::string render_json(const Report& report);
// Human-oriented; not a stable format.
std::string render_table(const Report& report);

}  // namespace dpz::cli
