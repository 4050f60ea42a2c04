#include "report.hpp"

#include <sstream>

namespace dpz::cli {

Json to_json(const Report& report) {
  Json j;
  j["version"] = kVersion;
  j["query"] = report.query;
  j["counts"] = report.counts;
  for (const auto& [key, value] : report.fields.items()) j[key] = value;
  j["items"] = report.items;
  if (report.elapsed_ms) j["timing"] = {{"elapsed_ms", *report.elapsed_ms}};
  return j;
}

Report report_from_json(const Json& j) {
  Report r;
  r.query = j.at("query");
  r.counts = j.at("counts");
  r.items = j.at("items");
  for (const auto& [key, value] : j.items()) {
    if (key == "version" || key == "query" || key == "counts" ||
        key == "items" || key == "timing")
      continue;
    r.fields[key] = value;
  }
  if (j.contains("timing")) r.elapsed_ms = j["timing"].at("elapsed_ms");
  return r;
}

std::string render_json(const Report& report) {
  return to_json(report).dump(2) + "\n";
}

namespace {

std::string plain(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (const auto& x : v) {
      if (!out.empty()) out += "  ";
      out += plain(x);
    }
    return out;
  }
  if (v.is_object()) {
    std::string out;
    for (const auto& [key, x] : v.items()) {
      if (!out.empty()) out += "  ";
      out += key + "=" + plain(x);
    }
    return out;
  }
  return v.dump();
}

}  // namespace

std::string render_table(const Report& report) {
  std::ostringstream os;
  os << "# " << plain(report.query) << "\n";
  for (const auto& [key, value] : report.fields.items())
    os << key << ": " << plain(value) << "\n";
  std::size_t index = 0;
  for (const auto& item : report.items)
    os << ++index << "\t" << plain(item) << "\n";
  for (const auto& [key, value] : report.counts.items())
    os << key << ": " << plain(value) << "\n";
  if (report.elapsed_ms) os << "elapsed_ms: " << *report.elapsed_ms << "\n";
  return os.str();
}

}  // namespace dpz::cli
