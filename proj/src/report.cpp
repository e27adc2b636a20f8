#include "report.hpp"

#include <json.hpp>

#include "error.hpp"

namespace ptx {

void Report::add(const std::string& key, const std::string& value) {
  items_.emplace_back(key, value);
}

void Report::add(const std::string& key, i64 value) {
  items_.emplace_back(key, std::to_string(value));
}

void Report::add_bool(const std::string& key, bool value) {
  items_.emplace_back(key, value ? "true" : "false");
}

std::string Report::to_text() const {
  std::string out;
  for (const auto& [k, v] : items_) {
    out += k;
    out += ": ";
    out += v;
    out += "\n";
  }
  return out;
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  for (const auto& [k, v] : items_) j[k] = v;
  return j.dump(2) + "\n";
}

std::string Report::render(const std::string& format) const {
  if (format.empty() || format == "text") return to_text();
  if (format == "json") return to_json();
  fail(Errc::InvalidArgument, "unknown format '" + format + "' (expected text or json)");
}

}  // namespace ptx
