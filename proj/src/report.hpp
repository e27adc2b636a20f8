#pragma once

#include <string>
#include <utility>
#include <vector>

#include "linalg.hpp"

namespace ptx {

// Ordered key/value report. Keys keep insertion order in both renderings so
// reports are byte-stable for identical inputs.
class Report {
 public:
  void add(const std::string& key, const std::string& value);
  void add(const std::string& key, i64 value);
  void add_bool(const std::string& key, bool value);

  std::string to_text() const;
  std::string to_json() const;
  std::string render(const std::string& format) const;  // "text" or "json"

  const std::vector<std::pair<std::string, std::string>>& items() const { return items_; }

 private:
  std::vector<std::pair<std::string, std::string>> items_;
};

}  // namespace ptx
