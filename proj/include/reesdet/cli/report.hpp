/*
 * Copyright 2026 The reesdet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "reesdet/errors.hpp"

namespace reesdet::cli {

/// One reported fact. `source` names the theorem or computation that
/// produced the value; every item carries one.
struct ReportItem {
  std::string key;
  std::string value;
  std::string source;

  friend bool operator==(const ReportItem&, const ReportItem&) = default;
};

struct ReportSection {
  std::string name;
  std::vector<ReportItem> items;

  void add(std::string key, std::string value, std::string_view source) {
    items.push_back({std::move(key), std::move(value), std::string(source)});
  }
  [[nodiscard]] const ReportItem* find(std::string_view key) const {
    for (const auto& i : items)
      if (i.key == key) return &i;
    return nullptr;
  }

  friend bool operator==(const ReportSection&, const ReportSection&) = default;
};

struct Report {
  std::string field;
  std::string order;
  std::string problem;
  std::vector<ReportSection> sections;
  std::string error;  // empty on success

  [[nodiscard]] const ReportSection* section(std::string_view name) const {
    for (const auto& s : sections)
      if (s.name == name) return &s;
    return nullptr;
  }

  friend bool operator==(const Report&, const Report&) = default;
};

[[nodiscard]] inline std::string field_banner(const std::string& field) {
  if (field == "QQ") return "field: QQ (characteristic 0, exact rational arithmetic)";
  return "field: " + field + " (heights match characteristic 0 except for unlucky primes; --field rationals is exact)";
}

[[nodiscard]] inline std::string render_text(const Report& r) {
  std::string out = field_banner(r.field) + "\n";
  out += "order: " + r.order + "\n";
  out += "problem: " + r.problem + "\n";
  for (const auto& s : r.sections) {
    out += "\n[" + s.name + "]\n";
    std::size_t width = 0;
    for (const auto& i : s.items) width = std::max(width, i.key.size());
    for (const auto& i : s.items)
      out += "  " + i.key + std::string(width - i.key.size(), ' ') + " = " + i.value + "  [" + i.source + "]\n";
  }
  if (!r.error.empty()) out += "\nerror: " + r.error + "\n";
  return out;
}

[[nodiscard]] inline nlohmann::ordered_json report_to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["format"] = 1;
  j["field"] = r.field;
  j["order"] = r.order;
  j["problem"] = r.problem;
  j["sections"] = nlohmann::ordered_json::array();
  for (const auto& s : r.sections) {
    nlohmann::ordered_json sj;
    sj["name"] = s.name;
    sj["items"] = nlohmann::ordered_json::array();
    for (const auto& i : s.items) sj["items"].push_back({{"key", i.key}, {"value", i.value}, {"source", i.source}});
    j["sections"].push_back(sj);
  }
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

[[nodiscard]] inline Report report_from_json(const nlohmann::ordered_json& j) {
  try {
    Report r;
    r.field = j.at("field").get<std::string>();
    r.order = j.at("order").get<std::string>();
    r.problem = j.at("problem").get<std::string>();
    for (const auto& sj : j.at("sections")) {
      ReportSection s;
      s.name = sj.at("name").get<std::string>();
      for (const auto& ij : sj.at("items"))
        s.items.push_back({ij.at("key").get<std::string>(), ij.at("value").get<std::string>(),
                           ij.at("source").get<std::string>()});
      r.sections.push_back(std::move(s));
    }
    if (j.contains("error")) r.error = j.at("error").get<std::string>();
    return r;
  } catch (const nlohmann::ordered_json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace reesdet::cli
