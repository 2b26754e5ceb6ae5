/*
 *   Copyright 2026 The cohfin Authors
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

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cohfin/set_family.hpp"
#include "cohfin/vertex_set.hpp"

namespace cohfin {

using Json = nlohmann::json;

/// Outcome of checking one law at fixed thresholds.
///
/// `params` records the thresholds and the number of instances examined;
/// `witness` is null on success and holds the first counterexample(s) on
/// failure.
struct LawReport {
  std::string law;
  Json params = Json::object();
  bool pass = true;
  Json witness = nullptr;

  /// Marks the report failed and appends `violation` to the witness list.
  /// Only the first `limit` violations are kept.
  void fail(Json violation, std::size_t limit = 8) {
    pass = false;
    if (witness.is_null()) witness = Json{{"violations", Json::array()}};
    auto& list = witness["violations"];
    if (list.size() < limit) list.push_back(std::move(violation));
  }
};

inline Json to_json(const LawReport& r) {
  return Json{{"law", r.law}, {"params", r.params}, {"pass", r.pass}, {"witness", r.witness}};
}

inline LawReport law_report_from_json(const Json& j) {
  LawReport r;
  r.law = j.at("law").get<std::string>();
  r.params = j.at("params");
  r.pass = j.at("pass").get<bool>();
  r.witness = j.at("witness");
  return r;
}

/// Labels of x with respect to `web`.
inline Json labels_json(const std::vector<Vertex>& web, VertexSet x) {
  Json out = Json::array();
  for (auto p : x) out.push_back(web.at(p));
  return out;
}

inline bool all_pass(const std::vector<LawReport>& reports) {
  for (const auto& r : reports) {
    if (!r.pass) return false;
  }
  return true;
}

}  // namespace cohfin
