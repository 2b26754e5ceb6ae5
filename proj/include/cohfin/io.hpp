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

// JSON, DOT and CSV encodings.

#pragma once

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cohfin/category.hpp"
#include "cohfin/law_report.hpp"
#include "cohfin/nonuniform.hpp"
#include "cohfin/presented.hpp"
#include "cohfin/ramsey.hpp"
#include "cohfin/relation.hpp"
#include "cohfin/space.hpp"

namespace cohfin {

// --- coherent spaces -------------------------------------------------------

/// {"web":[...], "coherent_pairs":[[a,b],...]}
inline Json to_json(const CoherentSpace& c) {
  Json pairs = Json::array();
  for (auto [a, b] : c.coherent_pairs()) pairs.push_back({a, b});
  return Json{{"web", c.web()}, {"coherent_pairs", pairs}};
}

inline CoherentSpace space_from_json(const Json& j) {
  auto web = j.at("web").get<std::vector<Vertex>>();
  std::vector<VertexPair> pairs;
  for (const auto& p : j.at("coherent_pairs")) {
    if (!p.is_array() || p.size() != 2) throw ContractError("coherent pair must be [a, b]");
    pairs.emplace_back(p[0].get<Vertex>(), p[1].get<Vertex>());
  }
  return mk_space(std::move(web), pairs);
}

/// One undirected edge per coherent off-diagonal pair; loops omitted.
inline std::string to_dot(const CoherentSpace& c, const std::string& name = "C") {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (auto v : c.web()) os << "  " << v << ";\n";
  for (auto [a, b] : c.coherent_pairs()) os << "  " << a << " -- " << b << ";\n";
  os << "}\n";
  return os.str();
}

inline Json to_json(const SetFamily& f) {
  Json members = Json::array();
  for (auto x : f) members.push_back(labels_json(f.web(), x));
  return Json{{"web", f.web()}, {"members", members}};
}

// --- Ramsey ----------------------------------------------------------------

/// {"color": i, "vertices": [...]}
inline Json to_json(const RamseyWitness& w) {
  return Json{{"color", w.color}, {"vertices", w.vertices.positions()}};
}

/// {"n": n, "colors": c, "pairs": {"i,j": color, ...}}
inline Json to_json(const EdgeColoring& coloring) {
  Json pairs = Json::object();
  const std::size_t n = coloring.vertex_count();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      pairs[std::to_string(i) + "," + std::to_string(j)] = coloring.color(i, j);
    }
  }
  return Json{{"n", n}, {"colors", coloring.color_count()}, {"pairs", pairs}};
}

inline EdgeColoring coloring_from_json(const Json& j) {
  const auto n = j.at("n").get<std::size_t>();
  const auto colors = j.at("colors").get<unsigned>();
  const auto& pairs = j.at("pairs");
  return EdgeColoring::from_function(n, colors, [&](std::size_t a, std::size_t b) {
    const auto key = std::to_string(a) + "," + std::to_string(b);
    if (!pairs.contains(key)) throw ContractError("coloring is missing pair " + key);
    return pairs.at(key).get<unsigned>();
  });
}

// --- relations ---------------------------------------------------------------

inline Json to_json(const Relation& r) {
  Json pairs = Json::array();
  for (auto [a, b] : r.pairs()) pairs.push_back({a, b});
  return Json{{"source_web", r.source_web()}, {"target_web", r.target_web()}, {"pairs", pairs}};
}

inline Relation relation_from_json(const Json& j) {
  std::vector<VertexPair> pairs;
  for (const auto& p : j.at("pairs")) pairs.emplace_back(p.at(0).get<Vertex>(), p.at(1).get<Vertex>());
  return Relation(j.at("source_web").get<std::vector<Vertex>>(),
                  j.at("target_web").get<std::vector<Vertex>>(), std::move(pairs));
}

// --- non-uniform spaces ------------------------------------------------------

/// {"web":[...], "labels": {"a,b": "neutral", ...}} over pairs a <= b.
inline Json to_json(const NonUniformSpace& nu) {
  Json labels = Json::object();
  for (std::size_t i = 0; i < nu.size(); ++i) {
    for (std::size_t j = i; j < nu.size(); ++j) {
      labels[std::to_string(nu.web()[i]) + "," + std::to_string(nu.web()[j])] =
          to_string(nu.label(i, j));
    }
  }
  return Json{{"web", nu.web()}, {"labels", labels}};
}

inline NonUniformSpace nonuniform_from_json(const Json& j) {
  const auto web = j.at("web").get<std::vector<Vertex>>();
  const std::size_t n = web.size();
  const auto& labels = j.at("labels");
  std::vector<PairLabel> matrix(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i; k < n; ++k) {
      const auto key = std::to_string(web[i]) + "," + std::to_string(web[k]);
      const auto alt = std::to_string(web[k]) + "," + std::to_string(web[i]);
      const Json* v = labels.contains(key) ? &labels.at(key)
                      : labels.contains(alt) ? &labels.at(alt)
                                             : nullptr;
      if (v == nullptr) throw ContractError("non-uniform space is missing label for " + key);
      matrix[i * n + k] = matrix[k * n + i] = pair_label_from_string(v->get<std::string>());
    }
  }
  return NonUniformSpace(web, std::move(matrix));
}

inline Json to_json(const FailureWitness& w) {
  Json j{{"variant", to_string(w.variant)}, {"found", w.found}, {"law", w.law}, {"detail", w.detail}};
  if (w.found) {
    j["space"] = to_json(w.space);
    j["set"] = labels_json(w.space.web(), w.set);
    if (!w.inner.empty()) j["anticlique"] = labels_json(w.space.web(), w.inner);
    if (!w.missing_from.empty()) j["missing_from"] = w.missing_from;
  }
  if (w.ramsey_bound != 0) j["ramsey_bound"] = w.ramsey_bound;
  return j;
}

// --- profiles ----------------------------------------------------------------

inline Json to_json(const std::vector<GrowthRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back({{"n", r.n}, {"omega", r.omega}, {"alpha", r.alpha}});
  return out;
}

inline std::string to_csv(const std::vector<GrowthRow>& rows) {
  std::ostringstream os;
  os << "n,omega,alpha\n";
  for (const auto& r : rows) os << r.n << ',' << r.omega << ',' << r.alpha << '\n';
  return os.str();
}

/// Growth rows joined with cover lower bounds (same sample sizes).
inline std::string to_csv(const std::vector<GrowthRow>& rows, const std::vector<CoverRow>& cover) {
  std::ostringstream os;
  os << "n,omega,alpha,cover_lb\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    os << rows[i].n << ',' << rows[i].omega << ',' << rows[i].alpha << ','
       << cover.at(i).cover_lower_bound << '\n';
  }
  return os.str();
}

inline Json to_json(const std::vector<CoverRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back({{"n", r.n}, {"cover_lb", r.cover_lower_bound}});
  return out;
}

inline Json to_json(const std::vector<EditRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back({{"n", r.n},
                   {"alpha_difference", r.alpha_difference},
                   {"omega_difference", r.omega_difference},
                   {"edits_in_window", r.edits_in_window}});
  }
  return out;
}

}  // namespace cohfin
