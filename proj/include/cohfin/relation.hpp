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

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "cohfin/errors.hpp"
#include "cohfin/vertex_set.hpp"

namespace cohfin {

using VertexPair = std::pair<Vertex, Vertex>;

/// A finite relation between two webs: a set of (source, target) label
/// pairs. Pairs are kept sorted and unique.
class Relation {
 public:
  Relation() = default;

  Relation(std::vector<Vertex> source_web, std::vector<Vertex> target_web,
           std::vector<VertexPair> pairs)
      : source_(std::move(source_web)), target_(std::move(target_web)), pairs_(std::move(pairs)) {
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
    for (auto [a, b] : pairs_) {
      if (std::find(source_.begin(), source_.end(), a) == source_.end()) {
        throw ContractError("relation pair source " + std::to_string(a) + " is not in the web");
      }
      if (std::find(target_.begin(), target_.end(), b) == target_.end()) {
        throw ContractError("relation pair target " + std::to_string(b) + " is not in the web");
      }
    }
  }

  const std::vector<Vertex>& source_web() const noexcept { return source_; }
  const std::vector<Vertex>& target_web() const noexcept { return target_; }
  const std::vector<VertexPair>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  bool contains(VertexPair p) const { return std::binary_search(pairs_.begin(), pairs_.end(), p); }

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::vector<Vertex> source_;
  std::vector<Vertex> target_;
  std::vector<VertexPair> pairs_;
};

/// Diagonal relation on a web.
inline Relation identity(const std::vector<Vertex>& web) {
  std::vector<VertexPair> pairs;
  for (auto v : web) pairs.emplace_back(v, v);
  return Relation(web, web, std::move(pairs));
}

inline Relation transpose(const Relation& r) {
  std::vector<VertexPair> pairs;
  for (auto [a, b] : r.pairs()) pairs.emplace_back(b, a);
  return Relation(r.target_web(), r.source_web(), std::move(pairs));
}

/// r ∘ s = {(a, c) | ∃b. (a, b) ∈ s and (b, c) ∈ r}.
inline Relation compose(const Relation& r, const Relation& s) {
  if (s.target_web() != r.source_web()) {
    throw WebMismatchError("compose: target web of s differs from source web of r");
  }
  std::vector<VertexPair> out;
  for (auto [a, b] : s.pairs()) {
    auto lo = std::lower_bound(r.pairs().begin(), r.pairs().end(), VertexPair{b, 0});
    for (auto it = lo; it != r.pairs().end() && it->first == b; ++it) out.emplace_back(a, it->second);
  }
  return Relation(s.source_web(), r.target_web(), std::move(out));
}

}  // namespace cohfin
