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
#include <iterator>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cohfin/errors.hpp"
#include "cohfin/vertex_set.hpp"

namespace cohfin {

/// A finite collection of subsets of a web, sorted and deduplicated.
///
/// Members are stored as VertexSets over web positions; the web labels are
/// kept alongside for export.
class SetFamily {
 public:
  SetFamily() = default;

  SetFamily(std::vector<Vertex> web, std::vector<VertexSet> members)
      : web_(std::move(web)), members_(std::move(members)) {
    if (web_.size() > kMaxWeb) {
      throw SizeLimitError("set family web exceeds " + std::to_string(kMaxWeb) + " vertices");
    }
    const VertexSet full = VertexSet::first(web_.size());
    for (const auto& m : members_) {
      if (!m.is_subset_of(full)) {
        throw ContractError("set family member is not a subset of its web");
      }
    }
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  const std::vector<Vertex>& web() const noexcept { return web_; }
  std::size_t web_size() const noexcept { return web_.size(); }
  const std::vector<VertexSet>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  bool contains(VertexSet x) const {
    return std::binary_search(members_.begin(), members_.end(), x);
  }

  bool is_subfamily_of(const SetFamily& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                         members_.end());
  }

  /// Members not strictly contained in another member.
  std::vector<VertexSet> maximal_members() const {
    std::vector<VertexSet> out;
    // Sorting by decreasing size guarantees a strict superset is seen first.
    std::vector<VertexSet> by_size = members_;
    std::stable_sort(by_size.begin(), by_size.end(),
                     [](VertexSet a, VertexSet b) { return a.size() > b.size(); });
    for (auto x : by_size) {
      bool dominated = std::any_of(out.begin(), out.end(),
                                   [x](VertexSet y) { return x.is_subset_of(y); });
      if (!dominated) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// First member of the symmetric difference, if any.
  friend std::optional<VertexSet> first_difference(const SetFamily& a, const SetFamily& b) {
    std::vector<VertexSet> diff;
    std::set_symmetric_difference(a.members_.begin(), a.members_.end(), b.members_.begin(),
                                  b.members_.end(), std::back_inserter(diff));
    if (diff.empty()) return std::nullopt;
    return diff.front();
  }

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  std::vector<Vertex> web_;
  std::vector<VertexSet> members_;
};

/// All subsets of a web of the given size, in increasing bitmask order.
inline SetFamily powerset(std::vector<Vertex> web, std::size_t cap = kDefaultEnumerationCap) {
  const std::size_t n = web.size();
  if (n > cap) {
    throw SizeLimitError("powerset of a " + std::to_string(n) + "-vertex web exceeds cap " +
                         std::to_string(cap));
  }
  std::vector<VertexSet> members;
  members.reserve(std::size_t{1} << n);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) members.emplace_back(s);
  return SetFamily(std::move(web), std::move(members));
}

}  // namespace cohfin
