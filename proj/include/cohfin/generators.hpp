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

#include <cstdint>
#include <vector>

#include "cohfin/random.hpp"
#include "cohfin/set_family.hpp"
#include "cohfin/space.hpp"

namespace cohfin {

/// The labelled graph on n vertices whose i-th off-diagonal pair (in the
/// order (0,1), (0,2), ..., (1,2), ...) is coherent iff bit i of `code` is set.
inline CoherentSpace space_from_code(std::size_t n, std::uint64_t code) {
  std::size_t bit = 0;
  std::vector<VertexSet> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++bit) {
      if ((code >> bit) & 1U) {
        adj[i].insert(j);
        adj[j].insert(i);
      }
    }
  }
  return CoherentSpace(detail::iota_web(n), std::move(adj));
}

/// Calls visit(space) for each of the 2^(n(n-1)/2) labelled graphs on n
/// vertices.
template <class Visit>
void for_each_space(std::size_t n, Visit&& visit) {
  const std::size_t pairs = n * (n - (n > 0)) / 2;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
    visit(space_from_code(n, code));
  }
}

/// G(n, p) on positions 0..n-1.
inline CoherentSpace random_space(std::size_t n, Rng& rng, double p = 0.5) {
  return detail::space_from_predicate(n, [&](std::size_t, std::size_t) { return rng.bernoulli(p); });
}

/// Uniformly random subset of the first n positions.
inline VertexSet random_subset(std::size_t n, Rng& rng) {
  return VertexSet(rng.next()) & VertexSet::first(n);
}

/// A family of up to `max_members` random subsets of a web of n vertices.
inline SetFamily random_family(std::size_t n, Rng& rng, std::size_t max_members) {
  std::vector<VertexSet> members;
  const auto count = rng.below(max_members + 1);
  for (std::uint64_t i = 0; i < count; ++i) members.push_back(random_subset(n, rng));
  return SetFamily(detail::iota_web(n), std::move(members));
}

}  // namespace cohfin
