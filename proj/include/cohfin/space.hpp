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
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cohfin/errors.hpp"
#include "cohfin/set_family.hpp"
#include "cohfin/vertex_set.hpp"

namespace cohfin {

namespace detail {

/// Exact maximum clique of the graph `adj` restricted to `candidates`.
///
/// `adj[v]` must not contain v. The search visits vertices in increasing
/// position order and only replaces the incumbent on strict improvement, so
/// the result is deterministic. Stops early once `target` is reached.
class MaxCliqueSearch {
 public:
  MaxCliqueSearch(std::span<const VertexSet> adj, std::size_t target)
      : adj_(adj), target_(target) {}

  VertexSet run(VertexSet candidates) {
    best_ = VertexSet{};
    expand(candidates, VertexSet{});
    return best_;
  }

 private:
  void expand(VertexSet candidates, VertexSet current) {
    if (current.size() > best_.size()) best_ = current;
    while (!candidates.empty()) {
      if (best_.size() >= target_) return;
      if (current.size() + candidates.size() <= best_.size()) return;
      const std::size_t v = candidates.lowest();
      expand(candidates & adj_[v], current.with(v));
      candidates.erase(v);
    }
  }

  std::span<const VertexSet> adj_;
  std::size_t target_;
  VertexSet best_;
};

inline VertexSet max_clique(std::span<const VertexSet> adj, VertexSet candidates,
                            std::size_t target = kMaxWeb + 1) {
  return MaxCliqueSearch(adj, target).run(candidates);
}

inline void require_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap) {
    throw SizeLimitError(std::string(what) + ": web of " + std::to_string(n) +
                         " vertices exceeds enumeration cap " + std::to_string(cap));
  }
}

}  // namespace detail

/// A finite coherent space: a web of distinct labels with a symmetric,
/// reflexive coherence relation.
class CoherentSpace {
 public:
  /// The empty space.
  CoherentSpace() = default;

  /// `strict_adjacency[i]` lists the positions coherent with i, excluding i.
  CoherentSpace(std::vector<Vertex> web, std::vector<VertexSet> strict_adjacency)
      : web_(std::move(web)), adj_(std::move(strict_adjacency)) {
    if (web_.size() > kMaxWeb) {
      throw SizeLimitError("web of " + std::to_string(web_.size()) + " vertices exceeds " +
                           std::to_string(kMaxWeb));
    }
    if (adj_.size() != web_.size()) {
      throw ContractError("adjacency size does not match web size");
    }
    std::unordered_map<Vertex, std::size_t> seen;
    for (std::size_t i = 0; i < web_.size(); ++i) {
      if (!seen.emplace(web_[i], i).second) {
        throw ContractError("duplicate vertex label " + std::to_string(web_[i]));
      }
    }
    const VertexSet full = VertexSet::first(web_.size());
    for (std::size_t i = 0; i < adj_.size(); ++i) {
      adj_[i].erase(i);
      if (!adj_[i].is_subset_of(full)) throw ContractError("adjacency leaves the web");
      for (auto j : adj_[i]) {
        if (!adj_[j].contains(i) && j != i) {
          throw ContractError("coherence is not symmetric on pair (" +
                              std::to_string(web_[i]) + ", " + std::to_string(web_[j]) + ")");
        }
      }
    }
  }

  std::size_t size() const noexcept { return web_.size(); }
  const std::vector<Vertex>& web() const noexcept { return web_; }
  VertexSet full() const noexcept { return VertexSet::first(web_.size()); }

  /// Coherence of two positions; true on the diagonal.
  bool coherent(std::size_t i, std::size_t j) const noexcept {
    return i == j || adj_[i].contains(j);
  }
  /// Positions coherent with i, excluding i itself.
  VertexSet strict_neighbours(std::size_t i) const noexcept { return adj_[i]; }
  std::span<const VertexSet> strict_adjacency() const noexcept { return adj_; }

  std::size_t position_of(Vertex label) const {
    auto it = std::find(web_.begin(), web_.end(), label);
    if (it == web_.end()) {
      throw ContractError("unknown vertex label " + std::to_string(label));
    }
    return static_cast<std::size_t>(it - web_.begin());
  }

  VertexSet set_of(std::span<const Vertex> labels) const {
    VertexSet s;
    for (auto l : labels) s.insert(position_of(l));
    return s;
  }

  std::vector<Vertex> labels_of(VertexSet x) const {
    require_subset(x);
    std::vector<Vertex> out;
    for (auto p : x) out.push_back(web_[p]);
    return out;
  }

  void require_subset(VertexSet x) const {
    if (!x.is_subset_of(full())) {
      throw ContractError("vertex position " + std::to_string(x.extent() - 1) +
                          " is outside a web of " + std::to_string(size()) + " vertices");
    }
  }

  /// Off-diagonal coherent pairs (i < j by position), as labels.
  std::vector<std::pair<Vertex, Vertex>> coherent_pairs() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (std::size_t i = 0; i < size(); ++i) {
      for (auto j : adj_[i]) {
        if (j > i) out.emplace_back(web_[i], web_[j]);
      }
    }
    return out;
  }

  friend bool operator==(const CoherentSpace&, const CoherentSpace&) = default;

 private:
  std::vector<Vertex> web_;
  std::vector<VertexSet> adj_;
};

/// Builds the space on `web` whose coherence is the symmetric reflexive
/// closure of `coherent_pairs`.
inline CoherentSpace mk_space(std::vector<Vertex> web,
                              std::span<const std::pair<Vertex, Vertex>> coherent_pairs) {
  if (web.size() > kMaxWeb) {
    throw SizeLimitError("web of " + std::to_string(web.size()) + " vertices exceeds " +
                         std::to_string(kMaxWeb));
  }
  std::unordered_map<Vertex, std::size_t> index;
  for (std::size_t i = 0; i < web.size(); ++i) {
    if (!index.emplace(web[i], i).second) {
      throw ContractError("duplicate vertex label " + std::to_string(web[i]));
    }
  }
  std::vector<VertexSet> adj(web.size());
  for (auto [a, b] : coherent_pairs) {
    auto ia = index.find(a);
    if (ia == index.end()) throw ContractError("unknown vertex label " + std::to_string(a));
    auto ib = index.find(b);
    if (ib == index.end()) throw ContractError("unknown vertex label " + std::to_string(b));
    if (ia->second == ib->second) continue;
    adj[ia->second].insert(ib->second);
    adj[ib->second].insert(ia->second);
  }
  return CoherentSpace(std::move(web), std::move(adj));
}

inline CoherentSpace mk_space(std::vector<Vertex> web,
                              std::initializer_list<std::pair<Vertex, Vertex>> coherent_pairs) {
  return mk_space(std::move(web), std::span<const std::pair<Vertex, Vertex>>(
                                      coherent_pairs.begin(), coherent_pairs.size()));
}

namespace detail {

inline std::vector<Vertex> iota_web(std::size_t n) {
  if (n > kMaxWeb) {
    throw SizeLimitError("web of " + std::to_string(n) + " vertices exceeds " +
                         std::to_string(kMaxWeb));
  }
  std::vector<Vertex> web(n);
  for (std::size_t i = 0; i < n; ++i) web[i] = static_cast<Vertex>(i);
  return web;
}

template <class Coherent>
CoherentSpace space_from_predicate(std::size_t n, Coherent&& coherent) {
  auto web = iota_web(n);
  std::vector<VertexSet> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coherent(i, j)) {
        adj[i].insert(j);
        adj[j].insert(i);
      }
    }
  }
  return CoherentSpace(std::move(web), std::move(adj));
}

}  // namespace detail

/// K_n. The empty web is rejected here; use `discrete(0)` for it.
inline CoherentSpace complete(std::size_t n) {
  if (n == 0) throw ContractError("complete(n) requires n >= 1");
  return detail::space_from_predicate(n, [](std::size_t, std::size_t) { return true; });
}

/// n vertices, only the reflexive loops.
inline CoherentSpace discrete(std::size_t n) {
  return detail::space_from_predicate(n, [](std::size_t, std::size_t) { return false; });
}

/// Path 0 - 1 - ... - (n-1).
inline CoherentSpace path(std::size_t n) {
  return detail::space_from_predicate(n, [](std::size_t i, std::size_t j) { return j == i + 1; });
}

/// Cycle on n >= 3 vertices.
inline CoherentSpace cycle(std::size_t n) {
  if (n < 3) throw ContractError("cycle(n) requires n >= 3");
  return detail::space_from_predicate(
      n, [n](std::size_t i, std::size_t j) { return j == i + 1 || (i == 0 && j == n - 1); });
}

/// 1-based block index of vertex v in the triangular layout: block b holds
/// the positions [b(b-1)/2, b(b+1)/2).
inline std::size_t triangular_block(std::uint64_t v) {
  std::size_t b = 1;
  while (std::uint64_t{b} * (b + 1) / 2 <= v) ++b;
  return b;
}

/// Disjoint union of the complete graphs K_1, ..., K_n.
inline CoherentSpace disjoint_kn(std::size_t blocks) {
  if (blocks == 0) throw ContractError("disjoint_kn(n) requires n >= 1");
  const std::size_t n = blocks * (blocks + 1) / 2;
  return detail::space_from_predicate(n, [](std::size_t i, std::size_t j) {
    return triangular_block(i) == triangular_block(j);
  });
}

/// Reflexive closure of the complement.
inline CoherentSpace dual(const CoherentSpace& c) {
  const VertexSet full = c.full();
  std::vector<VertexSet> adj(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) adj[i] = (full - c.strict_neighbours(i)).without(i);
  return CoherentSpace(c.web(), std::move(adj));
}

/// Componentwise tensor. The pair of positions (p, q) sits at position
/// p * |C2| + q, which is also its label.
inline CoherentSpace tensor(const CoherentSpace& c1, const CoherentSpace& c2) {
  const std::size_t n1 = c1.size();
  const std::size_t n2 = c2.size();
  if (n1 * n2 > kMaxWeb) {
    throw SizeLimitError("tensor web of " + std::to_string(n1 * n2) + " vertices exceeds " +
                         std::to_string(kMaxWeb));
  }
  return detail::space_from_predicate(n1 * n2, [&](std::size_t u, std::size_t v) {
    return c1.coherent(u / n2, v / n2) && c2.coherent(u % n2, v % n2);
  });
}

/// Disjoint union: C1 occupies positions [0, |C1|), C2 the rest; cross pairs
/// are incoherent.
inline CoherentSpace plus(const CoherentSpace& c1, const CoherentSpace& c2) {
  const std::size_t n1 = c1.size();
  return detail::space_from_predicate(n1 + c2.size(), [&](std::size_t u, std::size_t v) {
    if (u < n1 && v < n1) return c1.coherent(u, v);
    if (u >= n1 && v >= n1) return c2.coherent(u - n1, v - n1);
    return false;
  });
}

/// Induced subspace on x, relabelled 0..|x|-1 in position order.
inline CoherentSpace restrict_to(const CoherentSpace& c, VertexSet x) {
  c.require_subset(x);
  const auto pos = x.positions();
  return detail::space_from_predicate(
      pos.size(), [&](std::size_t i, std::size_t j) { return c.coherent(pos[i], pos[j]); });
}

inline bool is_clique(const CoherentSpace& c, VertexSet x) {
  c.require_subset(x);
  for (auto v : x) {
    if (!(x.without(v)).is_subset_of(c.strict_neighbours(v))) return false;
  }
  return true;
}

inline bool is_clique(const CoherentSpace& c, std::span<const Vertex> labels) {
  return is_clique(c, c.set_of(labels));
}

inline bool is_anticlique(const CoherentSpace& c, VertexSet x) {
  c.require_subset(x);
  for (auto v : x) {
    if (!(x & c.strict_neighbours(v)).empty()) return false;
  }
  return true;
}

/// A maximum clique inside x (deterministic choice).
inline VertexSet max_clique(const CoherentSpace& c, VertexSet x) {
  c.require_subset(x);
  return detail::max_clique(c.strict_adjacency(), x);
}

inline VertexSet max_anticlique(const CoherentSpace& c, VertexSet x) {
  return max_clique(dual(c), x);
}

/// Largest clique size within x.
inline std::size_t omega(const CoherentSpace& c, VertexSet x) { return max_clique(c, x).size(); }
inline std::size_t omega(const CoherentSpace& c) { return omega(c, c.full()); }

/// Largest anticlique size within x.
inline std::size_t alpha(const CoherentSpace& c, VertexSet x) {
  return max_anticlique(c, x).size();
}
inline std::size_t alpha(const CoherentSpace& c) { return alpha(c, c.full()); }

/// omega of every subset, indexed by bitmask.
inline std::vector<std::uint8_t> omega_table(const CoherentSpace& c,
                                             std::size_t cap = kDefaultEnumerationCap) {
  detail::require_cap(c.size(), cap, "omega_table");
  const std::uint64_t count = std::uint64_t{1} << c.size();
  std::vector<std::uint8_t> table(count, 0);
  for (std::uint64_t s = 1; s < count; ++s) {
    const VertexSet set(s);
    const std::size_t v = set.lowest();
    const VertexSet rest = set.without(v);
    const std::uint8_t skip = table[rest.bits()];
    const std::uint8_t take = table[(rest & c.strict_neighbours(v)).bits()] + 1;
    table[s] = std::max(skip, take);
  }
  return table;
}

inline std::vector<std::uint8_t> alpha_table(const CoherentSpace& c,
                                             std::size_t cap = kDefaultEnumerationCap) {
  return omega_table(dual(c), cap);
}

/// C(C): every clique, including the empty set and the singletons.
inline SetFamily cliques(const CoherentSpace& c, std::size_t cap = kDefaultEnumerationCap) {
  detail::require_cap(c.size(), cap, "cliques");
  const std::uint64_t count = std::uint64_t{1} << c.size();
  std::vector<bool> clique(count, false);
  std::vector<VertexSet> members;
  clique[0] = true;
  members.emplace_back(0);
  for (std::uint64_t s = 1; s < count; ++s) {
    const VertexSet set(s);
    const std::size_t v = set.lowest();
    const VertexSet rest = set.without(v);
    if (clique[rest.bits()] && rest.is_subset_of(c.strict_neighbours(v))) {
      clique[s] = true;
      members.push_back(set);
    }
  }
  return SetFamily(c.web(), std::move(members));
}

inline SetFamily anticliques(const CoherentSpace& c, std::size_t cap = kDefaultEnumerationCap) {
  return cliques(dual(c), cap);
}

}  // namespace cohfin
