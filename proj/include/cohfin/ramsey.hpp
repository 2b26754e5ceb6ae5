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

/*
 * Finite Ramsey theory for edge colorings with 2 or 3 colors.
 *
 * Upper bounds follow the classical induction:
 *
 *   U(..., 1, ...) = 1
 *   U(..., 2, ...) = U(the same sizes with that entry dropped)
 *   U(s)           = s                               (one color left)
 *   U(s_1..s_c)    = sum_i U(s_1..s_i - 1..s_c) - (c - 2)
 *
 * which gives U(a, b) <= U(a-1, b) + U(a, b-1) for two colors. Witness
 * extraction replays the pigeonhole argument behind that induction, so a
 * witness is always found once the vertex count reaches the bound.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cohfin/errors.hpp"
#include "cohfin/relation.hpp"
#include "cohfin/space.hpp"
#include "cohfin/vertex_set.hpp"

namespace cohfin {

/// A coloring of the unordered pairs of {0..n-1} with 2 or 3 colors.
///
/// Pair colors are listed in the order (0,1), (0,2), ..., (0,n-1), (1,2), ...
class EdgeColoring {
 public:
  EdgeColoring(std::size_t n, unsigned colors, std::vector<std::uint8_t> pair_colors)
      : n_(n), colors_(colors), pair_colors_(std::move(pair_colors)) {
    if (colors < 2 || colors > 3) throw ContractError("edge colorings use 2 or 3 colors");
    if (n > kMaxWeb) {
      throw SizeLimitError("coloring on " + std::to_string(n) + " vertices exceeds " +
                           std::to_string(kMaxWeb));
    }
    if (pair_colors_.size() != pair_count(n)) {
      throw ContractError("coloring lists " + std::to_string(pair_colors_.size()) +
                          " pairs, expected " + std::to_string(pair_count(n)));
    }
    by_color_.assign(colors, std::vector<VertexSet>(n));
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j, ++idx) {
        const unsigned c = pair_colors_[idx];
        if (c >= colors) {
          throw ContractError("pair (" + std::to_string(i) + ", " + std::to_string(j) +
                              ") has color " + std::to_string(c) + " out of range");
        }
        by_color_[c][i].insert(j);
        by_color_[c][j].insert(i);
      }
    }
  }

  template <class ColorOf>
  static EdgeColoring from_function(std::size_t n, unsigned colors, ColorOf&& color_of) {
    std::vector<std::uint8_t> pc;
    pc.reserve(pair_count(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) pc.push_back(static_cast<std::uint8_t>(color_of(i, j)));
    }
    return EdgeColoring(n, colors, std::move(pc));
  }

  static EdgeColoring uniform(std::size_t n, unsigned colors, unsigned color) {
    return EdgeColoring(n, colors, std::vector<std::uint8_t>(pair_count(n), color));
  }

  /// Color 0 on coherent pairs, color 1 on incoherent pairs (positions).
  static EdgeColoring from_space(const CoherentSpace& c) {
    return from_function(c.size(), 2,
                         [&](std::size_t i, std::size_t j) { return c.coherent(i, j) ? 0 : 1; });
  }

  static constexpr std::size_t pair_count(std::size_t n) noexcept { return n * (n - (n > 0)) / 2; }

  std::size_t vertex_count() const noexcept { return n_; }
  unsigned color_count() const noexcept { return colors_; }
  const std::vector<std::uint8_t>& pair_colors() const noexcept { return pair_colors_; }

  /// Color of pair {i, j}, i != j.
  unsigned color(std::size_t i, std::size_t j) const noexcept {
    if (i > j) std::swap(i, j);
    return pair_colors_[i * (2 * n_ - i - 1) / 2 + (j - i - 1)];
  }

  /// Vertices joined to v by an edge of color c.
  VertexSet neighbours(std::size_t v, unsigned c) const noexcept { return by_color_[c][v]; }
  std::span<const VertexSet> color_graph(unsigned c) const noexcept { return by_color_[c]; }

  friend bool operator==(const EdgeColoring& a, const EdgeColoring& b) {
    return a.n_ == b.n_ && a.colors_ == b.colors_ && a.pair_colors_ == b.pair_colors_;
  }

 private:
  std::size_t n_;
  unsigned colors_;
  std::vector<std::uint8_t> pair_colors_;
  std::vector<std::vector<VertexSet>> by_color_;
};

/// A set of vertices whose pairs all carry one color.
struct RamseyWitness {
  unsigned color = 0;
  VertexSet vertices;

  friend bool operator==(const RamseyWitness&, const RamseyWitness&) = default;
};

inline bool is_monochromatic(const EdgeColoring& coloring, const RamseyWitness& w) {
  if (!w.vertices.is_subset_of(VertexSet::first(coloring.vertex_count()))) return false;
  if (w.color >= coloring.color_count()) return false;
  for (auto v : w.vertices) {
    if (!w.vertices.without(v).is_subset_of(coloring.neighbours(v, w.color))) return false;
  }
  return true;
}

namespace detail {

struct ColorTarget {
  unsigned color;
  std::size_t size;
};

inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t s = a + b;
  if (s < a || s > (std::uint64_t{1} << 62)) {
    throw SizeLimitError("Ramsey upper bound overflows");
  }
  return s;
}

inline std::uint64_t upper_bound(std::vector<std::size_t> sizes,
                                 std::map<std::vector<std::size_t>, std::uint64_t>& memo) {
  std::sort(sizes.begin(), sizes.end());
  if (sizes.front() == 1) return 1;
  if (sizes.size() == 1) return sizes.front();
  if (sizes.front() == 2) {
    sizes.erase(sizes.begin());
    return upper_bound(std::move(sizes), memo);
  }
  if (auto it = memo.find(sizes); it != memo.end()) return it->second;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    auto dec = sizes;
    --dec[i];
    total = saturating_add(total, upper_bound(std::move(dec), memo));
  }
  total -= sizes.size() - 2;
  memo.emplace(sizes, total);
  return total;
}

inline std::uint64_t upper_bound(const std::vector<ColorTarget>& targets) {
  std::map<std::vector<std::size_t>, std::uint64_t> memo;
  std::vector<std::size_t> sizes;
  for (const auto& t : targets) sizes.push_back(t.size);
  return upper_bound(std::move(sizes), memo);
}

/// Pigeonhole extraction. Always succeeds when |s| >= upper_bound(targets).
inline std::optional<RamseyWitness> pigeonhole(const EdgeColoring& coloring, VertexSet s,
                                               std::vector<ColorTarget> targets) {
  if (s.empty() || targets.empty()) return std::nullopt;
  for (const auto& t : targets) {
    if (t.size <= 1) return RamseyWitness{t.color, s.take(t.size)};
  }
  for (std::size_t i = 0; i < targets.size();) {
    if (targets[i].size != 2) {
      ++i;
      continue;
    }
    for (auto v : s) {
      const VertexSet later = coloring.neighbours(v, targets[i].color) & s &
                              VertexSet(~VertexSet::first(v + 1).bits());
      if (!later.empty()) return RamseyWitness{targets[i].color, VertexSet::of({v, later.lowest()})};
    }
    // No pair of this color inside s: the color can be ignored.
    targets.erase(targets.begin() + static_cast<std::ptrdiff_t>(i));
  }
  if (targets.empty()) return std::nullopt;
  if (targets.size() == 1) {
    // Every pair of s carries the remaining color.
    if (s.size() >= targets[0].size) return RamseyWitness{targets[0].color, s.take(targets[0].size)};
    return std::nullopt;
  }
  const std::size_t pivot = s.lowest();
  const VertexSet rest = s.without(pivot);
  for (std::size_t i = 0; i < targets.size(); ++i) {
    auto dec = targets;
    --dec[i].size;
    const VertexSet part = coloring.neighbours(pivot, targets[i].color) & rest;
    if (part.size() < upper_bound(dec)) continue;
    auto w = pigeonhole(coloring, part, std::move(dec));
    if (!w) continue;
    if (w->color == targets[i].color) w->vertices.insert(pivot);
    return w;
  }
  return std::nullopt;
}

inline std::vector<ColorTarget> make_targets(std::span<const std::size_t> sizes, unsigned colors) {
  if (colors < 2 || colors > 3) throw ContractError("Ramsey bounds support 2 or 3 colors");
  if (sizes.size() != colors) {
    throw ContractError("expected " + std::to_string(colors) + " target sizes, got " +
                        std::to_string(sizes.size()));
  }
  std::vector<ColorTarget> targets;
  for (unsigned c = 0; c < colors; ++c) {
    if (sizes[c] == 0) throw ContractError("Ramsey target sizes must be >= 1");
    targets.push_back({c, sizes[c]});
  }
  return targets;
}

}  // namespace detail

/// Recurrence upper bound on the Ramsey number R(sizes) for `colors` colors.
inline std::uint64_t ramsey_upper(std::span<const std::size_t> sizes, unsigned colors) {
  return detail::upper_bound(detail::make_targets(sizes, colors));
}

inline std::uint64_t ramsey_upper(std::initializer_list<std::size_t> sizes) {
  return ramsey_upper(std::span<const std::size_t>(sizes.begin(), sizes.size()),
                      static_cast<unsigned>(sizes.size()));
}

/// A monochromatic set of `sizes[color]` vertices inside `within`, if one
/// exists.
///
/// The pigeonhole extraction runs first and is guaranteed to succeed when
/// |within| >= ramsey_upper(sizes). Below that bound an exact clique search
/// per color decides the question, so an empty result means no witness
/// exists at all.
inline std::optional<RamseyWitness> find_mono(const EdgeColoring& coloring,
                                              std::span<const std::size_t> sizes,
                                              VertexSet within) {
  auto targets = detail::make_targets(sizes, coloring.color_count());
  if (!within.is_subset_of(VertexSet::first(coloring.vertex_count()))) {
    throw ContractError("find_mono: vertex set leaves the coloring");
  }
  if (auto w = detail::pigeonhole(coloring, within, targets)) return w;
  for (const auto& t : targets) {
    const VertexSet clique = detail::max_clique(coloring.color_graph(t.color), within, t.size);
    if (clique.size() >= t.size) return RamseyWitness{t.color, clique.take(t.size)};
  }
  return std::nullopt;
}

inline std::optional<RamseyWitness> find_mono(const EdgeColoring& coloring,
                                              std::span<const std::size_t> sizes) {
  return find_mono(coloring, sizes, VertexSet::first(coloring.vertex_count()));
}

inline std::optional<RamseyWitness> find_mono(const EdgeColoring& coloring,
                                              std::initializer_list<std::size_t> sizes) {
  return find_mono(coloring, std::span<const std::size_t>(sizes.begin(), sizes.size()));
}

/// Result of an exhaustive two-color Ramsey computation.
struct RamseyExact {
  std::size_t value = 0;
  /// A coloring of K_{value-1} without a witness; absent when value == 1.
  std::optional<EdgeColoring> lower_witness;
  /// Colorings examined across all vertex counts.
  std::uint64_t colorings_checked = 0;
  /// Witness-free colorings of K_{value-1}.
  std::uint64_t witness_free_below = 0;
};

/// Least n such that every 2-coloring of K_n holds a color-0 set of size a
/// or a color-1 set of size b, established by exhaustion.
///
/// Refuses (InfeasibleError) when the recurrence bound exceeds `budget`
/// vertices; budgets above 7 are not accepted.
inline RamseyExact ramsey_exact(std::size_t a, std::size_t b, std::size_t budget = 6) {
  const std::size_t sizes[2] = {a, b};
  const std::uint64_t upper = ramsey_upper(sizes, 2);
  if (budget > 7) throw InfeasibleError("ramsey_exact budget is limited to 7 vertices");
  if (upper > budget) {
    throw InfeasibleError("ramsey_exact(" + std::to_string(a) + ", " + std::to_string(b) +
                          ") needs K_" + std::to_string(upper) + ", beyond the budget of " +
                          std::to_string(budget) + " vertices");
  }
  RamseyExact out;
  if (upper <= 1) {
    out.value = 1;
    return out;
  }
  // Having a witness on every coloring is monotone in n, so walk down from
  // the bound until a witness-free coloring appears.
  for (std::size_t n = upper; n >= 1; --n) {
    const std::size_t pairs = EdgeColoring::pair_count(n);
    std::optional<EdgeColoring> first_free;
    std::uint64_t free_count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      std::vector<std::uint8_t> pc(pairs);
      for (std::size_t p = 0; p < pairs; ++p) pc[p] = static_cast<std::uint8_t>((mask >> p) & 1U);
      EdgeColoring coloring(n, 2, std::move(pc));
      ++out.colorings_checked;
      if (!find_mono(coloring, sizes)) {
        ++free_count;
        if (!first_free) first_free = std::move(coloring);
      }
    }
    if (first_free) {
      if (n == upper) throw std::logic_error("Ramsey recurrence bound violated");
      out.value = n + 1;
      out.lower_witness = std::move(first_free);
      out.witness_free_below = free_count;
      return out;
    }
  }
  out.value = 1;
  return out;
}

/// Outcome of searching a vertex set for a large clique or anticlique.
struct CliqueOrAnticlique {
  enum class Kind { clique, anticlique, small };
  Kind kind = Kind::small;
  VertexSet vertices;          ///< the witness; empty for `small`
  std::uint64_t bound = 0;     ///< ramsey_upper([a+1, b+1])
  std::size_t set_size = 0;    ///< #x
};

/// Finds a clique of a+1 or an anticlique of b+1 vertices inside x.
///
/// The verdict `small` is returned only when neither exists, in which case
/// #x < ramsey_upper([a+1, b+1]) necessarily holds (and is re-checked).
inline CliqueOrAnticlique extract_clique_or_anticlique(const CoherentSpace& c, VertexSet x,
                                                       std::size_t a, std::size_t b) {
  c.require_subset(x);
  const std::size_t sizes[2] = {a + 1, b + 1};
  CliqueOrAnticlique out;
  out.bound = ramsey_upper(sizes, 2);
  out.set_size = x.size();
  const auto coloring = EdgeColoring::from_space(c);
  auto w = find_mono(coloring, sizes, x);
  if (!w) {
    if (x.size() >= out.bound) throw std::logic_error("pigeonhole extraction failed above bound");
    return out;
  }
  out.vertices = w->vertices;
  out.kind = w->color == 0 ? CliqueOrAnticlique::Kind::clique : CliqueOrAnticlique::Kind::anticlique;
  const bool ok = out.kind == CliqueOrAnticlique::Kind::clique ? is_clique(c, out.vertices)
                                                              : is_anticlique(c, out.vertices);
  if (!ok) throw std::logic_error("extracted witness failed verification");
  return out;
}

/// Result of fiber selection over an anticlique of a tensor.
struct TensorExtraction {
  VertexSet clique;       ///< clique of C1 inside the first projection
  VertexSet anticlique;   ///< one chosen fiber element per clique vertex, in C2
};

namespace detail {

inline std::pair<std::size_t, std::size_t> positions_of(const CoherentSpace& c1,
                                                        const CoherentSpace& c2, VertexPair p) {
  return {c1.position_of(p.first), c2.position_of(p.second)};
}

}  // namespace detail

/// Given an anticlique r' of tensor(C1, C2) and a clique x of C1 inside its
/// first projection, picks the smallest b in each fiber r'(a), a ∈ x. The
/// chosen elements are pairwise distinct and pairwise incoherent in C2.
///
/// When `clique` is omitted a maximum clique of the first projection is used.
inline TensorExtraction tensor_anticlique_extract(const CoherentSpace& c1, const CoherentSpace& c2,
                                                  const Relation& r_prime,
                                                  std::optional<VertexSet> clique = std::nullopt) {
  if (r_prime.source_web() != c1.web() || r_prime.target_web() != c2.web()) {
    throw WebMismatchError("tensor_anticlique_extract: relation webs differ from the spaces");
  }
  const auto& pairs = r_prime.pairs();
  std::vector<std::pair<std::size_t, std::size_t>> pos;
  for (auto p : pairs) pos.push_back(detail::positions_of(c1, c2, p));
  for (std::size_t i = 0; i < pos.size(); ++i) {
    for (std::size_t j = i + 1; j < pos.size(); ++j) {
      if (c1.coherent(pos[i].first, pos[j].first) && c2.coherent(pos[i].second, pos[j].second)) {
        auto show = [](VertexPair p) {
          return "(" + std::to_string(p.first) + ", " + std::to_string(p.second) + ")";
        };
        throw ContractError("relation is not an anticlique of the tensor: " + show(pairs[i]) +
                            " and " + show(pairs[j]) + " are coherent");
      }
    }
  }
  VertexSet first_projection;
  for (auto [a, b] : pos) first_projection.insert(a);
  VertexSet x;
  if (clique) {
    x = *clique;
    if (!x.is_subset_of(first_projection) || !is_clique(c1, x)) {
      throw ContractError("supplied set is not a clique inside the first projection");
    }
  } else {
    x = max_clique(c1, first_projection);
  }
  TensorExtraction out{x, {}};
  for (auto a : x) {
    std::size_t chosen = kMaxWeb;
    for (auto [pa, pb] : pos) {
      if (pa == a) chosen = std::min(chosen, pb);
    }
    out.anticlique.insert(chosen);
  }
  if (out.anticlique.size() != x.size() || !is_anticlique(c2, out.anticlique)) {
    throw std::logic_error("fiber selection did not produce an anticlique");
  }
  return out;
}

}  // namespace cohfin
