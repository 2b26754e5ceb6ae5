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
 * Non-uniform coherent spaces: every unordered pair, loops included, is
 * labelled strict-coherent, neutral or strict-incoherent. Duality swaps the
 * strict labels and fixes neutral ones.
 *
 * Cliques come in two modes. A lax clique has every pair (loops included)
 * strict-coherent or neutral; a strict clique has every pair (loops
 * included) strict-coherent. Anticliques are cliques of the dual in the
 * same mode. Since loops carry labels, a singleton with a neutral loop is a
 * lax clique and a lax anticlique but neither strictly.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cohfin/bounded_dual.hpp"
#include "cohfin/errors.hpp"
#include "cohfin/law_report.hpp"
#include "cohfin/ramsey.hpp"
#include "cohfin/space.hpp"

namespace cohfin {

enum class PairLabel : std::uint8_t { strict_coherent = 0, neutral = 1, strict_incoherent = 2 };

inline const char* to_string(PairLabel l) {
  switch (l) {
    case PairLabel::strict_coherent: return "strict-coherent";
    case PairLabel::neutral: return "neutral";
    case PairLabel::strict_incoherent: return "strict-incoherent";
  }
  return "?";
}

inline PairLabel pair_label_from_string(const std::string& s) {
  if (s == "strict-coherent") return PairLabel::strict_coherent;
  if (s == "neutral") return PairLabel::neutral;
  if (s == "strict-incoherent") return PairLabel::strict_incoherent;
  throw ContractError("unknown pair label '" + s + "'");
}

enum class Mode { lax, strict };

inline const char* to_string(Mode m) { return m == Mode::lax ? "lax" : "strict"; }

/// Which notion of clique and which notion of finitely incoherent set are
/// paired.
struct Variant {
  Mode clique_mode = Mode::lax;
  Mode fin_mode = Mode::lax;

  friend bool operator==(const Variant&, const Variant&) = default;
};

inline std::string to_string(Variant v) {
  return std::string(to_string(v.clique_mode)) + "/" + to_string(v.fin_mode);
}

class NonUniformSpace {
 public:
  NonUniformSpace() = default;

  /// `labels` is a full symmetric n × n matrix in row-major order.
  NonUniformSpace(std::vector<Vertex> web, std::vector<PairLabel> labels)
      : web_(std::move(web)), labels_(std::move(labels)) {
    const std::size_t n = web_.size();
    if (n > kMaxWeb) {
      throw SizeLimitError("web of " + std::to_string(n) + " vertices exceeds " +
                           std::to_string(kMaxWeb));
    }
    if (labels_.size() != n * n) throw ContractError("label matrix size does not match web");
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (label(i, j) != label(j, i)) {
          throw ContractError("labels are not symmetric on pair (" + std::to_string(web_[i]) +
                              ", " + std::to_string(web_[j]) + ")");
        }
      }
    }
  }

  template <class LabelOf>
  static NonUniformSpace from_function(std::size_t n, LabelOf&& label_of) {
    auto web = detail::iota_web(n);
    std::vector<PairLabel> labels(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        labels[i * n + j] = labels[j * n + i] = label_of(i, j);
      }
    }
    return NonUniformSpace(std::move(web), std::move(labels));
  }

  std::size_t size() const noexcept { return web_.size(); }
  const std::vector<Vertex>& web() const noexcept { return web_; }
  VertexSet full() const noexcept { return VertexSet::first(size()); }
  PairLabel label(std::size_t i, std::size_t j) const { return labels_[i * size() + j]; }

  friend bool operator==(const NonUniformSpace&, const NonUniformSpace&) = default;

 private:
  std::vector<Vertex> web_;
  std::vector<PairLabel> labels_;
};

inline NonUniformSpace all_neutral(std::size_t n) {
  return NonUniformSpace::from_function(n, [](std::size_t, std::size_t) { return PairLabel::neutral; });
}

/// Strict labels swapped, neutral labels fixed.
inline NonUniformSpace dual_nu(const NonUniformSpace& nu) {
  std::vector<PairLabel> labels;
  labels.reserve(nu.size() * nu.size());
  for (std::size_t i = 0; i < nu.size(); ++i) {
    for (std::size_t j = 0; j < nu.size(); ++j) {
      const PairLabel l = nu.label(i, j);
      labels.push_back(l == PairLabel::strict_coherent     ? PairLabel::strict_incoherent
                       : l == PairLabel::strict_incoherent ? PairLabel::strict_coherent
                                                           : PairLabel::neutral);
    }
  }
  return NonUniformSpace(nu.web(), std::move(labels));
}

/// Loops neutral, coherent pairs strict-coherent, the rest strict-incoherent.
inline NonUniformSpace embed_coherent(const CoherentSpace& c) {
  std::vector<PairLabel> labels;
  labels.reserve(c.size() * c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      labels.push_back(i == j               ? PairLabel::neutral
                       : c.coherent(i, j) ? PairLabel::strict_coherent
                                          : PairLabel::strict_incoherent);
    }
  }
  return NonUniformSpace(c.web(), std::move(labels));
}

namespace detail {

inline bool clique_label(PairLabel l, Mode mode) {
  return l == PairLabel::strict_coherent || (mode == Mode::lax && l == PairLabel::neutral);
}

/// The mode-cliques of `nu` are exactly the cliques of the returned space
/// that lie inside `allowed` (vertices whose loop qualifies).
struct ModeGraph {
  CoherentSpace graph;
  VertexSet allowed;
};

inline ModeGraph mode_graph(const NonUniformSpace& nu, Mode mode) {
  ModeGraph g;
  for (std::size_t i = 0; i < nu.size(); ++i) {
    if (clique_label(nu.label(i, i), mode)) g.allowed.insert(i);
  }
  g.graph = CoherentSpace(nu.web(), [&] {
    std::vector<VertexSet> adj(nu.size());
    for (std::size_t i = 0; i < nu.size(); ++i) {
      for (std::size_t j = 0; j < nu.size(); ++j) {
        if (i != j && clique_label(nu.label(i, j), mode)) adj[i].insert(j);
      }
    }
    return adj;
  }());
  return g;
}

inline void require_within(const NonUniformSpace& nu, VertexSet x) {
  if (!x.is_subset_of(nu.full())) throw ContractError("vertex set leaves the web");
}

}  // namespace detail

inline bool is_clique_nu(const NonUniformSpace& nu, VertexSet x, Mode mode) {
  detail::require_within(nu, x);
  const auto g = detail::mode_graph(nu, mode);
  return x.is_subset_of(g.allowed) && is_clique(g.graph, x);
}

inline bool is_anticlique_nu(const NonUniformSpace& nu, VertexSet x, Mode mode) {
  return is_clique_nu(dual_nu(nu), x, mode);
}

/// Largest mode-clique inside x.
inline VertexSet max_clique_nu(const NonUniformSpace& nu, VertexSet x, Mode mode) {
  detail::require_within(nu, x);
  const auto g = detail::mode_graph(nu, mode);
  return max_clique(g.graph, x & g.allowed);
}

inline VertexSet max_anticlique_nu(const NonUniformSpace& nu, VertexSet x, Mode mode) {
  return max_clique_nu(dual_nu(nu), x, mode);
}

inline SetFamily cliques_nu(const NonUniformSpace& nu, Mode mode,
                            std::size_t cap = kDefaultEnumerationCap) {
  const auto g = detail::mode_graph(nu, mode);
  std::vector<VertexSet> members;
  for (auto x : cliques(g.graph, cap)) {
    if (x.is_subset_of(g.allowed)) members.push_back(x);
  }
  return SetFamily(nu.web(), std::move(members));
}

/// Subsets whose largest mode-anticlique has at most k vertices.
inline SetFamily fin_nu(const NonUniformSpace& nu, Mode mode, IncoherenceThreshold k,
                        std::size_t cap = kDefaultEnumerationCap) {
  const auto g = detail::mode_graph(dual_nu(nu), mode);
  const auto table = omega_table(g.graph, cap);
  std::vector<VertexSet> members;
  for (std::uint64_t s = 0; s < table.size(); ++s) {
    if (table[(VertexSet(s) & g.allowed).bits()] <= k.value()) members.emplace_back(s);
  }
  return SetFamily(nu.web(), std::move(members));
}

/// Concrete evidence that a clique/finiteness variant breaks one of the
/// uniform laws.
struct FailureWitness {
  Variant variant;
  bool found = false;
  std::string law;            ///< which law fails
  std::string detail;         ///< human-readable summary
  NonUniformSpace space;
  VertexSet set;              ///< the offending subset
  VertexSet inner;            ///< anticlique inside `set` (lax/lax)
  std::string missing_from;   ///< mixed variants: side lacking `set`
  std::uint64_t ramsey_bound = 0;  ///< strict/strict
};

namespace detail {

/// Labelled spaces on n vertices, lexicographic over the pairs
/// (0,0), (0,1), ..., (0,n-1), (1,1), ... with labels in enum order.
template <class Visit>
bool for_each_labelled_space(std::size_t n, Visit&& visit) {
  const std::size_t pairs = n * (n + 1) / 2;
  std::vector<std::uint8_t> digits(pairs, 0);
  while (true) {
    std::vector<PairLabel> labels(n * n);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j, ++idx) {
        labels[i * n + j] = labels[j * n + i] = static_cast<PairLabel>(digits[idx]);
      }
    }
    if (visit(NonUniformSpace(iota_web(n), std::move(labels)))) return true;
    // Increment with the last pair varying fastest.
    std::size_t p = pairs;
    while (p > 0 && digits[p - 1] == 2) digits[--p] = 0;
    if (p == 0) return false;
    ++digits[p - 1];
  }
}

}  // namespace detail

/// Searches for the failure each variant exhibits.
///
///  - lax/lax: a lax clique holding a lax anticlique of k+1 vertices, so
///    cliques are not all k-incoherent (the all-neutral space on k+1
///    vertices).
///  - strict/strict: a set with no strict clique or strict anticlique
///    above k, yet at least ramsey_upper([k+1, k+1]) vertices; the
///    all-neutral space on `max_n` vertices. Only the three-color
///    trichotomy (a large pairwise-neutral set) survives.
///  - mixed: the first labelled space (by size, then label order) on at
///    most `max_n` vertices where dual_k(cliques) and the k-incoherent sets
///    of the dual differ, with the subset in the difference.
inline FailureWitness failure_witness(Variant variant, std::size_t max_n, IncoherenceThreshold k,
                                      std::size_t cap = kDefaultEnumerationCap) {
  FailureWitness w;
  w.variant = variant;
  const std::size_t kv = k.value();
  if (variant.clique_mode == Mode::lax && variant.fin_mode == Mode::lax) {
    w.law = "cliques_are_finitely_incoherent";
    if (kv + 1 > max_n) {
      w.detail = "no witness within " + std::to_string(max_n) + " vertices";
      return w;
    }
    w.space = all_neutral(kv + 1);
    w.set = w.space.full();
    w.inner = max_anticlique_nu(w.space, w.set, Mode::lax);
    w.found = is_clique_nu(w.space, w.set, Mode::lax) && w.inner.size() > kv &&
              !fin_nu(w.space, Mode::lax, k, cap).contains(w.set);
    w.detail = "a lax clique containing a lax anticlique of " + std::to_string(w.inner.size()) +
               " vertices";
    return w;
  }
  if (variant.clique_mode == Mode::strict && variant.fin_mode == Mode::strict) {
    w.law = "two_color_ramsey_escape";
    const std::size_t sizes[2] = {kv + 1, kv + 1};
    w.ramsey_bound = ramsey_upper(sizes, 2);
    if (max_n < w.ramsey_bound) {
      w.detail = "max_n is below the two-color bound " + std::to_string(w.ramsey_bound);
      return w;
    }
    w.space = all_neutral(max_n);
    w.set = w.space.full();
    const std::size_t sc = max_clique_nu(w.space, w.set, Mode::strict).size();
    const std::size_t sa = max_anticlique_nu(w.space, w.set, Mode::strict).size();
    w.found = sc <= kv && sa <= kv && w.set.size() >= w.ramsey_bound;
    w.detail = "no strict clique or anticlique above " + std::to_string(kv) + " on " +
               std::to_string(w.set.size()) + " pairwise-neutral vertices";
    return w;
  }
  w.law = "clique_dual_equals_dual_incoherence";
  if (max_n > 4) throw SizeLimitError("mixed-variant search is limited to 4 vertices");
  if (kv == 0) throw ContractError("mixed-variant search requires k >= 1");
  const BoundedDualThreshold m(kv);
  for (std::size_t n = 1; n <= max_n && !w.found; ++n) {
    detail::for_each_labelled_space(n, [&](const NonUniformSpace& nu) {
      const SetFamily lhs = dual_m(cliques_nu(nu, variant.clique_mode, cap), m, cap);
      const SetFamily rhs = fin_nu(dual_nu(nu), variant.fin_mode, k, cap);
      auto d = first_difference(lhs, rhs);
      if (!d) return false;
      w.found = true;
      w.space = nu;
      w.set = *d;
      w.missing_from = lhs.contains(*d) ? "incoherent_in_dual" : "dual_of_cliques";
      w.detail = std::string("inclusion fails: set lies in ") +
                 (lhs.contains(*d) ? "dual_of_cliques" : "incoherent_in_dual") + " only";
      return true;
    });
  }
  if (!w.found) w.detail = "no witness within " + std::to_string(max_n) + " vertices";
  return w;
}

/// Outcome of the three-color extraction.
struct Trichotomy {
  enum class Kind { strict_clique, strict_anticlique, neutral_set, small };
  Kind kind = Kind::small;
  VertexSet vertices;
  std::uint64_t bound = 0;  ///< ramsey_upper([s, s, s], 3)
};

inline const char* to_string(Trichotomy::Kind k) {
  switch (k) {
    case Trichotomy::Kind::strict_clique: return "strict-clique";
    case Trichotomy::Kind::strict_anticlique: return "strict-anticlique";
    case Trichotomy::Kind::neutral_set: return "neutral-set";
    case Trichotomy::Kind::small: return "small";
  }
  return "?";
}

/// Finds s vertices of x whose distinct pairs are all strict-coherent, all
/// strict-incoherent or all neutral. Loops are not consulted. Guaranteed to
/// succeed once #x >= ramsey_upper([s, s, s], 3).
inline Trichotomy trichotomy_extract(const NonUniformSpace& nu, VertexSet x, std::size_t s) {
  detail::require_within(nu, x);
  const std::size_t sizes[3] = {s, s, s};
  Trichotomy out;
  out.bound = ramsey_upper(sizes, 3);
  const auto coloring = EdgeColoring::from_function(nu.size(), 3, [&](std::size_t i, std::size_t j) {
    return static_cast<unsigned>(nu.label(i, j));
  });
  auto w = find_mono(coloring, sizes, x);
  if (!w) {
    if (x.size() >= out.bound) throw std::logic_error("three-color extraction failed above bound");
    return out;
  }
  if (!is_monochromatic(coloring, *w)) throw std::logic_error("three-color witness not verified");
  out.vertices = w->vertices;
  out.kind = w->color == 0   ? Trichotomy::Kind::strict_clique
             : w->color == 2 ? Trichotomy::Kind::strict_anticlique
                             : Trichotomy::Kind::neutral_set;
  return out;
}

}  // namespace cohfin
