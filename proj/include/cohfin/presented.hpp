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
 * Countable coherent spaces on the naturals, given by a coherence oracle.
 *
 * Whether such a space holds an infinite clique or anticlique is never
 * decided here. What can be inspected is a finite window: truncations,
 * certificate prefixes, and the growth of omega, alpha and the anticlique
 * cover number along a list of window sizes.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cohfin/bounded_dual.hpp"
#include "cohfin/errors.hpp"
#include "cohfin/law_report.hpp"
#include "cohfin/relation.hpp"
#include "cohfin/space.hpp"

namespace cohfin {

using CoherenceOracle = std::function<bool(std::uint64_t, std::uint64_t)>;

/// Claimed infinite clique or anticlique, as a strictly increasing
/// enumeration of its vertices.
struct Certificate {
  enum class Kind { infinite_clique, infinite_anticlique };
  Kind kind = Kind::infinite_clique;
  std::function<std::uint64_t(std::uint64_t)> generator;
  std::string description;
};

inline const char* to_string(Certificate::Kind k) {
  return k == Certificate::Kind::infinite_clique ? "infinite-clique" : "infinite-anticlique";
}

/// Number of leading vertices on which a new PresentedSpace's oracle is
/// spot-checked for symmetry and reflexivity.
inline constexpr std::size_t kOracleSpotCheckDepth = 32;

namespace detail {

/// First pair of the window {0..n-1} on which the oracle breaks symmetry
/// or reflexivity.
inline std::optional<std::pair<std::uint64_t, std::uint64_t>> oracle_violation(
    const CoherenceOracle& coh, std::size_t n) {
  for (std::uint64_t i = 0; i < n; ++i) {
    if (!coh(i, i)) return std::pair{i, i};
    for (std::uint64_t j = i + 1; j < n; ++j) {
      if (coh(i, j) != coh(j, i)) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

inline std::string pair_text(std::uint64_t a, std::uint64_t b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace detail

/// A countable coherent space on the naturals.
class PresentedSpace {
 public:
  PresentedSpace(std::string name, CoherenceOracle coherent,
                 std::vector<Certificate> certificates = {},
                 std::size_t spot_check_depth = kOracleSpotCheckDepth)
      : name_(std::move(name)), coh_(std::move(coherent)), certs_(std::move(certificates)) {
    if (!coh_) throw ContractError("presented space '" + name_ + "' has no oracle");
    if (auto bad = detail::oracle_violation(coh_, spot_check_depth)) {
      throw ContractError("oracle of '" + name_ + "' is not symmetric and reflexive on pair " +
                          detail::pair_text(bad->first, bad->second));
    }
  }

  const std::string& name() const noexcept { return name_; }
  bool coherent(std::uint64_t a, std::uint64_t b) const { return coh_(a, b); }
  const CoherenceOracle& oracle() const noexcept { return coh_; }
  const std::vector<Certificate>& certificates() const noexcept { return certs_; }

 private:
  std::string name_;
  CoherenceOracle coh_;
  std::vector<Certificate> certs_;
};

/// The finite space on 0..n-1 induced by the oracle.
inline CoherentSpace truncate(const PresentedSpace& p, std::size_t n) {
  if (n > kMaxWeb) {
    throw SizeLimitError("truncation to " + std::to_string(n) + " vertices exceeds " +
                         std::to_string(kMaxWeb));
  }
  if (auto bad = detail::oracle_violation(p.oracle(), n)) {
    throw ContractError("oracle of '" + p.name() + "' is not symmetric and reflexive on pair " +
                        detail::pair_text(bad->first, bad->second));
  }
  return detail::space_from_predicate(n, [&](std::size_t i, std::size_t j) {
    return p.coherent(i, j);
  });
}

/// Every natural coherent with every other; certified infinite clique.
inline PresentedSpace nat_complete() {
  return PresentedSpace("nat_complete", [](std::uint64_t, std::uint64_t) { return true; },
                        {{Certificate::Kind::infinite_clique,
                          [](std::uint64_t i) { return i; }, "identity"}});
}

/// Only the loops; certified infinite anticlique.
inline PresentedSpace nat_discrete() {
  return PresentedSpace("nat_discrete", [](std::uint64_t a, std::uint64_t b) { return a == b; },
                        {{Certificate::Kind::infinite_anticlique,
                          [](std::uint64_t i) { return i; }, "identity"}});
}

/// Disjoint union of K_1, K_2, K_3, ... in the triangular layout. The first
/// vertex of each block forms a certified infinite anticlique.
inline PresentedSpace blocks_kn() {
  return PresentedSpace(
      "blocks_kn",
      [](std::uint64_t a, std::uint64_t b) { return triangular_block(a) == triangular_block(b); },
      {{Certificate::Kind::infinite_anticlique,
        [](std::uint64_t i) { return (i + 1) * i / 2; }, "first vertex of each block"}});
}

/// The single cross-block edge added by blocks_kn_edge_edited.
inline constexpr VertexPair kBlocksKnEdit{0, 1};

/// blocks_kn with the cross-block pair {0, 1} made coherent.
inline PresentedSpace blocks_kn_edge_edited() {
  return PresentedSpace("blocks_kn_edge_edited", [](std::uint64_t a, std::uint64_t b) {
    if (std::min(a, b) == kBlocksKnEdit.first && std::max(a, b) == kBlocksKnEdit.second) {
      return true;
    }
    return triangular_block(a) == triangular_block(b);
  });
}

inline std::vector<PresentedSpace> builtin_families() {
  return {nat_complete(), nat_discrete(), blocks_kn(), blocks_kn_edge_edited()};
}

/// Looks up a builtin family by name.
inline PresentedSpace builtin_family(const std::string& name) {
  for (auto& p : builtin_families()) {
    if (p.name() == name) return p;
  }
  throw ContractError("unknown presented family '" + name + "'");
}

/// Checks the first `depth` generated vertices of a certificate pairwise.
inline LawReport check_certificate(const PresentedSpace& p, const Certificate& cert,
                                   std::size_t depth) {
  if (depth < 2) throw ContractError("certificate depth must be >= 2");
  LawReport report;
  report.law = "certificate";
  report.params = {{"space", p.name()},
                   {"kind", to_string(cert.kind)},
                   {"depth", depth},
                   {"generator", cert.description}};
  std::vector<std::uint64_t> verts;
  verts.reserve(depth);
  for (std::uint64_t i = 0; i < depth; ++i) {
    const std::uint64_t v = cert.generator(i);
    if (!verts.empty() && v <= verts.back()) {
      throw ContractError("certificate generator is not strictly increasing at index " +
                          std::to_string(i));
    }
    verts.push_back(v);
  }
  const bool want = cert.kind == Certificate::Kind::infinite_clique;
  for (std::size_t i = 0; i < verts.size() && report.pass; ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      if (p.coherent(verts[i], verts[j]) != want) {
        report.fail({{"pair", {verts[i], verts[j]}}, {"indices", {i, j}}});
        break;
      }
    }
  }
  return report;
}

struct GrowthRow {
  std::size_t n = 0;
  std::size_t omega = 0;
  std::size_t alpha = 0;
};

inline std::vector<GrowthRow> growth_profile(const PresentedSpace& p,
                                             std::span<const std::size_t> sample_sizes) {
  std::vector<GrowthRow> rows;
  for (auto n : sample_sizes) {
    const auto c = truncate(p, n);
    rows.push_back({n, omega(c), alpha(c)});
  }
  return rows;
}

struct CoverRow {
  std::size_t n = 0;
  std::size_t cover_lower_bound = 0;
};

/// Lower bound on the anticlique cover number of each truncation.
inline std::vector<CoverRow> cover_growth(const PresentedSpace& p,
                                          std::span<const std::size_t> sample_sizes) {
  std::vector<CoverRow> rows;
  for (auto n : sample_sizes) {
    rows.push_back({n, min_anticlique_cover_bounds(truncate(p, n)).lower});
  }
  return rows;
}

struct EditRow {
  std::size_t n = 0;
  std::size_t alpha_difference = 0;
  std::size_t omega_difference = 0;
  std::size_t edits_in_window = 0;
};

/// Compares truncations of two spaces that differ exactly on the declared
/// pairs. Each row's differences are bounded by the number of edits.
///
/// Throws ContractError if the oracles disagree on an undeclared pair of a
/// window.
inline std::vector<EditRow> edit_comparison(const PresentedSpace& p, const PresentedSpace& edited,
                                            std::span<const VertexPair> edits,
                                            std::span<const std::size_t> sample_sizes) {
  auto declared = [&](std::uint64_t a, std::uint64_t b) {
    return std::any_of(edits.begin(), edits.end(), [&](VertexPair e) {
      return (e.first == a && e.second == b) || (e.first == b && e.second == a);
    });
  };
  std::vector<EditRow> rows;
  for (auto n : sample_sizes) {
    const auto c = truncate(p, n);
    const auto d = truncate(edited, n);
    std::size_t in_window = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (c.coherent(i, j) == d.coherent(i, j)) continue;
        if (!declared(i, j)) {
          throw ContractError("oracles of '" + p.name() + "' and '" + edited.name() +
                              "' differ on undeclared pair " + detail::pair_text(i, j));
        }
        ++in_window;
      }
    }
    auto diff = [](std::size_t x, std::size_t y) { return x > y ? x - y : y - x; };
    rows.push_back({n, diff(alpha(c), alpha(d)), diff(omega(c), omega(d)), in_window});
  }
  return rows;
}

}  // namespace cohfin
