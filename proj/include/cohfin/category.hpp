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
 * Morphisms between coherent spaces as relations.
 *
 * A Coh morphism C -> D is a clique of hom_space(C, D) = (C ⊗ D^⊥)^⊥.
 * A bounded-Fin morphism at threshold k is a subset of that web with no
 * anticlique larger than k. The finitely-incoherent functor is the
 * identity on relations, so preservation of identities and composition is
 * exact; what it adds is that every Coh morphism is a bounded-Fin morphism
 * at k = 1.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cohfin/bounded_dual.hpp"
#include "cohfin/errors.hpp"
#include "cohfin/law_report.hpp"
#include "cohfin/relation.hpp"
#include "cohfin/space.hpp"

namespace cohfin {

/// (C ⊗ D^⊥)^⊥. Position p * |D| + q stands for the pair
/// (C.web[p], D.web[q]).
inline CoherentSpace hom_space(const CoherentSpace& c, const CoherentSpace& d) {
  return dual(tensor(c, dual(d)));
}

/// The hom-space vertex set of a relation from C to D.
inline VertexSet relation_to_set(const CoherentSpace& c, const CoherentSpace& d,
                                 const Relation& r) {
  if (r.source_web() != c.web() || r.target_web() != d.web()) {
    throw WebMismatchError("relation webs do not match the spaces");
  }
  VertexSet s;
  for (auto [a, b] : r.pairs()) s.insert(c.position_of(a) * d.size() + d.position_of(b));
  return s;
}

inline Relation set_to_relation(const CoherentSpace& c, const CoherentSpace& d, VertexSet s) {
  std::vector<VertexPair> pairs;
  for (auto p : s) pairs.emplace_back(c.web()[p / d.size()], d.web()[p % d.size()]);
  return Relation(c.web(), d.web(), std::move(pairs));
}

inline bool is_coh_morphism(const CoherentSpace& c, const CoherentSpace& d, const Relation& r) {
  return is_clique(hom_space(c, d), relation_to_set(c, d, r));
}

inline bool is_finbounded_morphism(const CoherentSpace& c, const CoherentSpace& d,
                                   const Relation& r, IncoherenceThreshold k) {
  return alpha(hom_space(c, d), relation_to_set(c, d, r)) <= k.value();
}

/// Object part of the finitely-incoherent functor at threshold k.
inline SetFamily functor_object(const CoherentSpace& c, IncoherenceThreshold k,
                                std::size_t cap = kDefaultEnumerationCap) {
  return fin_k(c, k, cap);
}

/// Morphism part: a relation is sent to itself.
inline Relation functor_morphism(const Relation& r) { return r; }

/// Checks, for r: C -> D, that a Coh morphism is sent to a bounded-Fin
/// morphism at k = 1 and that identities and composition with identities
/// are preserved.
inline LawReport functor_check(const CoherentSpace& c, const CoherentSpace& d, const Relation& r) {
  LawReport report;
  report.law = "finitely_incoherent_functor";
  report.params = {{"k", 1}, {"source_size", c.size()}, {"target_size", d.size()},
                   {"relation_size", r.size()}, {"faithful", "identity on relations"}};
  const IncoherenceThreshold one(1);
  const bool coh = is_coh_morphism(c, d, r);
  if (coh && !is_finbounded_morphism(c, d, functor_morphism(r), one)) {
    report.fail({{"property", "coh_morphism_is_fin_morphism"}});
  }
  for (const auto* space : {&c, &d}) {
    const Relation id = identity(space->web());
    if (functor_morphism(id) != identity(space->web())) {
      report.fail({{"property", "identity_preserved"}});
    }
    if (!is_coh_morphism(*space, *space, id) ||
        !is_finbounded_morphism(*space, *space, functor_morphism(id), one)) {
      report.fail({{"property", "identity_is_morphism"}});
    }
  }
  const Relation left = compose(functor_morphism(r), functor_morphism(identity(c.web())));
  const Relation right = compose(functor_morphism(identity(d.web())), functor_morphism(r));
  if (left != functor_morphism(compose(r, identity(c.web()))) || left != r || right != r) {
    report.fail({{"property", "composition_with_identity"}});
  }
  return report;
}

/// Composition preservation for s: C -> D and r: D -> E, plus closure of
/// Coh morphisms under composition.
inline LawReport functor_composition_check(const CoherentSpace& c, const CoherentSpace& d,
                                           const CoherentSpace& e, const Relation& s,
                                           const Relation& r) {
  LawReport report;
  report.law = "functor_composition";
  report.params = {{"k", 1}};
  const Relation mapped_then_composed = compose(functor_morphism(r), functor_morphism(s));
  if (functor_morphism(compose(r, s)) != mapped_then_composed) {
    report.fail({{"property", "composition_preserved"}});
  }
  if (is_coh_morphism(c, d, s) && is_coh_morphism(d, e, r)) {
    const Relation rs = compose(r, s);
    if (!is_coh_morphism(c, e, rs)) report.fail({{"property", "coh_closed_under_composition"}});
    if (!is_finbounded_morphism(c, e, rs, IncoherenceThreshold(1))) {
      report.fail({{"property", "composite_is_fin_morphism"}});
    }
  }
  return report;
}

/// The smallest relation (by pair count, then lexicographically over
/// position-sorted pairs) that is a bounded-Fin morphism at k but not a Coh
/// morphism.
inline std::optional<Relation> non_fullness_witness(const CoherentSpace& c, const CoherentSpace& d,
                                                    IncoherenceThreshold k,
                                                    std::size_t cap = kDefaultEnumerationCap) {
  if (k.value() < 2) throw ContractError("non_fullness_witness requires k >= 2");
  const CoherentSpace hom = hom_space(c, d);
  const std::size_t n = hom.size();
  detail::require_cap(n, cap, "non_fullness_witness");
  // Lexicographic k-combinations of {0..n-1} for k = 1, 2, ...
  for (std::size_t size = 1; size <= n; ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      VertexSet s;
      for (auto i : idx) s.insert(i);
      if (!is_clique(hom, s) && alpha(hom, s) <= k.value()) return set_to_relation(c, d, s);
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

/// A finite multiset over web positions.
class FiniteMultiset {
 public:
  FiniteMultiset() = default;
  explicit FiniteMultiset(std::map<std::size_t, std::size_t> multiplicity)
      : mult_(std::move(multiplicity)) {
    for (auto [v, m] : mult_) {
      if (m == 0) throw ContractError("multiset multiplicities must be >= 1");
    }
  }

  VertexSet support() const {
    VertexSet s;
    for (auto [v, m] : mult_) s.insert(v);
    return s;
  }
  std::size_t degree() const {
    std::size_t d = 0;
    for (auto [v, m] : mult_) d += m;
    return d;
  }
  const std::map<std::size_t, std::size_t>& multiplicity() const noexcept { return mult_; }

  friend bool operator==(const FiniteMultiset&, const FiniteMultiset&) = default;

 private:
  std::map<std::size_t, std::size_t> mult_;
};

/// Web of the set-based exponential: the (finite) cliques of C.
inline SetFamily bang_web_set(const CoherentSpace& c, std::size_t cap = kDefaultEnumerationCap) {
  return cliques(c, cap);
}

/// All multisets of total multiplicity `degree` whose support is a clique.
inline std::vector<FiniteMultiset> bang_multisets(const CoherentSpace& c, std::size_t degree,
                                                  std::size_t cap = kDefaultEnumerationCap) {
  detail::require_cap(c.size(), cap, "bang_multisets");
  std::vector<FiniteMultiset> out;
  const std::size_t n = c.size();
  std::vector<std::size_t> counts(n, 0);
  // Enumerate multiplicity vectors summing to `degree`.
  auto rec = [&](auto&& self, std::size_t v, std::size_t left) -> void {
    if (v == n) {
      if (left != 0) return;
      std::map<std::size_t, std::size_t> m;
      for (std::size_t i = 0; i < n; ++i) {
        if (counts[i] > 0) m.emplace(i, counts[i]);
      }
      FiniteMultiset ms(std::move(m));
      if (is_clique(c, ms.support())) out.push_back(std::move(ms));
      return;
    }
    for (std::size_t k = 0; k <= left; ++k) {
      counts[v] = k;
      self(self, v + 1, left - k);
    }
    counts[v] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

namespace detail {

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace detail

struct StratumCount {
  std::size_t degree = 0;
  std::uint64_t count = 0;
};

/// Number of clique-supported multisets of each total multiplicity 0..degree.
///
/// A support of s vertices carries C(d-1, s-1) multisets of degree d.
inline std::vector<StratumCount> bang_multiset_counts(const CoherentSpace& c, std::size_t degree,
                                                      std::size_t cap = kDefaultEnumerationCap) {
  std::vector<std::uint64_t> by_support_size(c.size() + 1, 0);
  for (auto x : cliques(c, cap)) ++by_support_size[x.size()];
  std::vector<StratumCount> out;
  out.push_back({0, 1});
  for (std::size_t d = 1; d <= degree; ++d) {
    std::uint64_t total = 0;
    for (std::size_t s = 1; s <= c.size() && s <= d; ++s) {
      total += by_support_size[s] * detail::binomial(d - 1, s - 1);
    }
    out.push_back({d, total});
  }
  return out;
}

/// Comparison of the exponential webs of two spaces.
struct BangComparison {
  std::size_t set_web_left = 0;
  std::size_t set_web_right = 0;
  /// Equal cardinalities are necessary for an isomorphism of set-based
  /// exponentials (an isomorphism is the graph of a bijection).
  bool set_webs_equinumerous = false;
  std::vector<StratumCount> multiset_left;
  std::vector<StratumCount> multiset_right;
  /// First total multiplicity at which the stratified multiset counts
  /// differ; when present no multiplicity-preserving bijection exists.
  std::optional<std::size_t> first_differing_degree;
};

inline BangComparison iso_witness_in_set(const CoherentSpace& c, const CoherentSpace& d,
                                         std::size_t degree,
                                         std::size_t cap = kDefaultEnumerationCap) {
  BangComparison out;
  out.set_web_left = bang_web_set(c, cap).size();
  out.set_web_right = bang_web_set(d, cap).size();
  out.set_webs_equinumerous = out.set_web_left == out.set_web_right;
  out.multiset_left = bang_multiset_counts(c, degree, cap);
  out.multiset_right = bang_multiset_counts(d, degree, cap);
  for (std::size_t i = 0; i <= degree; ++i) {
    if (out.multiset_left[i].count != out.multiset_right[i].count) {
      out.first_differing_degree = i;
      break;
    }
  }
  return out;
}

}  // namespace cohfin
