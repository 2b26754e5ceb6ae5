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
 * Bounded duals of set families.
 *
 * The dual of a family F at threshold m is the family of all subsets x of
 * the web with #(x ∩ y) <= m for every y in F. At m = 1 this is the
 * operator whose double application recovers the cliques of a coherent
 * space. For larger m it is the finite stand-in for the finiteness dual
 * (finite intersection with every member): on a finite web the literal
 * finiteness dual is always the full powerset, so every statement is made
 * at an explicit threshold instead.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "cohfin/errors.hpp"
#include "cohfin/law_report.hpp"
#include "cohfin/set_family.hpp"
#include "cohfin/space.hpp"

namespace cohfin {

/// Intersection bound m >= 1 of the bounded dual.
class BoundedDualThreshold {
 public:
  explicit BoundedDualThreshold(std::size_t m) : m_(m) {
    if (m == 0) throw ContractError("bounded dual threshold must be >= 1");
  }
  std::size_t value() const noexcept { return m_; }

 private:
  std::size_t m_;
};

/// Anticlique bound k >= 0: a set is k-incoherent when it holds no
/// anticlique with more than k vertices.
class IncoherenceThreshold {
 public:
  explicit IncoherenceThreshold(std::size_t k) : k_(k) {}
  std::size_t value() const noexcept { return k_; }

 private:
  std::size_t k_;
};

/// {x ⊆ web : #(x ∩ y) <= m for all y in f}.
inline SetFamily dual_m(const SetFamily& f, BoundedDualThreshold m,
                        std::size_t cap = kDefaultEnumerationCap) {
  detail::require_cap(f.web_size(), cap, "dual_m");
  // Shrinking y only shrinks x ∩ y, so maximal members decide membership.
  const auto tops = f.maximal_members();
  const std::uint64_t count = std::uint64_t{1} << f.web_size();
  std::vector<VertexSet> out;
  for (std::uint64_t s = 0; s < count; ++s) {
    const VertexSet x(s);
    const bool ok = std::all_of(tops.begin(), tops.end(),
                                [&](VertexSet y) { return (x & y).size() <= m.value(); });
    if (ok) out.push_back(x);
  }
  return SetFamily(f.web(), std::move(out));
}

/// dual_m applied twice; a closure operator on families over a fixed web.
inline SetFamily closure_m(const SetFamily& f, BoundedDualThreshold m,
                           std::size_t cap = kDefaultEnumerationCap) {
  return dual_m(dual_m(f, m, cap), m, cap);
}

/// Subsets of the web containing no anticlique larger than k.
inline SetFamily fin_k(const CoherentSpace& c, IncoherenceThreshold k,
                       std::size_t cap = kDefaultEnumerationCap) {
  const auto table = alpha_table(c, cap);
  std::vector<VertexSet> out;
  for (std::uint64_t s = 0; s < table.size(); ++s) {
    if (table[s] <= k.value()) out.emplace_back(s);
  }
  return SetFamily(c.web(), std::move(out));
}

/// Bounded analogues of the basic closure properties of finitely
/// incoherent sets, checked exhaustively over the powerset of the web:
///
///   1. every x with #x <= k is k-incoherent;
///   2. k-incoherent sets are downward closed;
///   3. the union of two k-incoherent sets is 2k-incoherent;
///   4. every clique is k-incoherent (requires k >= 1).
///
/// Violations are collected in the report rather than thrown.
inline LawReport check_incoherence_laws(const CoherentSpace& c, IncoherenceThreshold k,
                                        std::size_t cap = kDefaultEnumerationCap) {
  const std::size_t kv = k.value();
  LawReport report;
  report.law = "incoherence_closure";
  report.params = {{"k", kv}, {"web_size", c.size()}};

  const auto alpha_of = alpha_table(c, cap);
  const std::uint64_t count = alpha_of.size();
  const auto& web = c.web();
  std::vector<VertexSet> members;
  for (std::uint64_t s = 0; s < count; ++s) {
    if (alpha_of[s] <= kv) members.emplace_back(s);
  }
  const SetFamily fin(web, members);

  for (std::uint64_t s = 0; s < count; ++s) {
    const VertexSet x(s);
    if (x.size() <= kv && alpha_of[s] > kv) {
      report.fail({{"item", 1}, {"set", labels_json(web, x)}, {"alpha", alpha_of[s]}});
    }
  }
  for (auto x : fin) {
    for (auto v : x) {
      if (alpha_of[x.without(v).bits()] > kv) {
        report.fail({{"item", 2}, {"set", labels_json(web, x)},
                     {"subset", labels_json(web, x.without(v))}});
      }
    }
  }
  // 2k-incoherent sets are downward closed, so pairs of maximal members
  // cover every pair.
  const auto tops = fin.maximal_members();
  for (std::size_t i = 0; i < tops.size(); ++i) {
    for (std::size_t j = i; j < tops.size(); ++j) {
      const VertexSet u = tops[i] | tops[j];
      if (alpha_of[u.bits()] > 2 * kv) {
        report.fail({{"item", 3},
                     {"x", labels_json(web, tops[i])},
                     {"y", labels_json(web, tops[j])},
                     {"alpha_union", alpha_of[u.bits()]}});
      }
    }
  }
  for (auto x : cliques(c, cap)) {
    if (!fin.contains(x)) {
      report.fail({{"item", 4}, {"clique", labels_json(web, x)}, {"alpha", alpha_of[x.bits()]}});
    }
  }
  report.params["instances"] = count;
  return report;
}

/// Checks dual_m(cliques(C)) = {x : omega(C, x) <= m} = fin_k(dual(C), m).
inline LawReport check_clique_dual_laws(const CoherentSpace& c, BoundedDualThreshold m,
                                        std::size_t cap = kDefaultEnumerationCap) {
  LawReport report;
  report.law = "clique_dual_equals_dual_incoherence";
  report.params = {{"m", m.value()}, {"web_size", c.size()}};

  const SetFamily lhs = dual_m(cliques(c, cap), m, cap);
  const SetFamily rhs = fin_k(dual(c), IncoherenceThreshold(m.value()), cap);
  const auto omega_of = omega_table(c, cap);
  std::vector<VertexSet> small;
  for (std::uint64_t s = 0; s < omega_of.size(); ++s) {
    if (omega_of[s] <= m.value()) small.emplace_back(s);
  }
  const SetFamily middle(c.web(), std::move(small));

  auto compare = [&](const SetFamily& a, const SetFamily& b, const char* a_name,
                     const char* b_name) {
    if (auto d = first_difference(a, b)) {
      report.fail({{"set", labels_json(c.web(), *d)},
                   {"in", a.contains(*d) ? a_name : b_name},
                   {"not_in", a.contains(*d) ? b_name : a_name}});
    }
  };
  compare(lhs, middle, "dual_of_cliques", "omega_bounded");
  compare(middle, rhs, "omega_bounded", "incoherent_in_dual");
  report.params["instances"] = omega_of.size();
  return report;
}

/// Checks that cliques(C) is closed under the 1-bounded double dual and
/// that its 1-bounded dual is cliques(dual(C)).
inline LawReport check_coherent_closure(const CoherentSpace& c,
                                        std::size_t cap = kDefaultEnumerationCap) {
  LawReport report;
  report.law = "coherent_closure";
  report.params = {{"m", 1}, {"web_size", c.size()}, {"instances", 1}};
  const BoundedDualThreshold one(1);
  const SetFamily cl = cliques(c, cap);
  const SetFamily once = dual_m(cl, one, cap);
  const SetFamily twice = dual_m(once, one, cap);
  if (auto d = first_difference(cl, twice)) {
    report.fail({{"equation", "closure(cliques) = cliques"}, {"set", labels_json(c.web(), *d)}});
  }
  if (auto d = first_difference(once, cliques(dual(c), cap))) {
    report.fail(
        {{"equation", "dual(cliques) = cliques(dual)"}, {"set", labels_json(c.web(), *d)}});
  }
  return report;
}

/// Extensivity, idempotence and dual(closure(F)) = dual(F).
inline LawReport check_closure_laws(const SetFamily& f, BoundedDualThreshold m,
                                    std::size_t cap = kDefaultEnumerationCap) {
  LawReport report;
  report.law = "bounded_closure";
  report.params = {{"m", m.value()}, {"web_size", f.web_size()}, {"family_size", f.size()}};
  const SetFamily d = dual_m(f, m, cap);
  const SetFamily cl = dual_m(d, m, cap);
  if (!f.is_subfamily_of(cl)) {
    report.fail({{"property", "extensive"}});
  }
  const SetFamily d3 = dual_m(cl, m, cap);
  if (d3 != d) {
    report.fail({{"property", "dual_of_closure"},
                 {"set", labels_json(f.web(), *first_difference(d3, d))}});
  }
  if (dual_m(d3, m, cap) != cl) {
    report.fail({{"property", "idempotent"}});
  }
  return report;
}

/// Bounds on the least number of anticliques covering the web.
struct CoverBounds {
  std::size_t lower = 0;  ///< omega of the web
  std::size_t upper = 0;  ///< size of `cover`
  std::vector<VertexSet> cover;
};

/// The lower bound is omega (an anticlique meets a clique at most once);
/// the upper bound comes from a greedy cover that repeatedly takes the
/// lowest remaining vertex and extends it by every later compatible one.
inline CoverBounds min_anticlique_cover_bounds(const CoherentSpace& c) {
  CoverBounds out;
  out.lower = omega(c);
  VertexSet remaining = c.full();
  while (!remaining.empty()) {
    VertexSet layer;
    VertexSet open = remaining;
    while (!open.empty()) {
      const std::size_t v = open.lowest();
      layer.insert(v);
      open = (open - c.strict_neighbours(v)).without(v);
    }
    out.cover.push_back(layer);
    remaining = remaining - layer;
  }
  out.upper = out.cover.size();
  return out;
}

}  // namespace cohfin
