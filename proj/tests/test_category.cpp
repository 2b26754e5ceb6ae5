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


#include <gtest/gtest.h>

#include "cohfin/category.hpp"
#include "cohfin/generators.hpp"
#include "cohfin/io.hpp"
#include "oracles.hpp"

namespace cohfin {
namespace {

using PairSet = std::set<std::pair<int, int>>;

PairSet plain(const Relation& r) {
  PairSet out;
  for (auto [a, b] : r.pairs()) out.emplace(static_cast<int>(a), static_cast<int>(b));
  return out;
}

Relation random_relation(const std::vector<Vertex>& src, const std::vector<Vertex>& dst, Rng& rng) {
  std::vector<VertexPair> pairs;
  for (auto a : src) {
    for (auto b : dst) {
      if (rng.bernoulli(0.3)) pairs.emplace_back(a, b);
    }
  }
  return Relation(src, dst, std::move(pairs));
}

TEST(RelationTest, ComposeSpecExamples) {
  const std::vector<Vertex> web = {0, 1, 2, 5};
  const Relation s(web, web, {{0, 1}});
  const Relation r(web, web, {{1, 2}});
  EXPECT_EQ(compose(r, s).pairs(), (std::vector<VertexPair>{{0, 2}}));
  const Relation r5(web, web, {{5, 2}});
  EXPECT_TRUE(compose(r5, s).empty());
  EXPECT_EQ(compose(identity(web), r), r);
  EXPECT_EQ(compose(r, identity(web)), r);
}

TEST(RelationTest, Errors) {
  EXPECT_THROW(Relation({0, 1}, {0}, {{0, 3}}), ContractError);
  const Relation a({0, 1}, {0, 1, 2}, {});
  const Relation b({0, 1}, {0, 1}, {});
  EXPECT_THROW(compose(b, a), WebMismatchError);
}

TEST(RelationTest, TransposeIsInvolution) {
  const Relation r({0, 1}, {4, 5, 6}, {{0, 6}, {1, 4}});
  EXPECT_EQ(transpose(transpose(r)), r);
  EXPECT_TRUE(transpose(r).contains({6, 0}));
  EXPECT_EQ(relation_from_json(to_json(r)), r);
}

TEST(HomSpaceTest, SpecExamples) {
  EXPECT_EQ(hom_space(complete(1), complete(1)), complete(1));
  EXPECT_EQ(hom_space(complete(2), complete(3)).size(), 6U);

  // Cliques of hom(D2, D2) are exactly the partial functions.
  const auto d2 = discrete(2);
  const auto hom = hom_space(d2, d2);
  for (std::uint64_t s = 0; s < 16; ++s) {
    const auto r = set_to_relation(d2, d2, VertexSet(s));
    std::map<Vertex, int> images;
    for (auto [a, b] : r.pairs()) ++images[a];
    bool partial_function = true;
    for (auto [a, count] : images) partial_function = partial_function && count <= 1;
    ASSERT_EQ(is_clique(hom, VertexSet(s)), partial_function) << s;
  }
}

TEST(MorphismTest, SpecExamples) {
  const auto k2 = complete(2);
  EXPECT_TRUE(is_coh_morphism(k2, k2, identity(k2.web())));
  const auto d2 = discrete(2);
  const Relation r(d2.web(), d2.web(), {{0, 0}, {0, 1}});
  EXPECT_FALSE(is_coh_morphism(d2, d2, r));
  EXPECT_TRUE(is_coh_morphism(d2, d2, Relation(d2.web(), d2.web(), {})));
  EXPECT_TRUE(is_finbounded_morphism(d2, d2, r, IncoherenceThreshold(2)));
  EXPECT_FALSE(is_finbounded_morphism(d2, d2, r, IncoherenceThreshold(1)));
  EXPECT_THROW(is_coh_morphism(k2, complete(3), identity(k2.web())), WebMismatchError);
}

TEST(FunctorTest, SpecExamples) {
  const auto k3 = complete(3);
  EXPECT_TRUE(functor_check(k3, k3, identity(k3.web())).pass);
  const std::vector<CoherentSpace> spaces = {complete(2), discrete(2)};
  for (const auto& c : spaces) {
    for (const auto& d : spaces) {
      for (std::uint64_t s = 0; s < 16; ++s) {
        const auto r = set_to_relation(c, d, VertexSet(s));
        const auto report = functor_check(c, d, r);
        ASSERT_TRUE(report.pass) << report.witness.dump();
        if (is_coh_morphism(c, d, r)) {
          ASSERT_TRUE(is_finbounded_morphism(c, d, r, IncoherenceThreshold(1)));
        }
      }
    }
  }
  EXPECT_EQ(functor_object(k3, IncoherenceThreshold(1)), fin_k(k3, IncoherenceThreshold(1)));
}

TEST(NonFullnessTest, SpecExamples) {
  const auto d2 = discrete(2);
  const auto w = non_fullness_witness(d2, d2, IncoherenceThreshold(2));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->pairs(), (std::vector<VertexPair>{{0, 0}, {0, 1}}));

  for (std::size_t k = 2; k <= 4; ++k) {
    EXPECT_FALSE(non_fullness_witness(complete(1), complete(1), IncoherenceThreshold(k)));
  }

  const auto k2 = complete(2);
  const auto wk = non_fullness_witness(k2, k2, IncoherenceThreshold(2));
  ASSERT_TRUE(wk.has_value());
  EXPECT_EQ(wk->size(), 2U);
  EXPECT_FALSE(is_coh_morphism(k2, k2, *wk));
  EXPECT_TRUE(is_finbounded_morphism(k2, k2, *wk, IncoherenceThreshold(2)));
  EXPECT_THROW(non_fullness_witness(k2, k2, IncoherenceThreshold(1)), ContractError);
}

TEST(BangTest, SpecExamples) {
  for (std::size_t n = 1; n <= 12; ++n) {
    EXPECT_EQ(bang_web_set(complete(n)).size(), std::size_t{1} << n);
    EXPECT_EQ(bang_web_set(dual(complete(n))).size(), n + 1);
  }
  EXPECT_EQ(oracle::bits_of(bang_web_set(complete(1))), (std::set<std::uint64_t>{0, 1}));

  for (std::size_t d = 0; d <= 5; ++d) {
    EXPECT_EQ(bang_multiset_counts(complete(4), d).back().count, detail::binomial(4 + d - 1, d));
    EXPECT_EQ(bang_multiset_counts(dual(complete(4)), d).back().count, d == 0 ? 1U : 4U);
  }

  const auto cmp = iso_witness_in_set(complete(3), dual(complete(3)), 2);
  EXPECT_EQ(cmp.set_web_left, 8U);
  EXPECT_EQ(cmp.set_web_right, 4U);
  EXPECT_FALSE(cmp.set_webs_equinumerous);
  EXPECT_EQ(cmp.multiset_left[2].count, 6U);
  EXPECT_EQ(cmp.multiset_right[2].count, 3U);
  EXPECT_EQ(cmp.first_differing_degree, std::optional<std::size_t>(2));

  const auto same = iso_witness_in_set(path(4), path(4), 4);
  EXPECT_TRUE(same.set_webs_equinumerous);
  EXPECT_FALSE(same.first_differing_degree.has_value());
}

TEST(BangTest, MultisetRejectsZeroMultiplicity) {
  EXPECT_THROW(FiniteMultiset(std::map<std::size_t, std::size_t>{{0, 0}}), ContractError);
  const FiniteMultiset m(std::map<std::size_t, std::size_t>{{0, 2}, {3, 1}});
  EXPECT_EQ(m.degree(), 3U);
  EXPECT_EQ(m.support(), VertexSet::of({0, 3}));
}

// --- properties ------------------------------------------------------------

TEST(CategoryProperties, CompositionMatchesOracleAndIsAssociative) {
  Rng rng(43);
  for (int t = 0; t < 300; ++t) {
    const auto a = detail::iota_web(rng.between(1, 4));
    const auto b = detail::iota_web(rng.between(1, 4));
    const auto c = detail::iota_web(rng.between(1, 4));
    const auto d = detail::iota_web(rng.between(1, 4));
    const auto s = random_relation(a, b, rng);
    const auto r = random_relation(b, c, rng);
    const auto q = random_relation(c, d, rng);
    ASSERT_EQ(plain(compose(r, s)), oracle::compose(plain(r), plain(s)));
    ASSERT_EQ(compose(q, compose(r, s)), compose(compose(q, r), s));
    ASSERT_EQ(transpose(compose(r, s)), compose(transpose(s), transpose(r)));
  }
}

TEST(CategoryProperties, FunctorCompositionOnRandomTriples) {
  Rng rng(47);
  for (int t = 0; t < 200; ++t) {
    const auto c = random_space(rng.between(1, 3), rng);
    const auto d = random_space(rng.between(1, 3), rng);
    const auto e = random_space(rng.between(1, 3), rng);
    // Bias toward morphisms: take random cliques of the hom spaces half the time.
    auto pick = [&](const CoherentSpace& x, const CoherentSpace& y) {
      if (rng.coin()) return random_relation(x.web(), y.web(), rng);
      const auto cl = cliques(hom_space(x, y));
      return set_to_relation(x, y, cl.members()[rng.below(cl.size())]);
    };
    const auto s = pick(c, d);
    const auto r = pick(d, e);
    const auto report = functor_composition_check(c, d, e, s, r);
    ASSERT_TRUE(report.pass) << report.witness.dump();
    ASSERT_TRUE(functor_check(c, d, s).pass);
  }
}

TEST(CategoryProperties, MultisetClosedFormMatchesEnumeration) {
  Rng rng(53);
  for (int t = 0; t < 60; ++t) {
    const auto c = random_space(rng.between(1, 6), rng);
    const std::size_t d = rng.between(0, 6);
    const auto counts = bang_multiset_counts(c, d);
    const auto g = oracle::from_space(c);
    for (std::size_t deg = 0; deg <= d; ++deg) {
      ASSERT_EQ(counts[deg].count, oracle::multiset_count(g, static_cast<int>(deg)));
    }
    ASSERT_EQ(bang_multisets(c, d).size(), counts[d].count);
  }
}

}  // namespace
}  // namespace cohfin
