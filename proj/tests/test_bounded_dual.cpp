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

#include "cohfin/bounded_dual.hpp"
#include "cohfin/generators.hpp"
#include "oracles.hpp"

namespace cohfin {
namespace {

SetFamily family(std::size_t n, std::initializer_list<VertexSet> members) {
  return SetFamily(detail::iota_web(n), std::vector<VertexSet>(members));
}

TEST(ThresholdTest, BoundedDualRejectsZero) {
  EXPECT_THROW(BoundedDualThreshold(0), ContractError);
  EXPECT_NO_THROW(IncoherenceThreshold(0));
}

TEST(DualMTest, SpecExamples) {
  const BoundedDualThreshold one(1);
  EXPECT_EQ(dual_m(family(3, {}), one).size(), 8U);
  EXPECT_EQ(oracle::bits_of(dual_m(cliques(complete(2)), one)),
            oracle::bits_of(anticliques(complete(2))));
  EXPECT_EQ(oracle::bits_of(dual_m(cliques(complete(2)), one)),
            (std::set<std::uint64_t>{0b00, 0b01, 0b10}));
  EXPECT_EQ(dual_m(family(4, {VertexSet::first(4)}), BoundedDualThreshold(4)).size(), 16U);
}

TEST(DualMTest, RespectsCap) {
  EXPECT_THROW(dual_m(family(21, {}), BoundedDualThreshold(1)), SizeLimitError);
}

TEST(FinKTest, SpecExamples) {
  EXPECT_EQ(fin_k(path(4), IncoherenceThreshold(4)).size(), 16U);
  EXPECT_EQ(fin_k(complete(3), IncoherenceThreshold(1)).size(), 8U);
  EXPECT_EQ(oracle::bits_of(fin_k(discrete(3), IncoherenceThreshold(1))),
            (std::set<std::uint64_t>{0b000, 0b001, 0b010, 0b100}));
}

TEST(IncoherenceLawsTest, SpecExamples) {
  EXPECT_TRUE(check_incoherence_laws(complete(3), IncoherenceThreshold(1)).pass);
  const auto d4 = discrete(4);
  const auto fin2 = fin_k(d4, IncoherenceThreshold(2));
  EXPECT_TRUE(fin2.contains(VertexSet::of({0, 1})));
  EXPECT_TRUE(fin2.contains(VertexSet::of({2, 3})));
  EXPECT_TRUE(fin_k(d4, IncoherenceThreshold(4)).contains(VertexSet::first(4)));
  EXPECT_EQ(alpha(d4), 4U);
  EXPECT_TRUE(check_incoherence_laws(d4, IncoherenceThreshold(2)).pass);
}

TEST(IncoherenceLawsTest, ZeroThresholdReportsCliqueItem) {
  const auto r = check_incoherence_laws(path(3), IncoherenceThreshold(0));
  EXPECT_FALSE(r.pass);
  bool item4 = false;
  for (const auto& v : r.witness["violations"]) item4 = item4 || v["item"] == 4;
  EXPECT_TRUE(item4);
}

TEST(CliqueDualLawsTest, SpecExamples) {
  const auto r = check_clique_dual_laws(complete(2), BoundedDualThreshold(1));
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(dual_m(cliques(complete(2)), BoundedDualThreshold(1)),
            fin_k(dual(complete(2)), IncoherenceThreshold(1)));
  for (std::size_t m = 1; m <= 3; ++m) {
    EXPECT_EQ(dual_m(cliques(discrete(4)), BoundedDualThreshold(m)).size(), 16U);
    EXPECT_EQ(fin_k(dual(discrete(4)), IncoherenceThreshold(m)).size(), 16U);
  }
}

TEST(CoverBoundsTest, SpecExamples) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto b = min_anticlique_cover_bounds(disjoint_kn(n));
    EXPECT_EQ(b.lower, n);
    EXPECT_EQ(b.upper, n);
  }
  const auto k5 = min_anticlique_cover_bounds(complete(5));
  EXPECT_EQ(k5.lower, 5U);
  EXPECT_EQ(k5.upper, 5U);
  const auto d7 = min_anticlique_cover_bounds(discrete(7));
  EXPECT_EQ(d7.lower, 1U);
  EXPECT_EQ(d7.upper, 1U);
}

// --- properties ------------------------------------------------------------

TEST(BoundedDualProperties, DualMatchesOracleOnRandomFamilies) {
  Rng rng(3);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = rng.between(1, 6);
    const auto f = random_family(n, rng, 6);
    const std::size_t m = rng.between(1, 3);
    ASSERT_EQ(oracle::bits_of(dual_m(f, BoundedDualThreshold(m))),
              oracle::dual_m(static_cast<int>(n), oracle::bits_of(f), static_cast<int>(m)));
  }
}

TEST(BoundedDualProperties, ClosureIsExtensiveIdempotentAndStable) {
  Rng rng(5);
  for (int t = 0; t < 300; ++t) {
    const auto f = random_family(5, rng, 6);
    const BoundedDualThreshold m(rng.between(1, 3));
    const auto cl = closure_m(f, m);
    ASSERT_TRUE(f.is_subfamily_of(cl));
    ASSERT_EQ(closure_m(cl, m), cl);
    ASSERT_EQ(dual_m(cl, m), dual_m(f, m));
    ASSERT_TRUE(check_closure_laws(f, m).pass);
  }
}

TEST(BoundedDualProperties, DualIsAntitone) {
  Rng rng(17);
  for (int t = 0; t < 200; ++t) {
    const auto f = random_family(5, rng, 4);
    std::vector<VertexSet> more(f.members());
    more.push_back(random_subset(5, rng));
    const SetFamily g(f.web(), more);
    const BoundedDualThreshold m(rng.between(1, 3));
    ASSERT_TRUE(dual_m(g, m).is_subfamily_of(dual_m(f, m)));
  }
}

TEST(BoundedDualProperties, CliqueDualAgreesWithOracleOnAllFourVertexGraphs) {
  for (std::uint64_t code = 0; code < 64; ++code) {
    const auto c = space_from_code(4, code);
    const auto g = oracle::from_code(4, code);
    for (int m = 1; m <= 3; ++m) {
      const auto want = oracle::dual_m(4, oracle::cliques(g), m);
      ASSERT_EQ(oracle::bits_of(dual_m(cliques(c), BoundedDualThreshold(m))), want);
      ASSERT_EQ(oracle::fin(oracle::complement(g), m), want);
    }
  }
}

TEST(BoundedDualProperties, IncoherenceLawsHoldOnRandomGraphs) {
  Rng rng(23);
  for (int t = 0; t < 100; ++t) {
    const auto c = random_space(rng.between(1, 9), rng);
    const IncoherenceThreshold k(rng.between(1, 3));
    const auto report = check_incoherence_laws(c, k);
    ASSERT_TRUE(report.pass) << report.witness.dump();
    ASSERT_EQ(oracle::bits_of(fin_k(c, k)),
              oracle::fin(oracle::from_space(c), static_cast<int>(k.value())));
  }
}

TEST(BoundedDualProperties, CoverBoundsBracketOracleCover) {
  Rng rng(29);
  for (int t = 0; t < 100; ++t) {
    const auto c = random_space(rng.between(1, 8), rng);
    const auto b = min_anticlique_cover_bounds(c);
    ASSERT_LE(b.lower, b.upper);
    VertexSet covered;
    for (auto layer : b.cover) {
      ASSERT_TRUE(is_anticlique(c, layer));
      ASSERT_TRUE((covered & layer).empty());
      covered = covered | layer;
    }
    ASSERT_EQ(covered, c.full());
  }
}

}  // namespace
}  // namespace cohfin
