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

#include "cohfin/generators.hpp"
#include "cohfin/io.hpp"
#include "cohfin/nonuniform.hpp"
#include "oracles.hpp"

namespace cohfin {
namespace {

/// Pairwise definition, loops included: every (i, j) with i, j in x must
/// carry a clique label for the mode.
bool brute_clique(const NonUniformSpace& nu, std::uint64_t x, Mode mode) {
  for (int i : oracle::members(x)) {
    for (int j : oracle::members(x)) {
      const PairLabel l = nu.label(i, j);
      const bool ok = l == PairLabel::strict_coherent ||
                      (mode == Mode::lax && l == PairLabel::neutral);
      if (!ok) return false;
    }
  }
  return true;
}

bool brute_anticlique(const NonUniformSpace& nu, std::uint64_t x, Mode mode) {
  for (int i : oracle::members(x)) {
    for (int j : oracle::members(x)) {
      const PairLabel l = nu.label(i, j);
      const bool ok = l == PairLabel::strict_incoherent ||
                      (mode == Mode::lax && l == PairLabel::neutral);
      if (!ok) return false;
    }
  }
  return true;
}

NonUniformSpace random_nu(std::size_t n, Rng& rng) {
  return NonUniformSpace::from_function(
      n, [&](std::size_t, std::size_t) { return static_cast<PairLabel>(rng.below(3)); });
}

TEST(PairLabelTest, StringRoundTrip) {
  for (auto l : {PairLabel::strict_coherent, PairLabel::neutral, PairLabel::strict_incoherent}) {
    EXPECT_EQ(pair_label_from_string(to_string(l)), l);
  }
  EXPECT_THROW(pair_label_from_string("coherent"), ContractError);
}

TEST(NonUniformSpaceTest, RejectsAsymmetricLabels) {
  std::vector<PairLabel> labels = {PairLabel::neutral, PairLabel::strict_coherent,
                                   PairLabel::strict_incoherent, PairLabel::neutral};
  EXPECT_THROW(NonUniformSpace({0, 1}, labels), ContractError);
  EXPECT_THROW(NonUniformSpace({0, 1}, {PairLabel::neutral}), ContractError);
}

TEST(DualNuTest, SpecExamples) {
  EXPECT_EQ(dual_nu(all_neutral(4)), all_neutral(4));
  EXPECT_EQ(dual_nu(embed_coherent(complete(2))), embed_coherent(discrete(2)));
  Rng rng(59);
  for (int t = 0; t < 50; ++t) {
    const auto nu = random_nu(rng.between(0, 6), rng);
    ASSERT_EQ(dual_nu(dual_nu(nu)), nu);
  }
}

TEST(EmbedTest, SpecExamples) {
  const auto e = embed_coherent(complete(2));
  EXPECT_EQ(e.label(0, 1), PairLabel::strict_coherent);
  EXPECT_EQ(e.label(0, 0), PairLabel::neutral);
  EXPECT_EQ(e.label(1, 1), PairLabel::neutral);
  for (std::size_t n = 1; n <= 3; ++n) {
    for_each_space(n, [&](const CoherentSpace& c) {
      ASSERT_EQ(dual_nu(embed_coherent(c)), embed_coherent(dual(c)));
    });
  }
  const auto d1 = embed_coherent(discrete(1));
  EXPECT_EQ(d1.size(), 1U);
  EXPECT_EQ(d1.label(0, 0), PairLabel::neutral);
}

TEST(CliquesNuTest, SpecExamples) {
  EXPECT_EQ(cliques_nu(all_neutral(3), Mode::lax).size(), 8U);
  EXPECT_EQ(oracle::bits_of(cliques_nu(all_neutral(3), Mode::strict)), std::set<std::uint64_t>{0});
  const auto e = embed_coherent(complete(2));
  EXPECT_EQ(oracle::bits_of(cliques_nu(e, Mode::strict)), std::set<std::uint64_t>{0});
  EXPECT_EQ(cliques_nu(e, Mode::lax).size(), 4U);
}

TEST(FinNuTest, SpecExamples) {
  const auto n4 = all_neutral(4);
  for (std::size_t k = 0; k <= 4; ++k) {
    for (auto x : fin_nu(n4, Mode::lax, IncoherenceThreshold(k))) EXPECT_LE(x.size(), k);
  }
  EXPECT_EQ(fin_nu(embed_coherent(discrete(4)), Mode::strict, IncoherenceThreshold(0)).size(), 16U);
  Rng rng(61);
  const auto nu = random_nu(5, rng);
  EXPECT_EQ(fin_nu(nu, Mode::lax, IncoherenceThreshold(5)).size(), 32U);
}

TEST(FailureWitnessTest, LaxLax) {
  const auto w = failure_witness({Mode::lax, Mode::lax}, 6, IncoherenceThreshold(2));
  ASSERT_TRUE(w.found);
  EXPECT_EQ(w.space, all_neutral(3));
  EXPECT_EQ(w.set, VertexSet::first(3));
  EXPECT_EQ(w.inner.size(), 3U);
  EXPECT_TRUE(is_clique_nu(w.space, w.set, Mode::lax));
  EXPECT_TRUE(is_anticlique_nu(w.space, w.inner, Mode::lax));
}

TEST(FailureWitnessTest, StrictStrict) {
  const auto w = failure_witness({Mode::strict, Mode::strict}, 6, IncoherenceThreshold(1));
  ASSERT_TRUE(w.found);
  EXPECT_EQ(w.ramsey_bound, 2U);
  EXPECT_EQ(w.space, all_neutral(6));
  EXPECT_EQ(max_clique_nu(w.space, w.set, Mode::strict).size(), 0U);
  EXPECT_EQ(max_anticlique_nu(w.space, w.set, Mode::strict).size(), 0U);
  EXPECT_FALSE(failure_witness({Mode::strict, Mode::strict}, 5, IncoherenceThreshold(2)).found);
}

TEST(FailureWitnessTest, MixedVariantsFindInclusionFailures) {
  for (auto v : {Variant{Mode::strict, Mode::lax}, Variant{Mode::lax, Mode::strict}}) {
    const auto w = failure_witness(v, 4, IncoherenceThreshold(1));
    ASSERT_TRUE(w.found) << to_string(v);
    EXPECT_LE(w.space.size(), 4U);
    const auto lhs = dual_m(cliques_nu(w.space, v.clique_mode), BoundedDualThreshold(1));
    const auto rhs = fin_nu(dual_nu(w.space), v.fin_mode, IncoherenceThreshold(1));
    EXPECT_NE(lhs.contains(w.set), rhs.contains(w.set));
  }
  EXPECT_THROW(failure_witness({Mode::strict, Mode::lax}, 5, IncoherenceThreshold(1)),
               SizeLimitError);
}

TEST(FailureWitnessTest, JsonCarriesSpace) {
  const auto j = to_json(failure_witness({Mode::lax, Mode::lax}, 6, IncoherenceThreshold(2)));
  EXPECT_EQ(j["variant"], "lax/lax");
  EXPECT_EQ(nonuniform_from_json(j["space"]), all_neutral(3));
}

TEST(TrichotomyTest, SpecExamples) {
  const auto n5 = all_neutral(5);
  const auto t = trichotomy_extract(n5, n5.full(), 3);
  EXPECT_EQ(t.kind, Trichotomy::Kind::neutral_set);
  EXPECT_EQ(t.vertices.size(), 3U);

  const auto k6 = embed_coherent(complete(6));
  for (std::size_t s = 2; s <= 6; ++s) {
    const auto c = trichotomy_extract(k6, k6.full(), s);
    EXPECT_EQ(c.kind, Trichotomy::Kind::strict_clique);
    EXPECT_EQ(c.vertices.size(), s);
  }
  EXPECT_EQ(trichotomy_extract(n5, n5.full(), 3).bound, 17U);
}

// --- properties ----------------------------------------------------------------

TEST(NonUniformProperties, CliqueFamiliesMatchPairwiseDefinition) {
  Rng rng(67);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = rng.between(1, 6);
    const auto nu = random_nu(n, rng);
    for (auto mode : {Mode::lax, Mode::strict}) {
      std::set<std::uint64_t> want;
      for (std::uint64_t x = 0; x < (1ULL << n); ++x) {
        ASSERT_EQ(is_clique_nu(nu, VertexSet(x), mode), brute_clique(nu, x, mode));
        ASSERT_EQ(is_anticlique_nu(nu, VertexSet(x), mode), brute_anticlique(nu, x, mode));
        if (brute_clique(nu, x, mode)) want.insert(x);
      }
      ASSERT_EQ(oracle::bits_of(cliques_nu(nu, mode)), want);
      const std::size_t k = rng.between(0, 3);
      for (auto x : fin_nu(nu, mode, IncoherenceThreshold(k))) {
        for (std::uint64_t sub = x.bits();; sub = (sub - 1) & x.bits()) {
          if (brute_anticlique(nu, sub, mode)) {
            ASSERT_LE(oracle::members(sub).size(), k);
          }
          if (sub == 0) break;
        }
      }
    }
  }
}

TEST(NonUniformProperties, TrichotomyIsVerifiedAndExactBelowBound) {
  Rng rng(71);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = rng.between(1, 9);
    const auto nu = random_nu(n, rng);
    const auto x = random_subset(n, rng);
    const auto tr = trichotomy_extract(nu, x, 3);
    const auto coloring = EdgeColoring::from_function(
        n, 3, [&](std::size_t i, std::size_t j) { return static_cast<unsigned>(nu.label(i, j)); });
    // Restrict the oracle to x by renumbering.
    const auto pos = x.positions();
    const bool want = oracle::has_mono(
        static_cast<int>(pos.size()),
        [&](int i, int j) { return static_cast<int>(coloring.color(pos[i], pos[j])); }, {3, 3, 3});
    ASSERT_EQ(tr.kind != Trichotomy::Kind::small, want);
    if (tr.kind != Trichotomy::Kind::small) {
      ASSERT_TRUE(tr.vertices.is_subset_of(x));
      ASSERT_EQ(tr.vertices.size(), 3U);
    }
  }
}

}  // namespace
}  // namespace cohfin
