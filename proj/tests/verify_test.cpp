// Copyright 2026 The gfcode Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "gfcode/constructions.hpp"
#include "gfcode/errors.hpp"
#include "gfcode/verify.hpp"
#include "support/predicate_oracle.hpp"

namespace gfcode {
namespace {

TEST(VerifyFamily, PassingExamples) {
  const VerifyReport r = verify_family(split_clique_family(6), Predicate::connected());
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.pairs_checked, 496u);
  EXPECT_FALSE(r.witness.has_value());
  EXPECT_TRUE(verify_family(star_family(5), Predicate::spanning_star()).pass);
}

TEST(VerifyFamily, PerturbedFamilyFailsWithLexMinimalWitness) {
  GraphFamily bad(4);
  const GraphFamily f = k3_family_4();
  for (std::size_t i = 0; i < f.size(); ++i) bad.push_back(i == 2 ? complement(f[1]) : f[i]);
  const Predicate k3 = Predicate::triangle();
  const VerifyReport r = verify_family(bad, k3);
  ASSERT_FALSE(r.pass);
  ASSERT_TRUE(r.witness.has_value());
  bool found = false;
  for (std::size_t i = 0; i < bad.size() && !found; ++i)
    for (std::size_t j = i + 1; j < bad.size() && !found; ++j)
      if (!oracle::contains(bad[i] ^ bad[j], graphs::complete(3), false)) {
        EXPECT_EQ(r.witness->first, i);
        EXPECT_EQ(r.witness->second, j);
        found = true;
      }
  ASSERT_TRUE(found);
  EXPECT_EQ(r.witness->difference, bad[r.witness->first] ^ bad[r.witness->second]);
}

TEST(VerifyFamily, WitnessIndependentOfThreadCount) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    GraphFamily fam(6);
    while (fam.size() < 60) {
      auto g = oracle::random_graph(6, rng);
      bool dup = false;
      for (std::size_t j = 0; j < fam.size(); ++j) dup = dup || fam[j] == g;
      if (!dup) fam.push_back(g);
    }
    const auto one = verify_family(fam, Predicate::connected(), {1});
    const auto many = verify_family(fam, Predicate::connected(), {4});
    EXPECT_EQ(one.pass, many.pass);
    if (one.witness) {
      EXPECT_EQ(one.witness->first, many.witness->first);
      EXPECT_EQ(one.witness->second, many.witness->second);
    }
  }
}

TEST(VerifyFamily, TooSmallOrDuplicatedFamiliesAreRejected) {
  GraphFamily one(4);
  one.push_back(LabeledGraph(4));
  EXPECT_THROW(verify_family(one, Predicate::connected()), std::domain_error);
}

TEST(VerifyFamily, PredicateRefusalBecomesCapabilityError) {
  GraphFamily fam(17);
  fam.push_back(LabeledGraph(17));
  fam.push_back(graphs::complete(17));
  EXPECT_THROW(verify_family(fam, Predicate::ham_cycle()), verify_capability_error);
}

TEST(VerifyLinear, Examples) {
  const auto k5 = verify_linear_family(k3_family_5(), Predicate::triangle());
  EXPECT_TRUE(k5.pass);
  EXPECT_EQ(k5.pairs_checked, 15u);
  const auto c7 = verify_linear_family(codd_family_7(), Predicate::odd_cycle());
  EXPECT_TRUE(c7.pass);
  EXPECT_EQ(c7.pairs_checked, 511u);
  const auto h8 = verify_linear_family(ham_cycle_family(8), Predicate::ham_cycle());
  EXPECT_TRUE(h8.pass);
  EXPECT_EQ(h8.pairs_checked, 63u);
}

TEST(VerifyLinear, AgreesWithPairwiseOnEnumeratedSpan) {
  std::mt19937_64 rng(67);
  const Predicate preds[] = {Predicate::connected(), Predicate::triangle(), Predicate::odd_cycle(),
                             Predicate::k_connected(2)};
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 5 + trial % 3;
    std::vector<LabeledGraph> gens;
    for (int i = 0; i < 1 + trial % 8; ++i) gens.push_back(oracle::random_graph(n, rng, 0.6));
    const LinearFamily fam(n, gens);
    if (fam.rank() == 0) continue;
    const Predicate& p = preds[trial % 4];
    const auto lin = verify_linear_family(fam, p);
    const auto pair = verify_family(enumerate_span(fam), p);
    EXPECT_EQ(lin.pass, pair.pass);
    if (!lin.pass) EXPECT_FALSE(p(lin.witness->difference));
  }
}

TEST(VerifyDual, Examples) {
  EXPECT_TRUE(verify_dual_family(dual_isolated_family(4), Predicate::connected()).pass);
  const auto s4 = verify_dual_family(dual_star_family(4), Predicate::spanning_star());
  EXPECT_TRUE(s4.pass);
  EXPECT_EQ(s4.pairs_checked, 120u);
  EXPECT_TRUE(verify_dual_family(dual_subgraph_family(5, graphs::complete_bipartite(2, 3)), Predicate::triangle()).pass);
  EXPECT_FALSE(verify_dual_family(split_clique_family(4), Predicate::connected()).pass);
}

TEST(VerifyDual, CosetShortcutMatchesPairwise) {
  const GraphFamily fam = dual_star_family(6);  // 2^12 members, a coset
  VerifyOptions slow;
  slow.coset_shortcut_min = fam.size() + 1;
  const auto fast = verify_dual_family(fam, Predicate::spanning_star());
  const auto full = verify_dual_family(fam, Predicate::spanning_star(), slow);
  EXPECT_TRUE(fast.pass);
  EXPECT_TRUE(full.pass);
  EXPECT_EQ(fast.mode, VerifyMode::kDual);
  EXPECT_EQ(full.pairs_checked, fam.size() * (fam.size() - 1) / 2);
}

TEST(CrossDifference, Examples) {
  EXPECT_TRUE(cross_difference_distinct(split_clique_family(5), dual_isolated_family(5)));
  EXPECT_TRUE(cross_difference_distinct(star_family(4), dual_star_family(4)));
  const GraphFamily a = split_clique_family(4);
  EXPECT_THROW(cross_difference_distinct(a, a), std::domain_error);
  // {} ^ {13,12} and {12} ^ {13} coincide.
  GraphFamily b(4);
  b.push_back(LabeledGraph(4));
  b.push_back(LabeledGraph(4, {{1, 2}}));
  GraphFamily c(4);
  c.push_back(LabeledGraph(4, {{1, 3}}));
  c.push_back(LabeledGraph(4, {{1, 2}, {1, 3}}));
  EXPECT_FALSE(cross_difference_distinct(b, c));
}

}  // namespace
}  // namespace gfcode
