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
#include <set>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "gfcode/constructions.hpp"
#include "gfcode/gf2.hpp"
#include "support/predicate_oracle.hpp"

namespace gfcode {
namespace {

TEST(Rank, ConstructionGenerators) {
  EXPECT_EQ(rank(k3_family_5().generators()), 4);
  EXPECT_EQ(rank(k3_family_6().generators()), 6);
  EXPECT_EQ(rank(codd_family_7().generators()), 9);
  EXPECT_EQ(k3_family_5().generators().size(), 5u);
  EXPECT_EQ(k3_family_6().generators().size(), 7u);
  EXPECT_EQ(codd_family_7().generators().size(), 10u);
}

TEST(Span, SmallCases) {
  const LinearFamily trivial(3, {});
  const GraphFamily only_empty = enumerate_span(trivial);
  ASSERT_EQ(only_empty.size(), 1u);
  EXPECT_TRUE(only_empty[0].edgeless());
  EXPECT_EQ(enumerate_span(k3_family_5()).size(), 16u);
  const GraphFamily hamming = enumerate_span(hamming_bipartite_family(3));
  EXPECT_EQ(hamming.size(), 8u);
  EXPECT_TRUE(hamming[0].edgeless());
}

TEST(DoubleCover, Examples) {
  EXPECT_TRUE(double_cover_check(k3_family_5().generators()));
  EXPECT_TRUE(double_cover_check(codd_family_7().generators()));
  std::vector<LabeledGraph> singles;
  for (std::size_t s = 0; s < pair_count(5); ++s) {
    LabeledGraph g(5);
    g.set(s);
    singles.push_back(g);
  }
  EXPECT_FALSE(double_cover_check(singles));
}

TEST(Gf2Basis, ReducedEchelonInvariants) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 4 + trial % 6;
    std::vector<LabeledGraph> gens;
    for (int i = 0; i < 1 + trial % 9; ++i) gens.push_back(oracle::random_graph(n, rng, 0.3));
    gens.push_back(gens.front() ^ gens.back());  // a dependent vector
    Gf2Basis basis(n);
    for (const auto& g : gens) basis.insert(g);
    for (const auto& g : gens) EXPECT_TRUE(basis.contains(g));
    // Each pivot appears in exactly its own basis vector.
    for (std::size_t a = 0; a < basis.vectors().size(); ++a)
      for (std::size_t b = 0; b < basis.vectors().size(); ++b)
        EXPECT_EQ(basis.vectors()[b].test(basis.pivots()[a]), a == b);
  }
}

TEST(Span, SizeIsTwoToTheRankAndMembersDistinct) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 5 + trial % 4;
    std::vector<LabeledGraph> gens;
    for (int i = 0; i < 1 + trial % 10; ++i) gens.push_back(oracle::random_graph(n, rng));
    const LinearFamily fam(n, gens);
    const GraphFamily span = enumerate_span(fam);
    EXPECT_EQ(span.size(), std::size_t{1} << fam.rank());
    EXPECT_NO_THROW(span.validate());
    EXPECT_EQ(span.claimed_size(), fam.size());
    for (std::size_t i = 0; i < span.size(); ++i) EXPECT_TRUE(fam.contains(span[i]));
  }
}

TEST(Span, WalkMatchesCoefficientMembers) {
  std::mt19937_64 rng(29);
  std::vector<LabeledGraph> gens;
  for (int i = 0; i < 7; ++i) gens.push_back(oracle::random_graph(9, rng));
  const LinearFamily fam(9, gens);
  std::set<std::uint64_t> seen;
  for_each_span_member(fam.basis(), [&](const LabeledGraph& g, std::uint64_t mask) {
    EXPECT_EQ(g, span_member(fam.basis(), mask));
    seen.insert(mask);
  });
  EXPECT_EQ(seen.size(), std::size_t{1} << fam.rank());
}

TEST(Span, RefusesOverBudgetEnumeration) {
  EXPECT_THROW(enumerate_span(dual_isolated_space(10)), capability_error);
}

TEST(Gf2Basis, RejectsMixedOrders) {
  Gf2Basis basis(4);
  EXPECT_THROW(basis.insert(LabeledGraph(5)), std::domain_error);
}

}  // namespace
}  // namespace gfcode
