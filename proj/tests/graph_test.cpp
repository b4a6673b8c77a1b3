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

#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "gfcode/cardinality.hpp"
#include "gfcode/family.hpp"
#include "gfcode/graph.hpp"
#include "gfcode/io/family_json.hpp"
#include "support/predicate_oracle.hpp"

namespace gfcode {
namespace {

TEST(EdgeIndex, ColexSlots) {
  EXPECT_EQ(edge_index(1, 2, 4), 0u);
  EXPECT_EQ(edge_index(2, 3, 4), 2u);
  EXPECT_EQ(edge_index(1, 4, 4), 3u);
  EXPECT_EQ(edge_index(3, 4, 4), 5u);
}

TEST(EdgeIndex, RejectsBadPairs) {
  EXPECT_THROW(edge_index(1, 1, 4), std::domain_error);
  EXPECT_THROW(edge_index(0, 2, 4), std::domain_error);
  EXPECT_THROW(edge_index(1, 5, 4), std::domain_error);
  EXPECT_THROW(edge_index(2, 1, 4), std::domain_error);
}

TEST(EdgeIndex, InverseRoundTrip) {
  for (int n = 2; n <= 12; ++n)
    for (std::size_t s = 0; s < pair_count(n); ++s) {
      const Edge e = edge_at(s, n);
      EXPECT_LT(e.first, e.second);
      EXPECT_EQ(edge_index(e.first, e.second, n), s);
    }
}

TEST(LabeledGraph, RejectsOutOfRangeOrder) {
  EXPECT_THROW(LabeledGraph(0), std::domain_error);
  EXPECT_THROW(LabeledGraph(kMaxVertices + 1), std::domain_error);
  EXPECT_NO_THROW(LabeledGraph{kMaxVertices});
}

TEST(LabeledGraph, FromWordsRejectsPaddingBits) {
  const std::vector<std::uint64_t> w{std::uint64_t{1} << 6};  // n=4 has 6 slots
  EXPECT_THROW(LabeledGraph::from_words(4, w), std::domain_error);
}

TEST(SymDiff, GroupLaws) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 20;
    const auto g = oracle::random_graph(n, rng), h = oracle::random_graph(n, rng),
               k = oracle::random_graph(n, rng);
    EXPECT_EQ(sym_diff(g, h), sym_diff(h, g));
    EXPECT_EQ(sym_diff(sym_diff(g, h), k), sym_diff(g, sym_diff(h, k)));
    EXPECT_TRUE(sym_diff(g, g).edgeless());
    EXPECT_EQ(sym_diff(g, LabeledGraph(n)), g);
  }
}

TEST(SymDiff, TwoSplitCliquesGiveCompleteBipartite) {
  const auto g = graphs::clique_on(5, 0b00011) ^ graphs::clique_on(5, 0b11100);
  const auto h = graphs::clique_on(5, 0b01001) ^ graphs::clique_on(5, 0b10110);
  // Parts {2,4} and {1,3,5}.
  EXPECT_EQ(sym_diff(g, h), graphs::cut(5, 0b01010));
}

TEST(SymDiff, OrderMismatchThrows) {
  EXPECT_THROW(sym_diff(LabeledGraph(3), LabeledGraph(4)), std::domain_error);
}

TEST(GraphOps, ComplementAndDegrees) {
  EXPECT_EQ(complement(LabeledGraph(3)), graphs::complete(3));
  EXPECT_EQ(degree(graphs::complete(4), 1), 3);
  EXPECT_EQ(degree_sequence(graphs::path(3)), (std::vector<int>{1, 2, 1}));
  EXPECT_THROW(degree(graphs::complete(4), 5), std::domain_error);
}

TEST(GraphOps, LargeOrderWordBoundary) {
  LabeledGraph g(64);
  g.add_edge(63, 64);
  g.add_edge(1, 2);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.has_edge(64, 63));
  EXPECT_EQ(complement(complement(g)), g);
  EXPECT_EQ(complement(g).edge_count(), pair_count(64) - 2);
}

TEST(GraphFamily, RejectsDuplicatesAndMixedOrders) {
  GraphFamily fam(4);
  fam.push_back(LabeledGraph(4));
  fam.push_back(graphs::complete(4));
  EXPECT_NO_THROW(fam.validate());
  fam.push_back(LabeledGraph(4));
  EXPECT_THROW(fam.validate(), std::domain_error);
  EXPECT_THROW(fam.push_back(LabeledGraph(5)), std::domain_error);
}

TEST(GraphFamily, SortIsNumeric) {
  GraphFamily fam(5);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    auto g = oracle::random_graph(5, rng);
    bool dup = false;
    for (std::size_t j = 0; j < fam.size(); ++j) dup = dup || fam[j] == g;
    if (!dup) fam.push_back(g);
  }
  fam.sort();
  for (std::size_t i = 1; i < fam.size(); ++i) EXPECT_LT(fam.compare(i - 1, i), 0);
}

TEST(Cardinality, ShortFormsAndArithmetic) {
  EXPECT_EQ(Cardinality(16).to_short_string(), "16");
  EXPECT_EQ(Cardinality::pow2(24).to_short_string(), "2^24");
  EXPECT_EQ(Cardinality::pow2(100).to_string(), "1267650600228229401496703205376");
  EXPECT_EQ(Cardinality::pow2(100).to_short_string(), "2^100");
  EXPECT_EQ(Cardinality::pow2(3) * Cardinality(7), Cardinality(56));
  EXPECT_EQ(Cardinality::pow2(70).exact_log2(), 70);
  EXPECT_FALSE(Cardinality(6).exact_log2().has_value());
  EXPECT_LT(Cardinality(5), Cardinality::pow2(3));
  for (const auto& c : {Cardinality(93), Cardinality::pow2(63), Cardinality::times_pow2(7, 80)})
    EXPECT_EQ(io::parse_cardinality(c.to_short_string()), c);
}

TEST(Rational, Normalizes) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(15, 2).to_string(), "15/2");
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
}

TEST(FamilyJson, HexLayoutFollowsSlotOrder) {
  LabeledGraph g(5);
  g.add_edge(1, 2);  // slot 0: byte 0 bit 0
  g.add_edge(1, 5);  // slot 6: byte 0 bit 6
  g.add_edge(4, 5);  // slot 9: byte 1 bit 1
  EXPECT_EQ(io::to_hex(g), "4102");
  EXPECT_EQ(io::from_hex(5, "4102"), g);
  EXPECT_THROW(io::from_hex(5, "41"), std::domain_error);
  EXPECT_THROW(io::from_hex(5, "41F2"), std::domain_error);
  EXPECT_THROW(io::from_hex(5, "4106"), std::domain_error);  // slot 10 is padding
}

TEST(FamilyJson, RoundTripIsByteExact) {
  GraphFamily fam(6, Provenance{"test", {{"n", "6"}}});
  std::mt19937_64 rng(11);
  fam.push_back(LabeledGraph(6));
  for (int i = 0; i < 20; ++i) {
    auto g = oracle::random_graph(6, rng);
    bool dup = false;
    for (std::size_t j = 0; j < fam.size(); ++j) dup = dup || fam[j] == g;
    if (!dup) fam.push_back(g);
  }
  fam.set_claimed_size(Cardinality(fam.size()));
  const std::string text = io::dump(fam);
  const auto doc = io::parse_document(text);
  EXPECT_EQ(doc.family, fam);
  EXPECT_EQ(doc.family.provenance(), fam.provenance());
  EXPECT_EQ(io::dump(doc.family, doc.role), text);
}

TEST(FamilyJson, RejectsMalformedDocuments) {
  EXPECT_THROW(io::parse_document("{"), std::domain_error);
  EXPECT_THROW(io::parse_document(R"({"version":2,"n":3,"edge_order":"colex-1based","graphs":[]})"),
               std::domain_error);
  EXPECT_THROW(io::parse_document(R"({"version":1,"n":3,"edge_order":"lex","graphs":[]})"),
               std::domain_error);
  EXPECT_THROW(
      io::parse_document(R"({"version":1,"n":3,"edge_order":"colex-1based","graphs":["07","07"]})"),
      std::domain_error);
  EXPECT_THROW(
      io::parse_document(R"({"version":1,"n":3,"edge_order":"colex-1based","graphs":["7"]})"),
      std::domain_error);
}

}  // namespace
}  // namespace gfcode
