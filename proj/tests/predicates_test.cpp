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
#include "gfcode/factorization.hpp"
#include "gfcode/predicates.hpp"
#include "support/predicate_oracle.hpp"

namespace gfcode {
namespace {

TEST(Connected, Examples) {
  EXPECT_TRUE(is_connected(graphs::path(3)));
  EXPECT_FALSE(is_connected(LabeledGraph(3, {{1, 2}})));
  EXPECT_FALSE(is_connected(LabeledGraph(4)));
  EXPECT_THROW(is_connected(LabeledGraph(1)), std::domain_error);
}

TEST(Connectivity, Examples) {
  EXPECT_EQ(vertex_connectivity(graphs::cycle(4)), 2);
  EXPECT_EQ(vertex_connectivity(graphs::complete_bipartite(3, 4)), 3);
  EXPECT_EQ(vertex_connectivity(graphs::complete(6)), 5);
  LabeledGraph pendant = graphs::complete(5);
  for (int v = 2; v <= 4; ++v) pendant.remove_edge(v, 5);
  EXPECT_FALSE(is_k_connected(pendant, 2));
  EXPECT_THROW(is_k_connected(graphs::path(3), 0), std::domain_error);
}

TEST(Hamiltonian, Examples) {
  const OneFactorization f = starter_factorization(8);
  EXPECT_TRUE(has_hamiltonian_cycle(f.matchings[0] ^ f.matchings[3]));
  EXPECT_FALSE(has_hamiltonian_path(graphs::star(5)));
  EXPECT_TRUE(has_hamiltonian_path(graphs::cycle(5)));
  EXPECT_TRUE(has_hamiltonian_cycle(graphs::cycle(5)));
  EXPECT_FALSE(has_hamiltonian_cycle(graphs::complete(2)));
}

TEST(Hamiltonian, RefusesOversizedInputs) {
  EXPECT_THROW(has_hamiltonian_cycle(graphs::complete(17)), capability_error);
  EXPECT_TRUE(has_hamiltonian_cycle(graphs::cycle(17), PredicateLimits{.max_hamilton_order = 20}));
}

TEST(SpanningStar, Examples) {
  EXPECT_TRUE(has_spanning_star(graphs::star(6)));
  EXPECT_FALSE(has_spanning_star(graphs::cycle(6)));
  const auto sc = star_construction(5);
  for (std::size_t h = 0; h < sc.family.size(); ++h)
    for (std::size_t k = h + 1; k < sc.family.size(); ++k)
      EXPECT_TRUE(has_spanning_star(sc.family[h] ^ sc.family[k]));
}

TEST(Containment, Examples) {
  EXPECT_TRUE(contains_subgraph(graphs::complete(4), graphs::complete(3)));
  EXPECT_FALSE(contains_induced(graphs::complete(4), graphs::path(3)));
  const auto gens = k3_family_5().generators();
  const LabeledGraph g12 = gens[0] ^ gens[1];
  EXPECT_TRUE(g12.has_edge(1, 2) && g12.has_edge(2, 4) && g12.has_edge(1, 4));
  EXPECT_TRUE(contains_subgraph(g12, graphs::complete(3)));
  EXPECT_FALSE(contains_subgraph(graphs::complete(3), graphs::complete(4)));
}

TEST(Containment, RefusesLargePatterns) {
  EXPECT_THROW(contains_subgraph(graphs::complete(12), graphs::path(9)), capability_error);
}

TEST(OddCycle, Examples) {
  EXPECT_TRUE(has_odd_cycle(graphs::cycle(7)));
  EXPECT_FALSE(has_odd_cycle(graphs::cycle(8)));
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) EXPECT_FALSE(has_odd_cycle(graphs::complete_bipartite(a, b)));
  for_each_span_member(codd_family_7().basis(), [](const LabeledGraph& g, std::uint64_t) {
    if (!g.edgeless()) EXPECT_TRUE(has_odd_cycle(g));
  });
}

TEST(OracleAgreement, ExhaustiveUpToFive) {
  const auto p3 = graphs::path(3), c4 = graphs::cycle(4);
  for (int n = 2; n <= 5; ++n)
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << pair_count(n)); ++m) {
      const LabeledGraph g = oracle::graph_from_mask(n, m);
      ASSERT_EQ(is_connected(g), oracle::connected(g)) << m;
      ASSERT_EQ(vertex_connectivity(g), oracle::connectivity(g)) << m;
      ASSERT_EQ(has_hamiltonian_path(g), oracle::hamiltonian(g, false)) << m;
      ASSERT_EQ(has_hamiltonian_cycle(g), oracle::hamiltonian(g, true)) << m;
      ASSERT_EQ(has_spanning_star(g), oracle::spanning_star(g)) << m;
      ASSERT_EQ(has_odd_cycle(g), oracle::odd_cycle(g)) << m;
      if (n >= 3) ASSERT_EQ(contains_induced(g, p3), oracle::contains(g, p3, true)) << m;
      if (n >= 4) ASSERT_EQ(contains_subgraph(g, c4), oracle::contains(g, c4, false)) << m;
    }
}

TEST(OracleAgreement, HamiltonCycleSampledAtSeven) {
  std::mt19937_64 rng(2026);
  for (int i = 0; i < 10000; ++i) {
    const auto g = oracle::random_graph(7, rng, 0.3 + 0.4 * (i % 3) / 2.0);
    ASSERT_EQ(has_hamiltonian_cycle(g), oracle::hamiltonian(g, true));
  }
}

TEST(Locality, InducedWitnessLiftsToHost) {
  std::mt19937_64 rng(5);
  const auto k3 = graphs::complete(3), p3 = graphs::path(3);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = oracle::random_graph(8, rng);
    const std::uint64_t u = rng() & 0xffu;
    // Induced subgraph on U, relabelled to 1..|U|.
    std::vector<int> keep;
    for (int v = 0; v < 8; ++v)
      if ((u >> v) & 1u) keep.push_back(v + 1);
    if (keep.size() < 3) continue;
    LabeledGraph sub(static_cast<int>(keep.size()));
    for (std::size_t a = 0; a < keep.size(); ++a)
      for (std::size_t b = a + 1; b < keep.size(); ++b)
        if (g.has_edge(keep[a], keep[b])) sub.add_edge(static_cast<int>(a) + 1, static_cast<int>(b) + 1);
    if (contains_subgraph(sub, k3)) EXPECT_TRUE(contains_subgraph(g, k3));
    if (contains_induced(sub, p3)) EXPECT_TRUE(contains_induced(g, p3));
    if (has_odd_cycle(sub)) EXPECT_TRUE(has_odd_cycle(g));
  }
}

TEST(Monotonicity, ConnectivityUnderEdgeAddition) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 500; ++trial) {
    auto g = oracle::random_graph(7, rng, 0.4);
    const int before = vertex_connectivity(g);
    const std::size_t slot = rng() % g.slot_count();
    g.set(slot);
    EXPECT_GE(vertex_connectivity(g), before);
  }
}

TEST(ParsePredicate, NamesAndErrors) {
  auto no_files = [](const std::string&) -> LabeledGraph { throw std::domain_error("no files"); };
  EXPECT_EQ(parse_predicate("2conn", no_files).k(), 2);
  EXPECT_EQ(parse_predicate("kconn:4", no_files).k(), 4);
  EXPECT_EQ(parse_predicate("k3", no_files).kind(), PredicateKind::kContains);
  EXPECT_THROW(parse_predicate("kconn:x", no_files), std::domain_error);
  EXPECT_THROW(parse_predicate("banana", no_files), std::domain_error);
  auto c4 = [](const std::string&) { return graphs::cycle(4); };
  const Predicate p = parse_predicate("indsub:c4.json", c4);
  EXPECT_TRUE(p(graphs::cycle(4)));
  EXPECT_FALSE(p(graphs::complete(4)));
}

}  // namespace
}  // namespace gfcode
