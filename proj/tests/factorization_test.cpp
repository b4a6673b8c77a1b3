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

#include <stdexcept>

#include <gtest/gtest.h>

#include "gfcode/factorization.hpp"
#include "gfcode/predicates.hpp"

namespace gfcode {
namespace {

TEST(Starter, SmallOrders) {
  const OneFactorization f4 = starter_factorization(4);
  ASSERT_EQ(f4.matchings.size(), 3u);
  for (const auto& mt : f4.matchings) EXPECT_EQ(degree_sequence(mt), (std::vector<int>(4, 1)));
  const OneFactorization f8 = starter_factorization(8);
  EXPECT_EQ(f8.matchings.size(), 7u);
  EXPECT_NO_THROW(validate(f8));
}

TEST(Starter, ValidForAllEvenOrdersUpToTwenty) {
  for (int m = 4; m <= 20; m += 2) EXPECT_NO_THROW(validate(starter_factorization(m))) << m;
}

TEST(Starter, RejectsOddOrders) {
  EXPECT_THROW(starter_factorization(7), std::domain_error);
  EXPECT_THROW(starter_factorization(2), std::domain_error);
}

TEST(PerfectFactorization, PrimeSuccessorsPassAndSixteenFails) {
  for (int m : {4, 6, 8, 12, 14, 18, 20}) EXPECT_TRUE(verify_p1f(starter_factorization(m))) << m;
  EXPECT_FALSE(verify_p1f(starter_factorization(16)));
  EXPECT_FALSE(verify_p1f(starter_factorization(10)));  // 9 is composite
}

TEST(PerfectFactorization, UnionsAreHamiltonianCycles) {
  const OneFactorization f = starter_factorization(12);
  for (std::size_t a = 0; a < f.matchings.size(); ++a)
    for (std::size_t b = a + 1; b < f.matchings.size(); ++b)
      EXPECT_TRUE(has_hamiltonian_cycle(f.matchings[a] ^ f.matchings[b]));
}

TEST(Validate, DetectsBrokenFactorizations) {
  OneFactorization f = starter_factorization(6);
  f.matchings[1] = f.matchings[0];
  EXPECT_THROW(validate(f), std::domain_error);
  f = starter_factorization(6);
  f.matchings.pop_back();
  EXPECT_THROW(validate(f), std::domain_error);
}

TEST(EdgeColoring, ClassCountsFollowParity) {
  EXPECT_EQ(proper_edge_coloring(5).size(), 5u);
  for (const auto& c : proper_edge_coloring(5)) EXPECT_EQ(c.edge_count(), 2u);
  EXPECT_EQ(proper_edge_coloring(4).size(), 3u);
  for (const auto& c : proper_edge_coloring(4)) EXPECT_EQ(c.edge_count(), 2u);
  for (int m = 2; m <= 12; ++m) {
    const auto classes = proper_edge_coloring(m);
    EXPECT_EQ(classes.size(), static_cast<std::size_t>(m % 2 ? m : m - 1));
    LabeledGraph all(m);
    for (const auto& c : classes) {
      for (int d : degree_sequence(c)) EXPECT_LE(d, 1);
      EXPECT_TRUE((all ^ c).edge_count() == all.edge_count() + c.edge_count());
      all ^= c;
    }
    EXPECT_EQ(all, graphs::complete(m));
  }
}

}  // namespace
}  // namespace gfcode
