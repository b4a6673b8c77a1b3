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

#ifndef GFCODE_FACTORIZATION_HPP_
#define GFCODE_FACTORIZATION_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "gfcode/graph.hpp"
#include "gfcode/predicates.hpp"

namespace gfcode {

/// Partition of E(K_m), m even, into m-1 perfect matchings.
struct OneFactorization {
  int m = 0;
  std::vector<LabeledGraph> matchings;
};

/// Throws std::domain_error unless `f` is a 1-factorization of K_m.
inline void validate(const OneFactorization& f) {
  const int m = f.m;
  if (m < 2 || m % 2 != 0) throw std::domain_error("1-factorization: m must be even");
  if (f.matchings.size() != static_cast<std::size_t>(m - 1))
    throw std::domain_error("1-factorization: expected m-1 matchings");
  LabeledGraph seen(m);
  for (std::size_t c = 0; c < f.matchings.size(); ++c) {
    const auto& mt = f.matchings[c];
    if (mt.order() != m) throw std::domain_error("1-factorization: matching on wrong n");
    for (int d : degree_sequence(mt))
      if (d != 1)
        throw std::domain_error("1-factorization: class " + std::to_string(c) +
                                " is not a perfect matching");
    bool clash = false;
    mt.for_each_slot([&](std::size_t s) { clash = clash || seen.test(s); });
    if (clash) throw std::domain_error("1-factorization: classes share an edge");
    seen ^= mt;
  }
  if (seen.edge_count() != pair_count(m))
    throw std::domain_error("1-factorization: union is not K_m");
}

/// Rotational 1-factorization on Z_{m-1} + {inf}: matching i holds
/// {inf, i} and {i+j, i-j} (mod m-1) for j = 1..(m-2)/2. Residue r is
/// vertex r+1 and inf is vertex m; matchings are listed by i = 0..m-2.
inline OneFactorization starter_factorization(int m) {
  if (m < 4 || m % 2 != 0)
    throw std::domain_error("starter_factorization: need even m >= 4, got " + std::to_string(m));
  if (m > kMaxVertices) throw capability_error("starter_factorization: m above vertex limit");
  const int q = m - 1;
  OneFactorization f{m, {}};
  f.matchings.reserve(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i) {
    LabeledGraph mt(m);
    mt.add_edge(i + 1, m);
    for (int j = 1; j <= (m - 2) / 2; ++j) {
      const int a = (i + j) % q;
      const int b = ((i - j) % q + q) % q;
      mt.add_edge(a + 1, b + 1);
    }
    f.matchings.push_back(mt);
  }
  return f;
}

/// True iff every union of two classes is a Hamiltonian cycle.
inline bool verify_p1f(const OneFactorization& f) {
  validate(f);
  const std::size_t k = f.matchings.size();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      // Two disjoint perfect matchings form a 2-regular graph, which is a
      // Hamiltonian cycle exactly when it is connected.
      if (!is_connected(f.matchings[a] ^ f.matchings[b])) return false;
    }
  return true;
}

/// Proper edge colouring of K_m with chi'(K_m) classes: the starter classes
/// for even m, and class c = {{i,j} : i+j = c mod m} for odd m.
inline std::vector<LabeledGraph> proper_edge_coloring(int m) {
  if (m < 2) throw std::domain_error("proper_edge_coloring: need m >= 2");
  if (m == 2) return {LabeledGraph(2, {{1, 2}})};
  if (m % 2 == 0) return starter_factorization(m).matchings;
  std::vector<LabeledGraph> classes(static_cast<std::size_t>(m), LabeledGraph(m));
  for (int j = 2; j <= m; ++j)
    for (int i = 1; i < j; ++i) classes[static_cast<std::size_t>((i + j) % m)].add_edge(i, j);
  return classes;
}

}  // namespace gfcode

#endif  // GFCODE_FACTORIZATION_HPP_
