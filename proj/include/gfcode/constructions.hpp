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

// Explicit graph family codes and the dual families that certify their
// upper bounds.
//
// Good families: every pairwise symmetric difference satisfies the target
// predicate. Dual families: no pairwise symmetric difference does.

#ifndef GFCODE_CONSTRUCTIONS_HPP_
#define GFCODE_CONSTRUCTIONS_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gfcode/cardinality.hpp"
#include "gfcode/errors.hpp"
#include "gfcode/factorization.hpp"
#include "gfcode/family.hpp"
#include "gfcode/gf2.hpp"
#include "gfcode/graph.hpp"

namespace gfcode {

/// Explicit families above this many members are refused; use the implicit
/// (linear or affine) form instead.
inline constexpr int kFamilyBudgetLog2 = 24;

namespace detail {

inline Provenance provenance_of(std::string name,
                                std::initializer_list<std::pair<const std::string, std::string>> params) {
  return Provenance{std::move(name), std::map<std::string, std::string>(params)};
}

inline void require_budget(const Cardinality& size, const std::string& what) {
  if (size > Cardinality::pow2(kFamilyBudgetLog2))
    throw capability_error(what + ": " + size.to_short_string() +
                           " members exceed the enumeration budget 2^" +
                           std::to_string(kFamilyBudgetLog2));
}

inline std::uint64_t all_vertices(int n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

/// K_S + K_{[n]\S} for every S not containing vertex n, filtered on |S|.
template <typename Keep>
GraphFamily split_cliques(int n, Provenance prov, Keep&& keep) {
  GraphFamily fam(n, std::move(prov));
  const std::uint64_t all = all_vertices(n);
  const std::uint64_t limit = std::uint64_t{1} << (n - 1);
  for (std::uint64_t s = 0; s < limit; ++s) {
    if (!keep(std::popcount(s))) continue;
    fam.push_back(graphs::clique_on(n, s) ^ graphs::clique_on(n, all & ~s));
  }
  return fam;
}

inline LabeledGraph graph_of(int n, std::initializer_list<int> pairs) {
  // Two-digit literals: 12 is the edge {1,2}.
  LabeledGraph g(n);
  for (int p : pairs) g.add_edge(p / 10, p % 10);
  return g;
}

inline bool is_odd_prime(int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Connectivity

/// Disjoint unions of two complete graphs covering [n], one per unordered
/// bipartition (including the trivial one). 2^{n-1} members.
inline GraphFamily split_clique_family(int n) {
  if (n < 2) throw std::domain_error("split_clique_family: need n >= 2");
  detail::require_budget(Cardinality::pow2(n - 1), "split_clique_family");
  GraphFamily fam = detail::split_cliques(n, detail::provenance_of("split-clique", {{"n", std::to_string(n)}}),
                                          [](int) { return true; });
  fam.set_claimed_size(Cardinality::pow2(n - 1));
  return fam;
}

/// Split cliques whose two sides both have even size; n even. 2^{n-2} members.
inline GraphFamily even_split_family(int n) {
  if (n < 4 || n % 2 != 0) throw std::domain_error("even_split_family: need even n >= 4");
  detail::require_budget(Cardinality::pow2(n - 2), "even_split_family");
  GraphFamily fam = detail::split_cliques(n, detail::provenance_of("even-split", {{"n", std::to_string(n)}}),
                                          [](int s) { return s % 2 == 0; });
  fam.set_claimed_size(Cardinality::pow2(n - 2));
  return fam;
}

/// 2^{n-2} - C(n-2, (n-3)/2) for odd n >= 5; 2 for n = 3.
inline Cardinality odd_two_conn_size(int n) {
  if (n == 3) return 2;
  std::uint64_t binom = 1;
  const int top = n - 2, pick = (n - 3) / 2;
  for (int i = 1; i <= pick; ++i) binom = binom * static_cast<std::uint64_t>(top - pick + i) / i;
  return Cardinality(((std::uint64_t{1} << (n - 2)) - binom));
}

/// Odd-n 2-connected family: split cliques whose smaller side is odd when
/// n = 1 (mod 4) and even when n = 3 (mod 4); {empty, K_3} when n = 3.
inline GraphFamily odd_two_conn_family(int n) {
  if (n < 3 || n % 2 == 0) throw std::domain_error("odd_two_conn_family: need odd n >= 3");
  if (n > 33) throw capability_error("odd_two_conn_family: n too large to enumerate");
  auto prov = detail::provenance_of("odd-2conn", {{"n", std::to_string(n)}});
  GraphFamily fam;
  if (n == 3) {
    fam = GraphFamily(3, prov);
    fam.push_back(graphs::empty(3));
    fam.push_back(graphs::complete(3));
  } else {
    const int want = n % 4 == 1 ? 1 : 0;
    fam = detail::split_cliques(n, prov, [&](int s) { return std::min(s, n - s) % 2 == want; });
  }
  fam.set_claimed_size(odd_two_conn_size(n));
  return fam;
}

// ---------------------------------------------------------------------------
// Hamming codes and 3-connected linear families

/// Binary Hamming code of length 2^k - 1. Codewords are bit masks with bit
/// i-1 for coordinate i; parity-check column i is the binary expansion of i.
struct HammingCode {
  int k = 0;
  int length = 0;
  std::vector<std::uint64_t> basis;  // systematic, one per non-power-of-two column

  std::vector<std::uint64_t> codewords() const {
    std::vector<std::uint64_t> out;
    out.reserve(std::size_t{1} << basis.size());
    std::uint64_t cur = 0;
    out.push_back(cur);
    for (std::uint64_t step = 1; step < (std::uint64_t{1} << basis.size()); ++step) {
      cur ^= basis[static_cast<std::size_t>(std::countr_zero(step))];
      out.push_back(cur);
    }
    return out;
  }

  /// Syndrome of a word under the parity-check matrix.
  std::uint64_t syndrome(std::uint64_t word) const {
    std::uint64_t s = 0;
    for (int i = 1; i <= length; ++i)
      if ((word >> (i - 1)) & 1u) s ^= static_cast<std::uint64_t>(i);
    return s;
  }
};

inline HammingCode hamming_code(int k) {
  if (k < 2) throw std::domain_error("hamming_code: need k >= 2");
  const int n = (1 << k) - 1;
  if (n > kMaxVertices) throw capability_error("hamming_code: length above vertex limit");
  HammingCode code{k, n, {}};
  for (int col = 1; col <= n; ++col) {
    if (std::has_single_bit(static_cast<unsigned>(col))) continue;
    // e_col plus the unit columns 2^t for each bit t of col.
    std::uint64_t word = std::uint64_t{1} << (col - 1);
    for (int t = 0; t < k; ++t)
      if ((col >> t) & 1) word |= std::uint64_t{1} << ((1 << t) - 1);
    code.basis.push_back(word);
  }
  return code;
}

/// Minimum nonzero weight over all codewords.
inline int minimum_distance(const HammingCode& code) {
  int best = code.length + 1;
  for (std::uint64_t w : code.codewords())
    if (w) best = std::min(best, std::popcount(w));
  return best;
}

/// Codeword c mapped to the complete bipartite graph between {i : c_i = 0}
/// and {i : c_i = 1}. The map is linear with kernel {0, all-ones}.
inline LabeledGraph codeword_cut(int n, std::uint64_t codeword) { return graphs::cut(n, codeword); }

/// Span of the cut graphs of the Hamming code of length n = 2^k - 1.
/// Rank n - k - 1; the generators are deliberately dependent.
inline LinearFamily hamming_bipartite_family(int k) {
  const HammingCode code = hamming_code(k);
  std::vector<LabeledGraph> gens;
  for (std::uint64_t w : code.basis) gens.push_back(codeword_cut(code.length, w));
  return LinearFamily(code.length, std::move(gens),
                      detail::provenance_of("hamming-3conn", {{"k", std::to_string(k)}}),
                      /*redundant=*/true);
}

// ---------------------------------------------------------------------------
// Hamiltonicity via the rotational perfect 1-factorization of K_{p+1}

namespace detail {

inline OneFactorization perfect_factorization(int m) {
  if (m % 2 != 0 || !is_odd_prime(m - 1))
    throw unsupported_parameter("no perfect 1-factorization available for m=" +
                                std::to_string(m) + " (need m = p+1, p an odd prime)");
  OneFactorization f = starter_factorization(m);
  if (!verify_p1f(f))
    throw capability_error("starter factorization of K_" + std::to_string(m) + " is not perfect");
  return f;
}

/// Even-subset space of `classes`: generated by class[0] ^ class[i].
inline std::vector<LabeledGraph> even_unions(const std::vector<LabeledGraph>& classes) {
  std::vector<LabeledGraph> gens;
  for (std::size_t i = 1; i < classes.size(); ++i) gens.push_back(classes[0] ^ classes[i]);
  return gens;
}

}  // namespace detail

/// Unions of an even number of classes of a perfect 1-factorization of K_m,
/// m = p + 1. Rank m - 2.
inline LinearFamily ham_cycle_family(int m) {
  const OneFactorization f = detail::perfect_factorization(m);
  return LinearFamily(m, detail::even_unions(f.matchings),
                      detail::provenance_of("ham-cycle", {{"n", std::to_string(m)}}));
}

/// Same construction on K_p after deleting vertex p+1 from every class.
/// Rank p - 1.
inline LinearFamily ham_path_family(int p) {
  if (!detail::is_odd_prime(p))
    throw unsupported_parameter("ham_path_family: p=" + std::to_string(p) +
                                " is not an odd prime");
  const OneFactorization f = detail::perfect_factorization(p + 1);
  std::vector<LabeledGraph> truncated;
  for (const auto& mt : f.matchings) {
    LabeledGraph t(p);
    for (const Edge& e : mt.edges())
      if (e.second <= p) t.add_edge(e.first, e.second);
    truncated.push_back(t);
  }
  return LinearFamily(p, detail::even_unions(truncated),
                      detail::provenance_of("ham-path", {{"p", std::to_string(p)}}));
}

// ---------------------------------------------------------------------------
// Spanning stars

/// star_family together with the auxiliary colouring it was built from:
/// colour class j (vertex j of [n]) is `classes[j-1]`, a matching on the
/// auxiliary vertices v_1..v_{|family|}.
struct StarConstruction {
  GraphFamily family;
  std::vector<LabeledGraph> classes;

  /// The vertex of [n] guaranteed to have full degree in G_h ^ G_k (1-based).
  int center(int h, int k) const {
    for (std::size_t j = 0; j < classes.size(); ++j)
      if (classes[j].has_edge(h, k)) return static_cast<int>(j) + 1;
    return 0;
  }
};

namespace detail {

/// Side A of the union of two edge-disjoint matchings: in each component
/// the smallest auxiliary vertex goes to A.
inline std::uint64_t bipartition_side(const LabeledGraph& united) {
  const Adjacency adj(united);
  std::uint64_t side_a = 0;
  std::uint64_t seen = 0;
  for (int v = 0; v < adj.n; ++v) {
    if (seen & bit(v)) continue;
    std::uint64_t frontier = bit(v);
    seen |= frontier;
    bool in_a = true;
    while (frontier) {
      if (in_a) side_a |= frontier;
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) next |= adj.rows[std::countr_zero(f)];
      next &= ~seen;
      seen |= next;
      frontier = next;
      in_a = !in_a;
    }
  }
  return side_a;
}

/// Odd-n body: fills edges {i,j} of [n] into `out` (members G_1..G_{n+1} or
/// G_1..G_n) from classes M_1..M_n over the auxiliary vertex set.
inline void star_edges(int n, const std::vector<LabeledGraph>& classes, std::vector<LabeledGraph>& out) {
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) {
      const std::uint64_t a = bipartition_side(classes[i - 1] ^ classes[j - 1]);
      for (std::size_t k = 0; k < out.size(); ++k)
        if ((a >> k) & 1u) out[k].add_edge(i, j);
    }
}

}  // namespace detail

inline StarConstruction star_construction(int n) {
  if (n < 2) throw std::domain_error("star_family: need n >= 2");
  auto prov = detail::provenance_of("star", {{"n", std::to_string(n)}});
  StarConstruction sc{GraphFamily(n, prov), {}};
  if (n == 2) {
    sc.family.push_back(graphs::empty(2));
    sc.family.push_back(graphs::complete(2));
    sc.classes = {LabeledGraph(2, {{1, 2}}), LabeledGraph(2)};
    sc.family.set_claimed_size(2);
    return sc;
  }
  if (n % 2 == 1) {
    // n colour classes of K_{n+1}; members G_1..G_{n+1}.
    sc.classes = starter_factorization(n + 1).matchings;
    std::vector<LabeledGraph> members(static_cast<std::size_t>(n + 1), LabeledGraph(n));
    detail::star_edges(n, sc.classes, members);
    for (const auto& g : members) sc.family.push_back(g);
    sc.family.set_claimed_size(static_cast<std::uint64_t>(n + 1));
  } else {
    // n-1 classes of K_n; vertex n acts as an empty class.
    sc.classes = starter_factorization(n).matchings;
    std::vector<LabeledGraph> members(static_cast<std::size_t>(n), LabeledGraph(n));
    detail::star_edges(n - 1, sc.classes, members);
    for (int i = 1; i < n; ++i)
      for (const Edge& e : sc.classes[static_cast<std::size_t>(i - 1)].edges())
        members[static_cast<std::size_t>(e.first - 1)].add_edge(i, n);
    for (const auto& g : members) sc.family.push_back(g);
    sc.classes.push_back(LabeledGraph(n));
    sc.family.set_claimed_size(static_cast<std::uint64_t>(n));
  }
  return sc;
}

/// n+1 graphs for odd n, n for even n, pairwise differing in a spanning star.
inline GraphFamily star_family(int n) { return star_construction(n).family; }

// ---------------------------------------------------------------------------
// Triangle and odd-cycle families for small n

inline GraphFamily k3_family_3() {
  GraphFamily fam(3, detail::provenance_of("k3", {{"n", "3"}}));
  fam.push_back(graphs::empty(3));
  fam.push_back(graphs::complete(3));
  fam.set_claimed_size(2);
  return fam;
}

inline GraphFamily k3_family_4() {
  GraphFamily fam(4, detail::provenance_of("k3", {{"n", "4"}}));
  fam.push_back(graphs::empty(4));
  fam.push_back(detail::graph_of(4, {12, 23, 13, 34}));
  fam.push_back(detail::graph_of(4, {23, 34, 24, 14}));
  fam.push_back(detail::graph_of(4, {12, 13, 24, 14}));
  fam.set_claimed_size(4);
  return fam;
}

/// Pentagon construction: {12,23,13,35} and its four rotations.
inline LinearFamily k3_family_5() {
  std::vector<LabeledGraph> gens = {
      detail::graph_of(5, {12, 23, 13, 35}), detail::graph_of(5, {23, 34, 24, 14}),
      detail::graph_of(5, {34, 45, 35, 25}), detail::graph_of(5, {45, 15, 14, 13}),
      detail::graph_of(5, {15, 12, 25, 24})};
  return LinearFamily(5, std::move(gens), detail::provenance_of("k3", {{"n", "5"}}), true);
}

/// Four edge-disjoint triangles plus three rotated K_4's, covering K_6 twice.
inline LinearFamily k3_family_6() {
  std::vector<LabeledGraph> gens = {
      detail::graph_of(6, {12, 23, 13}),
      detail::graph_of(6, {34, 45, 35}),
      detail::graph_of(6, {56, 16, 15}),
      detail::graph_of(6, {24, 46, 26}),
      detail::graph_of(6, {12, 24, 45, 15, 14, 25}),
      detail::graph_of(6, {23, 35, 56, 26, 25, 36}),
      detail::graph_of(6, {34, 46, 16, 13, 36, 14})};
  return LinearFamily(6, std::move(gens), detail::provenance_of("k3", {{"n", "6"}}), true);
}

/// Rotations of the triangle {12,24,14} on Z_7 (a Steiner triple system)
/// plus three edge-disjoint 7-cycles.
inline LinearFamily codd_family_7() {
  std::vector<LabeledGraph> gens;
  for (int t = 0; t < 7; ++t) {
    auto v = [t](int x) { return (x - 1 + t) % 7 + 1; };
    LabeledGraph g(7);
    g.add_edge(v(1), v(2));
    g.add_edge(v(2), v(4));
    g.add_edge(v(1), v(4));
    gens.push_back(g);
  }
  gens.push_back(detail::graph_of(7, {12, 23, 34, 45, 56, 67, 17}));
  gens.push_back(detail::graph_of(7, {13, 35, 57, 27, 24, 46, 16}));
  gens.push_back(detail::graph_of(7, {14, 47, 37, 36, 26, 25, 15}));
  return LinearFamily(7, std::move(gens), detail::provenance_of("codd", {{"n", "7"}}), true);
}

// ---------------------------------------------------------------------------
// Families agreeing on a clique

/// Graphs with no edge inside {1..r}; differences leave {1..r} independent.
inline LinearFamily clique_agreement_space(int n, int r) {
  if (r < 2 || r > n) throw std::domain_error("clique_agreement: need 2 <= r <= n");
  std::vector<LabeledGraph> gens;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i)
      if (j > r) gens.push_back(LabeledGraph(n, {{i, j}}));
  return LinearFamily(n, std::move(gens),
                      detail::provenance_of("clique-agreement", {{"n", std::to_string(n)},
                                                                 {"r", std::to_string(r)}}));
}

inline GraphFamily clique_agreement_family(int n, int r) {
  const LinearFamily space = clique_agreement_space(n, r);
  detail::require_budget(space.size(), "clique_agreement_family");
  return enumerate_span(space);
}

// ---------------------------------------------------------------------------
// Dual families

namespace detail {

inline LinearFamily edge_space(int n, const LabeledGraph& allowed, Provenance prov) {
  std::vector<LabeledGraph> gens;
  allowed.for_each_slot([&](std::size_t s) {
    LabeledGraph g(n);
    g.set(s);
    gens.push_back(g);
  });
  return LinearFamily(n, std::move(gens), std::move(prov));
}

/// Minimum edge cover used by the dual star family: {1,2},{3,4},... plus
/// {n-1,n} for odd n.
inline LabeledGraph consecutive_cover(int n) {
  LabeledGraph t(n);
  for (int v = 1; v + 1 <= n; v += 2) t.add_edge(v, v + 1);
  if (n % 2 == 1) t.add_edge(n - 1, n);
  return t;
}

}  // namespace detail

/// All graphs in which vertex n is isolated. 2^{C(n-1,2)} members.
inline LinearFamily dual_isolated_space(int n) {
  if (n < 2) throw std::domain_error("dual_isolated: need n >= 2");
  LabeledGraph allowed(n);
  for (int j = 2; j < n; ++j)
    for (int i = 1; i < j; ++i) allowed.add_edge(i, j);
  return detail::edge_space(n, allowed, detail::provenance_of("dual-isolated", {{"n", std::to_string(n)}}));
}

/// Vertex n isolated or adjacent only to n-1. 2^{C(n-1,2)+1} members.
inline LinearFamily dual_pendant_space(int n) {
  if (n < 2) throw std::domain_error("dual_pendant: need n >= 2");
  LabeledGraph allowed(n);
  for (int j = 2; j < n; ++j)
    for (int i = 1; i < j; ++i) allowed.add_edge(i, j);
  allowed.add_edge(n - 1, n);
  return detail::edge_space(n, allowed, detail::provenance_of("dual-pendant", {{"n", std::to_string(n)}}));
}

/// All graphs containing the fixed minimum edge cover T: the coset T + W
/// with W the graphs avoiding T. 2^{C(n,2) - ceil(n/2)} members.
inline AffineFamily dual_star_coset(int n) {
  if (n < 2) throw std::domain_error("dual_star: need n >= 2");
  const LabeledGraph cover = detail::consecutive_cover(n);
  return AffineFamily{cover, detail::edge_space(n, complement(cover),
                                                detail::provenance_of("dual-star", {{"n", std::to_string(n)}}))};
}

/// All 2^{|E(H)|} subgraphs of a host H.
inline LinearFamily dual_subgraph_space(const LabeledGraph& host) {
  return detail::edge_space(host.order(), host,
                            detail::provenance_of("dual-subgraph", {{"n", std::to_string(host.order())},
                                                                    {"host_edges", std::to_string(host.edge_count())}}));
}

inline GraphFamily dual_isolated_family(int n) {
  const LinearFamily space = dual_isolated_space(n);
  detail::require_budget(space.size(), "dual_isolated_family");
  return enumerate_span(space);
}

inline GraphFamily dual_pendant_family(int n) {
  const LinearFamily space = dual_pendant_space(n);
  detail::require_budget(space.size(), "dual_pendant_family");
  return enumerate_span(space);
}

inline GraphFamily dual_star_family(int n) {
  const AffineFamily coset = dual_star_coset(n);
  detail::require_budget(coset.size(), "dual_star_family");
  return materialize(coset);
}

inline GraphFamily dual_subgraph_family(const LabeledGraph& host) {
  const LinearFamily space = dual_subgraph_space(host);
  detail::require_budget(space.size(), "dual_subgraph_family");
  return enumerate_span(space);
}

inline GraphFamily dual_subgraph_family(int n, const LabeledGraph& host) {
  if (host.order() != n)
    throw std::domain_error("dual_subgraph_family: host has n=" + std::to_string(host.order()));
  return dual_subgraph_family(host);
}

inline Cardinality dual_lowdeg_size(int n) {
  return Cardinality(static_cast<std::uint64_t>(n)) * Cardinality::pow2(static_cast<std::int64_t>(pair_count(n - 1)));
}

/// Vertex n of degree at most 1: n * 2^{C(n-1,2)} members. Not linear.
inline GraphFamily dual_lowdeg_family(int n) {
  if (n < 2) throw std::domain_error("dual_lowdeg: need n >= 2");
  detail::require_budget(dual_lowdeg_size(n), "dual_lowdeg_family");
  const GraphFamily base = dual_isolated_family(n);
  GraphFamily fam(n, detail::provenance_of("dual-lowdeg", {{"n", std::to_string(n)}}));
  fam.reserve(base.size() * static_cast<std::size_t>(n));
  for (int nb = 0; nb < n; ++nb) {
    LabeledGraph pendant(n);
    if (nb > 0) pendant.add_edge(nb, n);
    for (std::size_t i = 0; i < base.size(); ++i) fam.push_back(base[i] ^ pendant);
  }
  fam.set_claimed_size(dual_lowdeg_size(n));
  return fam;
}

}  // namespace gfcode

#endif  // GFCODE_CONSTRUCTIONS_HPP_
