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

#ifndef GFCODE_GRAPH_HPP_
#define GFCODE_GRAPH_HPP_

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gfcode/errors.hpp"

#ifndef GFCODE_MAX_VERTICES
#define GFCODE_MAX_VERTICES 64
#endif

namespace gfcode {

inline constexpr int kMaxVertices = GFCODE_MAX_VERTICES;
static_assert(kMaxVertices >= 2 && kMaxVertices <= 64,
              "vertex sets are stored in a single 64-bit mask");

constexpr std::size_t pair_count(int n) {
  return n < 2 ? 0 : static_cast<std::size_t>(n) * (n - 1) / 2;
}

inline constexpr std::size_t kMaxSlots = pair_count(kMaxVertices);
inline constexpr std::size_t kMaxWords = (kMaxSlots + 63) / 64;

constexpr std::size_t word_count(int n) { return (pair_count(n) + 63) / 64; }

/// Vertex pair in 1-based labels with first < second.
struct Edge {
  int first = 0;
  int second = 0;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Colex slot of the pair {i, j}, 1 <= i < j <= n:
/// (j-1)(j-2)/2 + (i-1).
inline std::size_t edge_index(int i, int j, int n) {
  if (n < 2 || n > kMaxVertices)
    throw std::domain_error("edge_index: vertex count " + std::to_string(n) +
                            " out of range");
  if (i < 1 || j > n || i >= j)
    throw std::domain_error("edge_index: need 1 <= i < j <= n, got (" +
                            std::to_string(i) + "," + std::to_string(j) + ")");
  return static_cast<std::size_t>(j - 1) * (j - 2) / 2 + (i - 1);
}

namespace detail {

struct SlotTable {
  std::array<Edge, kMaxSlots> pairs{};
  constexpr SlotTable() {
    std::size_t s = 0;
    for (int j = 2; j <= kMaxVertices; ++j)
      for (int i = 1; i < j; ++i) pairs[s++] = Edge{i, j};
  }
};

inline constexpr SlotTable kSlotTable{};

}  // namespace detail

/// Inverse of edge_index. The slot must be below C(n,2).
inline Edge edge_at(std::size_t slot, int n) {
  if (n < 2 || n > kMaxVertices || slot >= pair_count(n))
    throw std::domain_error("edge_at: slot " + std::to_string(slot) +
                            " out of range for n=" + std::to_string(n));
  return detail::kSlotTable.pairs[slot];
}

/// A simple graph on the labeled vertex set {1..n}, stored as the bit vector
/// of its C(n,2) edge slots in colex order. Bits past C(n,2) are always zero.
///
/// Graphs compare by n first, then by the numeric value of the edge vector
/// (slot k has weight 2^k).
class LabeledGraph {
 public:
  LabeledGraph() = default;

  explicit LabeledGraph(int n) : n_(n) {
    if (n < 1 || n > kMaxVertices)
      throw std::domain_error("LabeledGraph: vertex count " +
                              std::to_string(n) + " out of range [1, " +
                              std::to_string(kMaxVertices) + "]");
  }

  LabeledGraph(int n, std::initializer_list<Edge> edges) : LabeledGraph(n) {
    for (const Edge& e : edges) add_edge(e.first, e.second);
  }

  static LabeledGraph from_edges(int n, std::span<const Edge> edges) {
    LabeledGraph g(n);
    for (const Edge& e : edges) g.add_edge(e.first, e.second);
    return g;
  }

  /// Builds from raw words; bits beyond C(n,2) must be clear.
  static LabeledGraph from_words(int n, std::span<const std::uint64_t> words) {
    LabeledGraph g(n);
    if (words.size() != word_count(n))
      throw std::domain_error("LabeledGraph::from_words: word count mismatch");
    std::copy(words.begin(), words.end(), g.words_.begin());
    if (g.has_stray_bits())
      throw std::domain_error("LabeledGraph::from_words: bits past C(n,2)");
    return g;
  }

  int order() const { return n_; }
  std::size_t slot_count() const { return pair_count(n_); }
  std::span<const std::uint64_t> words() const {
    return {words_.data(), word_count(n_)};
  }

  bool test(std::size_t slot) const {
    return (words_[slot >> 6] >> (slot & 63)) & 1u;
  }
  void set(std::size_t slot, bool value = true) {
    const std::uint64_t bit = std::uint64_t{1} << (slot & 63);
    if (value)
      words_[slot >> 6] |= bit;
    else
      words_[slot >> 6] &= ~bit;
  }
  void flip(std::size_t slot) { words_[slot >> 6] ^= std::uint64_t{1} << (slot & 63); }

  bool has_edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    return test(edge_index(i, j, n_));
  }
  void add_edge(int i, int j) {
    if (i > j) std::swap(i, j);
    set(edge_index(i, j, n_));
  }
  void remove_edge(int i, int j) {
    if (i > j) std::swap(i, j);
    set(edge_index(i, j, n_), false);
  }

  std::size_t edge_count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words()) c += std::popcount(w);
    return c;
  }
  bool edgeless() const {
    for (std::uint64_t w : words())
      if (w) return false;
    return true;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for_each_slot([&](std::size_t s) { out.push_back(detail::kSlotTable.pairs[s]); });
    return out;
  }

  /// Calls fn(slot) for every present edge in increasing slot order.
  template <typename Fn>
  void for_each_slot(Fn&& fn) const {
    const std::size_t wc = word_count(n_);
    for (std::size_t w = 0; w < wc; ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        fn(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  /// In-place symmetric difference; both graphs must share n.
  LabeledGraph& operator^=(const LabeledGraph& other) {
    require_same_order(other, "sym_diff");
    const std::size_t wc = word_count(n_);
    for (std::size_t w = 0; w < wc; ++w) words_[w] ^= other.words_[w];
    return *this;
  }
  friend LabeledGraph operator^(LabeledGraph a, const LabeledGraph& b) {
    a ^= b;
    return a;
  }

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }
  friend std::strong_ordering operator<=>(const LabeledGraph& a,
                                          const LabeledGraph& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    for (std::size_t w = word_count(a.n_); w-- > 0;)
      if (auto c = a.words_[w] <=> b.words_[w]; c != 0) return c;
    return std::strong_ordering::equal;
  }

 private:
  void require_same_order(const LabeledGraph& other, const char* what) const {
    if (n_ != other.n_)
      throw std::domain_error(std::string(what) + ": vertex counts differ (" +
                              std::to_string(n_) + " vs " +
                              std::to_string(other.n_) + ")");
  }
  bool has_stray_bits() const {
    const std::size_t slots = pair_count(n_);
    const std::size_t wc = word_count(n_);
    if (slots % 64 != 0 && wc > 0 &&
        (words_[wc - 1] >> (slots % 64)) != 0)
      return true;
    return false;
  }

  int n_ = 1;
  std::array<std::uint64_t, kMaxWords> words_{};
};

inline LabeledGraph sym_diff(const LabeledGraph& g, const LabeledGraph& h) {
  return g ^ h;
}

inline LabeledGraph complement(const LabeledGraph& g) {
  LabeledGraph out(g.order());
  for (std::size_t s = 0; s < g.slot_count(); ++s) out.set(s, !g.test(s));
  return out;
}

inline int degree(const LabeledGraph& g, int v) {
  const int n = g.order();
  if (v < 1 || v > n)
    throw std::domain_error("degree: vertex " + std::to_string(v) +
                            " out of range");
  int d = 0;
  for (int u = 1; u <= n; ++u)
    if (u != v && g.has_edge(u, v)) ++d;
  return d;
}

inline std::vector<int> degree_sequence(const LabeledGraph& g) {
  std::vector<int> deg(static_cast<std::size_t>(g.order()), 0);
  g.for_each_slot([&](std::size_t s) {
    const Edge e = detail::kSlotTable.pairs[s];
    ++deg[e.first - 1];
    ++deg[e.second - 1];
  });
  return deg;
}

/// Neighborhood masks, bit (u-1) of rows[v-1] set iff uv is an edge.
struct Adjacency {
  int n = 0;
  std::array<std::uint64_t, kMaxVertices> rows{};

  explicit Adjacency(const LabeledGraph& g) : n(g.order()) {
    g.for_each_slot([&](std::size_t s) {
      const Edge e = detail::kSlotTable.pairs[s];
      rows[e.first - 1] |= std::uint64_t{1} << (e.second - 1);
      rows[e.second - 1] |= std::uint64_t{1} << (e.first - 1);
    });
  }

  std::uint64_t all() const {
    return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }
  bool adjacent(int u, int v) const { return (rows[u] >> v) & 1u; }
  int degree(int v) const { return std::popcount(rows[v]); }
};

/// Vertex sets below are 1-based label lists or 0-based bit masks as named.
namespace graphs {

inline LabeledGraph empty(int n) { return LabeledGraph(n); }

inline LabeledGraph complete(int n) { return complement(LabeledGraph(n)); }

/// Complete graph on the vertices in `mask` (bit v-1 for vertex v).
inline LabeledGraph clique_on(int n, std::uint64_t mask) {
  LabeledGraph g(n);
  for (int j = 2; j <= n; ++j) {
    if (!((mask >> (j - 1)) & 1u)) continue;
    for (int i = 1; i < j; ++i)
      if ((mask >> (i - 1)) & 1u) g.set(edge_index(i, j, n));
  }
  return g;
}

/// Complete bipartite graph between `mask` and its complement in [n].
inline LabeledGraph cut(int n, std::uint64_t mask) {
  LabeledGraph g(n);
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i)
      if (((mask >> (i - 1)) ^ (mask >> (j - 1))) & 1u) g.set(edge_index(i, j, n));
  return g;
}

/// K_{a,b} with parts {1..a} and {a+1..a+b}.
inline LabeledGraph complete_bipartite(int a, int b) {
  const int n = a + b;
  return cut(n, (std::uint64_t{1} << a) - 1);
}

/// Path 1-2-...-n.
inline LabeledGraph path(int n) {
  LabeledGraph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
  return g;
}

/// Cycle 1-2-...-n-1, n >= 3.
inline LabeledGraph cycle(int n) {
  if (n < 3) throw std::domain_error("cycle: need n >= 3");
  LabeledGraph g = path(n);
  g.add_edge(1, n);
  return g;
}

/// Star centred at vertex 1 with n-1 leaves.
inline LabeledGraph star(int n) {
  LabeledGraph g(n);
  for (int v = 2; v <= n; ++v) g.add_edge(1, v);
  return g;
}

}  // namespace graphs
}  // namespace gfcode

#endif  // GFCODE_GRAPH_HPP_
