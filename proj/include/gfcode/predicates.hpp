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

// Exact graph tests used as family-code conditions.
//
// Connectivity here follows the family-code convention: a graph is connected
// only if it has one component and no isolated vertex, so on n >= 2 vertices
// an isolated vertex always disconnects.

#ifndef GFCODE_PREDICATES_HPP_
#define GFCODE_PREDICATES_HPP_

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gfcode/errors.hpp"
#include "gfcode/graph.hpp"

namespace gfcode {

struct PredicateLimits {
  int max_hamilton_order = 16;
  int max_pattern_order = 8;
};

namespace detail {

inline std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

/// Vertices reachable from `start` inside `within` (0-based masks).
inline std::uint64_t reach(const Adjacency& adj, int start, std::uint64_t within) {
  std::uint64_t seen = bit(start) & within;
  std::uint64_t frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1)
      next |= adj.rows[std::countr_zero(f)];
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

inline void require_order_at_least(const LabeledGraph& g, int min_n, const char* what) {
  if (g.order() < min_n)
    throw std::domain_error(std::string(what) + ": needs n >= " +
                            std::to_string(min_n) + ", got n=" +
                            std::to_string(g.order()));
}

/// Max number of internally vertex-disjoint s-t paths, stopping at `limit`.
/// s and t must be distinct and non-adjacent.
inline int local_connectivity(const Adjacency& adj, int s, int t, int limit) {
  // Split vertex v into in = 2v and out = 2v+1 with unit capacity in->out.
  const int n = adj.n;
  const int nodes = 2 * n;
  constexpr int kInf = 1 << 20;
  std::vector<int> cap(static_cast<std::size_t>(nodes) * nodes, 0);
  auto at = [&](int a, int b) -> int& { return cap[static_cast<std::size_t>(a) * nodes + b]; };
  for (int v = 0; v < n; ++v) at(2 * v, 2 * v + 1) = (v == s || v == t) ? kInf : 1;
  for (int u = 0; u < n; ++u)
    for (std::uint64_t r = adj.rows[u]; r; r &= r - 1) at(2 * u + 1, 2 * std::countr_zero(r)) = kInf;

  const int source = 2 * s + 1;
  const int sink = 2 * t;
  int flow = 0;
  std::vector<int> parent(nodes);
  std::vector<int> queue(nodes);
  while (flow < limit) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[source] = source;
    int head = 0, tail = 0;
    queue[tail++] = source;
    while (head < tail && parent[sink] < 0) {
      const int a = queue[head++];
      for (int b = 0; b < nodes; ++b)
        if (parent[b] < 0 && at(a, b) > 0) {
          parent[b] = a;
          queue[tail++] = b;
        }
    }
    if (parent[sink] < 0) break;
    for (int b = sink; b != source; b = parent[b]) {
      --at(parent[b], b);
      ++at(b, parent[b]);
    }
    ++flow;
  }
  return flow;
}

/// min(kappa(G), cap); kappa(K_n) = n-1.
inline int connectivity_capped(const LabeledGraph& g, int cap) {
  const Adjacency adj(g);
  const int n = adj.n;
  const std::uint64_t all = adj.all();
  if (g.edge_count() == pair_count(n)) return std::min(cap, n - 1);
  if (reach(adj, 0, all) != all) return 0;
  int best = std::min(cap, n - 1);
  for (int v = 0; v < n; ++v) best = std::min(best, adj.degree(v));
  // Some vertex among the first kappa+1 lies outside a minimum separator.
  for (int i = 0; i <= best && i < n; ++i)
    for (int j = i + 1; j < n && best > 0; ++j)
      if (!adj.adjacent(i, j)) best = std::min(best, local_connectivity(adj, i, j, best));
  return best;
}

}  // namespace detail

inline bool is_connected(const LabeledGraph& g) {
  detail::require_order_at_least(g, 2, "is_connected");
  const Adjacency adj(g);
  return detail::reach(adj, 0, adj.all()) == adj.all();
}

/// Minimum vertex cut size, with kappa(K_n) = n-1.
inline int vertex_connectivity(const LabeledGraph& g) {
  detail::require_order_at_least(g, 2, "vertex_connectivity");
  return detail::connectivity_capped(g, g.order() - 1);
}

inline bool is_k_connected(const LabeledGraph& g, int k) {
  detail::require_order_at_least(g, 2, "is_k_connected");
  if (k < 1) throw std::domain_error("is_k_connected: need k >= 1");
  if (g.order() < k + 1) return false;
  return detail::connectivity_capped(g, k) >= k;
}

inline bool has_spanning_star(const LabeledGraph& g) {
  detail::require_order_at_least(g, 2, "has_spanning_star");
  const int n = g.order();
  for (int d : degree_sequence(g))
    if (d == n - 1) return true;
  return false;
}

inline bool has_odd_cycle(const LabeledGraph& g) {
  const Adjacency adj(g);
  std::uint64_t unseen = adj.all();
  while (unseen) {
    const int root = std::countr_zero(unseen);
    // Alternate BFS layers; an edge inside a layer set means an odd cycle.
    std::uint64_t side[2] = {detail::bit(root), 0};
    std::uint64_t frontier = side[0];
    int parity = 0;
    std::uint64_t seen = frontier;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) {
        const std::uint64_t nb = adj.rows[std::countr_zero(f)];
        if (nb & side[parity]) return true;
        next |= nb;
      }
      next &= ~seen;
      seen |= next;
      parity ^= 1;
      side[parity] |= next;
      frontier = next;
    }
    unseen &= ~seen;
  }
  return false;
}

namespace detail {

class HamiltonSearch {
 public:
  explicit HamiltonSearch(const Adjacency& adj) : adj_(adj), all_(adj.all()) {}

  bool path_from(int start) { return extend(start, bit(start), -1); }
  bool cycle() { return extend(0, bit(0), 0); }

 private:
  bool extend(int end, std::uint64_t visited, int close_to) {
    if (visited == all_) return close_to < 0 || adj_.adjacent(end, close_to);
    const std::uint64_t rest = all_ & ~visited;
    // Unvisited vertices must all be reachable from the current end through
    // unvisited vertices.
    if ((reach(adj_, end, rest | bit(end)) | bit(end)) != (rest | bit(end))) return false;
    if (close_to >= 0 && !(adj_.rows[close_to] & rest)) return false;
    for (std::uint64_t c = adj_.rows[end] & rest; c; c &= c - 1) {
      const int next = std::countr_zero(c);
      if (extend(next, visited | bit(next), close_to)) return true;
    }
    return false;
  }

  const Adjacency& adj_;
  std::uint64_t all_;
};

inline void require_hamilton_order(const LabeledGraph& g, const PredicateLimits& limits,
                                   const char* what) {
  if (g.order() > limits.max_hamilton_order)
    throw capability_error(std::string(what) + ": n=" + std::to_string(g.order()) +
                           " exceeds the Hamiltonicity limit " +
                           std::to_string(limits.max_hamilton_order));
}

}  // namespace detail

inline bool has_hamiltonian_path(const LabeledGraph& g, const PredicateLimits& limits = {}) {
  detail::require_order_at_least(g, 2, "has_hamiltonian_path");
  detail::require_hamilton_order(g, limits, "has_hamiltonian_path");
  const Adjacency adj(g);
  if (detail::reach(adj, 0, adj.all()) != adj.all()) return false;
  int leaves = 0;
  int leaf = -1;
  for (int v = 0; v < adj.n; ++v)
    if (adj.degree(v) == 1) {
      ++leaves;
      leaf = v;
    }
  if (leaves > 2) return false;
  detail::HamiltonSearch search(adj);
  if (leaf >= 0) return search.path_from(leaf);
  for (int v = 0; v < adj.n; ++v)
    if (search.path_from(v)) return true;
  return false;
}

/// On n = 2 there is no cycle in a simple graph, so the answer is false.
inline bool has_hamiltonian_cycle(const LabeledGraph& g, const PredicateLimits& limits = {}) {
  detail::require_order_at_least(g, 2, "has_hamiltonian_cycle");
  if (g.order() < 3) return false;
  detail::require_hamilton_order(g, limits, "has_hamiltonian_cycle");
  const Adjacency adj(g);
  for (int v = 0; v < adj.n; ++v)
    if (adj.degree(v) < 2) return false;
  if (detail::reach(adj, 0, adj.all()) != adj.all()) return false;
  return detail::HamiltonSearch(adj).cycle();
}

namespace detail {

class PatternMatcher {
 public:
  PatternMatcher(const LabeledGraph& host, const LabeledGraph& pattern, bool induced)
      : host_(host), pattern_(pattern), induced_(induced) {
    const int k = pattern_.n;
    // Each next position is the vertex with most already-placed neighbours.
    std::uint64_t placed = 0;
    for (int p = 0; p < k; ++p) {
      int best = -1, best_links = -1, best_deg = -1;
      for (int v = 0; v < k; ++v) {
        if (placed & bit(v)) continue;
        const int links = std::popcount(pattern_.rows[v] & placed);
        const int deg = pattern_.degree(v);
        if (links > best_links || (links == best_links && deg > best_deg)) {
          best = v;
          best_links = links;
          best_deg = deg;
        }
      }
      order_[p] = best;
      placed |= bit(best);
    }
  }

  bool run() { return place(0, 0); }

 private:
  bool place(int pos, std::uint64_t used) {
    const int k = pattern_.n;
    if (pos == k) return true;
    const int pv = order_[pos];
    std::uint64_t cand = host_.all() & ~used;
    for (int q = 0; q < pos; ++q) {
      const int other = order_[q];
      const std::uint64_t image_nb = host_.rows[image_[other]];
      if (pattern_.adjacent(pv, other))
        cand &= image_nb;
      else if (induced_)
        cand &= ~image_nb;
    }
    const int need = pattern_.degree(pv);
    for (; cand; cand &= cand - 1) {
      const int h = std::countr_zero(cand);
      if (host_.degree(h) < need) continue;
      image_[pv] = h;
      if (place(pos + 1, used | bit(h))) return true;
    }
    return false;
  }

  Adjacency host_;
  Adjacency pattern_;
  bool induced_;
  std::array<int, kMaxVertices> order_{};
  std::array<int, kMaxVertices> image_{};
};

inline void require_pattern_order(const LabeledGraph& pattern, const PredicateLimits& limits) {
  if (pattern.order() > limits.max_pattern_order)
    throw capability_error("pattern has " + std::to_string(pattern.order()) +
                           " vertices; limit is " +
                           std::to_string(limits.max_pattern_order));
}

}  // namespace detail

/// Non-induced subgraph containment; the pattern needs at least one edge.
inline bool contains_subgraph(const LabeledGraph& g, const LabeledGraph& pattern,
                              const PredicateLimits& limits = {}) {
  detail::require_pattern_order(pattern, limits);
  if (pattern.edgeless())
    throw std::domain_error("contains_subgraph: pattern must have an edge");
  if (pattern.order() > g.order()) return false;
  if (pattern.edge_count() > g.edge_count()) return false;
  return detail::PatternMatcher(g, pattern, false).run();
}

inline bool contains_induced(const LabeledGraph& g, const LabeledGraph& pattern,
                             const PredicateLimits& limits = {}) {
  detail::require_pattern_order(pattern, limits);
  if (pattern.order() > g.order()) return false;
  return detail::PatternMatcher(g, pattern, true).run();
}

enum class PredicateKind {
  kConnected,
  kKConnected,
  kHamPath,
  kHamCycle,
  kSpanningStar,
  kContains,
  kContainsInduced,
  kOddCycle,
};

/// A named, total test on labeled graphs with n >= 2.
class Predicate {
 public:
  static Predicate connected() { return Predicate(PredicateKind::kConnected, "connected"); }
  static Predicate k_connected(int k) {
    if (k < 1) throw std::domain_error("k_connected: need k >= 1");
    Predicate p(PredicateKind::kKConnected,
                k == 2 ? "2conn" : k == 3 ? "3conn" : "kconn:" + std::to_string(k));
    p.k_ = k;
    return p;
  }
  static Predicate ham_path() { return Predicate(PredicateKind::kHamPath, "hampath"); }
  static Predicate ham_cycle() { return Predicate(PredicateKind::kHamCycle, "hamcycle"); }
  static Predicate spanning_star() { return Predicate(PredicateKind::kSpanningStar, "star"); }
  static Predicate odd_cycle() { return Predicate(PredicateKind::kOddCycle, "oddcycle"); }
  static Predicate contains(LabeledGraph pattern, std::string name = "sub") {
    if (pattern.edgeless())
      throw std::domain_error("contains: pattern must have an edge");
    Predicate p(PredicateKind::kContains, std::move(name));
    p.pattern_ = std::move(pattern);
    return p;
  }
  static Predicate contains_induced(LabeledGraph pattern, std::string name = "indsub") {
    Predicate p(PredicateKind::kContainsInduced, std::move(name));
    p.pattern_ = std::move(pattern);
    return p;
  }
  static Predicate triangle() { return contains(graphs::complete(3), "k3"); }

  PredicateKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  int k() const { return k_; }
  const std::optional<LabeledGraph>& pattern() const { return pattern_; }
  const PredicateLimits& limits() const { return limits_; }
  Predicate& with_limits(PredicateLimits limits) {
    limits_ = limits;
    return *this;
  }

  bool operator()(const LabeledGraph& g) const {
    switch (kind_) {
      case PredicateKind::kConnected: return is_connected(g);
      case PredicateKind::kKConnected: return is_k_connected(g, k_);
      case PredicateKind::kHamPath: return has_hamiltonian_path(g, limits_);
      case PredicateKind::kHamCycle: return has_hamiltonian_cycle(g, limits_);
      case PredicateKind::kSpanningStar: return has_spanning_star(g);
      case PredicateKind::kContains: return contains_subgraph(g, *pattern_, limits_);
      case PredicateKind::kContainsInduced: return gfcode::contains_induced(g, *pattern_, limits_);
      case PredicateKind::kOddCycle:
        detail::require_order_at_least(g, 2, "has_odd_cycle");
        return has_odd_cycle(g);
    }
    return false;
  }

 private:
  Predicate(PredicateKind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

  PredicateKind kind_;
  std::string name_;
  int k_ = 0;
  std::optional<LabeledGraph> pattern_;
  PredicateLimits limits_;
};

/// Parses a CLI predicate name. `load_pattern` resolves the file argument of
/// sub:<file> and indsub:<file>.
inline Predicate parse_predicate(
    std::string_view text,
    const std::function<LabeledGraph(const std::string&)>& load_pattern = {}) {
  auto after = [&](std::string_view prefix) -> std::optional<std::string> {
    if (text.substr(0, prefix.size()) == prefix) return std::string(text.substr(prefix.size()));
    return std::nullopt;
  };
  if (text == "connected") return Predicate::connected();
  if (text == "2conn") return Predicate::k_connected(2);
  if (text == "3conn") return Predicate::k_connected(3);
  if (text == "hampath") return Predicate::ham_path();
  if (text == "hamcycle") return Predicate::ham_cycle();
  if (text == "star") return Predicate::spanning_star();
  if (text == "k3") return Predicate::triangle();
  if (text == "oddcycle") return Predicate::odd_cycle();
  if (auto k = after("kconn:")) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(*k, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != k->size())
      throw std::domain_error("bad k in predicate '" + std::string(text) + "'");
    return Predicate::k_connected(value);
  }
  auto pattern_from = [&](const std::string& file) {
    if (!load_pattern) throw std::domain_error("no pattern loader for '" + file + "'");
    return load_pattern(file);
  };
  if (auto file = after("sub:")) return Predicate::contains(pattern_from(*file), std::string(text));
  if (auto file = after("indsub:"))
    return Predicate::contains_induced(pattern_from(*file), std::string(text));
  throw std::domain_error("unknown predicate '" + std::string(text) + "'");
}

}  // namespace gfcode

#endif  // GFCODE_PREDICATES_HPP_
