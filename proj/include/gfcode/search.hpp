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

// Exhaustive extremal search over all graphs on [n] for tiny n.
//
// Graphs on [n] are vertices of the compatibility graph, adjacent when
// their symmetric difference satisfies the predicate. Good families are
// cliques of it, dual families independent sets. Every translate of an
// optimum is optimal, so the search fixes the empty graph as a member.

#ifndef GFCODE_SEARCH_HPP_
#define GFCODE_SEARCH_HPP_

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gfcode/bounds.hpp"
#include "gfcode/family.hpp"
#include "gfcode/gf2.hpp"
#include "gfcode/graph.hpp"
#include "gfcode/predicates.hpp"

namespace gfcode {

enum class SearchStatus { kExact, kTimeout };

inline const char* to_string(SearchStatus s) { return s == SearchStatus::kExact ? "exact" : "timeout"; }

struct SearchOptions {
  std::uint64_t budget_nodes = 100'000'000;
  std::uint64_t time_ms = 0;  // 0: no wall-clock limit
};

struct SearchResult {
  std::uint64_t optimum = 0;
  GraphFamily certificate;
  std::uint64_t explored = 0;
  SearchStatus status = SearchStatus::kExact;
  /// Reduced basis of the certificate for linear searches.
  std::vector<LabeledGraph> basis;
};

/// Largest n whose full graph space the clique searches will enumerate.
inline constexpr int kMaxCliqueSearchOrder = 5;
inline constexpr int kMaxLinearSearchOrder = 8;

namespace detail {

class SearchClock {
 public:
  explicit SearchClock(const SearchOptions& opts)
      : opts_(opts), start_(std::chrono::steady_clock::now()) {}

  /// Counts one node; false once the budget or the deadline is spent.
  bool tick() {
    ++nodes_;
    if (nodes_ > opts_.budget_nodes) return stop();
    if (opts_.time_ms && (nodes_ & 1023) == 0) {
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start_)
                          .count();
      if (static_cast<std::uint64_t>(ms) >= opts_.time_ms) return stop();
    }
    return !stopped_;
  }
  bool stopped() const { return stopped_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool stop() {
    stopped_ = true;
    return false;
  }

  SearchOptions opts_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
};

/// Maximum clique by branch and bound with a greedy colouring bound.
class CliqueSolver {
 public:
  CliqueSolver(int vertices, std::vector<std::uint64_t> adjacency, SearchClock& clock)
      : v_(vertices), words_((vertices + 63) / 64), adj_(std::move(adjacency)), clock_(clock) {}

  std::vector<int> solve() {
    std::vector<std::uint64_t> all(words_, 0);
    for (int v = 0; v < v_; ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
    if (v_ > 0) expand(all);
    return best_;
  }

 private:
  const std::uint64_t* row(int v) const { return adj_.data() + static_cast<std::size_t>(v) * words_; }

  void expand(std::vector<std::uint64_t> p) {
    if (!clock_.tick()) return;
    std::vector<int> order;
    std::vector<int> colour;
    colour_sort(p, order, colour);
    for (std::size_t k = order.size(); k-- > 0;) {
      if (current_.size() + static_cast<std::size_t>(colour[k]) <= best_.size()) return;
      const int v = order[k];
      current_.push_back(v);
      std::vector<std::uint64_t> next(words_);
      bool any = false;
      for (int w = 0; w < words_; ++w) {
        next[w] = p[w] & row(v)[w];
        any = any || next[w];
      }
      if (!any) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      if (clock_.stopped()) return;
      p[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }
  }

  void colour_sort(const std::vector<std::uint64_t>& p, std::vector<int>& order,
                   std::vector<int>& colour) const {
    std::vector<std::uint64_t> uncoloured = p;
    int c = 0;
    auto nonempty = [&](const std::vector<std::uint64_t>& s) {
      return std::any_of(s.begin(), s.end(), [](std::uint64_t x) { return x != 0; });
    };
    while (nonempty(uncoloured)) {
      ++c;
      std::vector<std::uint64_t> q = uncoloured;
      for (int w = 0; w < words_; ++w) {
        while (q[w]) {
          const int v = w * 64 + std::countr_zero(q[w]);
          q[w] &= q[w] - 1;
          uncoloured[w] &= ~(std::uint64_t{1} << (v % 64));
          for (int x = 0; x < words_; ++x) q[x] &= ~row(v)[x];
          order.push_back(v);
          colour.push_back(c);
        }
      }
    }
  }

  int v_;
  int words_;
  std::vector<std::uint64_t> adj_;
  SearchClock& clock_;
  std::vector<int> current_;
  std::vector<int> best_;
};

inline LabeledGraph graph_from_mask(int n, std::uint64_t mask) {
  const std::uint64_t w[1] = {mask};
  return LabeledGraph::from_words(n, w);
}

inline std::uint64_t mask_of(const LabeledGraph& g) { return g.words().empty() ? 0 : g.words()[0]; }

template <typename Wanted>
SearchResult clique_search(int n, Wanted&& wanted, const SearchOptions& opts, const char* name) {
  if (n < 2) throw std::domain_error(std::string(name) + ": need n >= 2");
  SearchResult result;
  result.certificate = GraphFamily(n, Provenance{name, {{"n", std::to_string(n)}}});
  result.certificate.push_back(LabeledGraph(n));
  if (n > kMaxCliqueSearchOrder) {
    result.optimum = 1;
    result.status = SearchStatus::kTimeout;
    return result;
  }
  const std::uint64_t space = std::uint64_t{1} << pair_count(n);
  std::vector<std::uint64_t> cand;
  std::vector<LabeledGraph> cand_graphs;
  for (std::uint64_t m = 1; m < space; ++m) {
    LabeledGraph g = graph_from_mask(n, m);
    if (wanted(g)) {
      cand.push_back(m);
      cand_graphs.push_back(g);
    }
  }
  const int v = static_cast<int>(cand.size());
  const int words = (v + 63) / 64;
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(v) * words, 0);
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b)
      if (wanted(cand_graphs[a] ^ cand_graphs[b])) {
        adj[static_cast<std::size_t>(a) * words + b / 64] |= std::uint64_t{1} << (b % 64);
        adj[static_cast<std::size_t>(b) * words + a / 64] |= std::uint64_t{1} << (a % 64);
      }
  SearchClock clock(opts);
  CliqueSolver solver(v, std::move(adj), clock);
  std::vector<int> clique = solver.solve();
  std::sort(clique.begin(), clique.end());
  for (int idx : clique) result.certificate.push_back(cand_graphs[idx]);
  result.optimum = result.certificate.size();
  result.explored = clock.nodes();
  result.status = clock.stopped() ? SearchStatus::kTimeout : SearchStatus::kExact;
  return result;
}

/// Proven log2 cap on a linear family for the built-in predicates;
/// C(n,2) when nothing better is known.
inline int linear_rank_cap(int n, const Predicate& pred) {
  const int slots = static_cast<int>(pair_count(n));
  auto floor_log2 = [](double x) { return static_cast<int>(std::floor(std::log2(x) + 1e-12)); };
  switch (pred.kind()) {
    case PredicateKind::kConnected:
    case PredicateKind::kHamPath: return n - 1;
    case PredicateKind::kHamCycle: return std::max(0, n - 2);
    case PredicateKind::kKConnected:
      if (pred.k() == 1) return n - 1;
      if (pred.k() == 2) return std::max(0, n - 2);
      if (pred.k() == 3) return std::max(0, floor_log2(std::ldexp(1.0, n - 1) / n));
      return slots;
    case PredicateKind::kSpanningStar: return floor_log2(static_cast<double>(star_upper_bound(n)));
    case PredicateKind::kOddCycle: return n >= 3 ? static_cast<int>(subgraph_upper_bound(n, 3)) : 0;
    case PredicateKind::kContains:
      if (pred.pattern() && n >= 3 && pred.pattern()->order() >= 3 &&
          pred.pattern()->edge_count() == pair_count(pred.pattern()->order()) &&
          pred.pattern()->order() <= n)
        return static_cast<int>(subgraph_upper_bound(n, pred.pattern()->order()));
      return slots;
    case PredicateKind::kContainsInduced: return slots;
  }
  return slots;
}

class LinearSearch {
 public:
  LinearSearch(int cap, SearchClock& clock) : cap_(cap), clock_(clock) {}

  /// good: sorted masks of graphs satisfying the predicate.
  void run(const std::vector<std::uint64_t>& good) {
    std::vector<std::uint64_t> span = {0};
    std::vector<std::uint64_t> basis;
    dfs(good, span, basis, 0);
  }

  const std::vector<std::uint64_t>& best() const { return best_; }
  bool hit_cap() const { return static_cast<int>(best_.size()) >= cap_; }

 private:
  static bool member(const std::vector<std::uint64_t>& set, std::uint64_t x) {
    return std::binary_search(set.begin(), set.end(), x);
  }

  // `d` holds every x with x + span entirely good; new generators come from
  // d, increase, and are the minimum of their coset mod the current span.
  void dfs(const std::vector<std::uint64_t>& d, const std::vector<std::uint64_t>& span,
           std::vector<std::uint64_t>& basis, std::uint64_t last) {
    if (!clock_.tick()) return;
    if (basis.size() > best_.size()) best_ = basis;
    if (hit_cap()) return;
    const int r = static_cast<int>(basis.size());
    const double room = std::log2(static_cast<double>(d.size()) + std::ldexp(1.0, r));
    if (static_cast<int>(std::floor(room + 1e-12)) <= static_cast<int>(best_.size())) return;
    for (auto it = std::upper_bound(d.begin(), d.end(), last); it != d.end(); ++it) {
      const std::uint64_t g = *it;
      bool minimal = true;
      for (std::uint64_t s : span)
        if ((g ^ s) < g) {
          minimal = false;
          break;
        }
      if (!minimal) continue;
      std::vector<std::uint64_t> next;
      for (std::uint64_t x : d)
        if (member(d, x ^ g)) next.push_back(x);
      std::vector<std::uint64_t> grown = span;
      for (std::uint64_t s : span) grown.push_back(s ^ g);
      basis.push_back(g);
      dfs(next, grown, basis, g);
      basis.pop_back();
      if (clock_.stopped() || hit_cap()) return;
    }
  }

  int cap_;
  SearchClock& clock_;
  std::vector<std::uint64_t> best_;
};

}  // namespace detail

/// Largest family whose pairwise differences all satisfy `pred`.
inline SearchResult max_good_family(int n, const Predicate& pred, const SearchOptions& opts = {}) {
  return detail::clique_search(
      n, [&](const LabeledGraph& g) { return pred(g); }, opts, "search-good");
}

/// Largest family none of whose pairwise differences satisfies `pred`.
inline SearchResult max_dual_family(int n, const Predicate& pred, const SearchOptions& opts = {}) {
  return detail::clique_search(
      n, [&](const LabeledGraph& g) { return !pred(g); }, opts, "search-dual");
}

/// Largest linear family all of whose nonzero members satisfy `pred`, with
/// rank at most `max_rank` (negative: no limit).
inline SearchResult max_linear_family(int n, const Predicate& pred, int max_rank = -1,
                                      const SearchOptions& opts = {}) {
  if (n < 2) throw std::domain_error("max_linear_family: need n >= 2");
  if (n > kMaxLinearSearchOrder)
    throw capability_error("max_linear_family: n=" + std::to_string(n) + " above limit " +
                           std::to_string(kMaxLinearSearchOrder));
  const int proven = detail::linear_rank_cap(n, pred);
  const int cap = max_rank >= 0 ? std::min(max_rank, proven) : proven;

  detail::SearchClock clock(opts);
  std::vector<std::uint64_t> good;
  const std::uint64_t space = std::uint64_t{1} << pair_count(n);
  bool complete = true;
  for (std::uint64_t m = 1; m < space; ++m) {
    if (!clock.tick()) {
      complete = false;
      break;
    }
    if (pred(detail::graph_from_mask(n, m))) good.push_back(m);
  }

  detail::LinearSearch search(cap, clock);
  if (complete) search.run(good);

  SearchResult result;
  std::vector<LabeledGraph> gens;
  for (std::uint64_t g : search.best()) gens.push_back(detail::graph_from_mask(n, g));
  LinearFamily fam(n, gens, Provenance{"search-linear", {{"n", std::to_string(n)}}});
  result.certificate = enumerate_span(fam);
  result.basis = fam.basis().vectors();
  result.optimum = result.certificate.size();
  result.explored = clock.nodes();
  // Finished DFS, or a proven cap reached (a max_rank cut is exact only for
  // the restricted question).
  result.status = complete && (!clock.stopped() || search.hit_cap()) ? SearchStatus::kExact
                                                                       : SearchStatus::kTimeout;
  return result;
}

}  // namespace gfcode

#endif  // GFCODE_SEARCH_HPP_
