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

// Closed-form bounds on family sizes, chromatic and partition numbers,
// distancity and rate.

#ifndef GFCODE_BOUNDS_HPP_
#define GFCODE_BOUNDS_HPP_

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gfcode/cardinality.hpp"
#include "gfcode/errors.hpp"
#include "gfcode/graph.hpp"

namespace gfcode {

inline std::int64_t edge_slots(int n) { return static_cast<std::int64_t>(pair_count(n)); }

/// log2 upper bound on M from a dual family of size 2^dual_lower.
inline std::int64_t product_upper_bound(int n, std::int64_t dual_lower) {
  if (dual_lower < 0 || dual_lower > edge_slots(n))
    throw std::domain_error("product_upper_bound: dual exponent outside [0, C(n,2)]");
  return edge_slots(n) - dual_lower;
}

/// Edges of the balanced complete (r-1)-partite graph on n vertices.
inline std::uint64_t turan_number(int n, int r) {
  if (r < 3) throw std::domain_error("turan_number: need r >= 3");
  if (n < 0) throw std::domain_error("turan_number: need n >= 0");
  const std::uint64_t parts = static_cast<std::uint64_t>(r - 1);
  const std::uint64_t nn = static_cast<std::uint64_t>(n);
  const std::uint64_t q = nn / parts, big = nn % parts;
  // Edges between parts: C(n,2) minus the edges inside parts.
  const std::uint64_t inside = big * ((q + 1) * q / 2) + (parts - big) * (q * (q - 1) / 2);
  return nn * (nn > 0 ? nn - 1 : 0) / 2 - inside;
}

/// log2 bound for families whose differences all contain K_r.
inline std::int64_t subgraph_upper_bound(int n, int r) {
  return edge_slots(n) - static_cast<std::int64_t>(turan_number(n, r));
}

inline std::uint64_t star_upper_bound(int n) {
  if (n < 2) throw std::domain_error("star_upper_bound: need n >= 2");
  return static_cast<std::uint64_t>(n % 2 ? n + 1 : n);
}

/// log2 bounds on the largest family with no difference containing a
/// spanning star.
struct LogBounds {
  Rational lower;
  Rational upper;
};

inline LogBounds shearer_dual_star_bounds(int n) {
  if (n < 2) throw std::domain_error("shearer_dual_star_bounds: need n >= 2");
  const std::int64_t c = edge_slots(n);
  return {Rational(c - (n + 1) / 2), Rational(2 * c - n, 2)};
}

// ---------------------------------------------------------------------------
// Chromatic and partition numbers of small patterns

inline constexpr int kMaxPatternColoringOrder = 10;

namespace detail {

inline void require_small_pattern(const LabeledGraph& l, const char* what) {
  if (l.order() > kMaxPatternColoringOrder)
    throw capability_error(std::string(what) + ": pattern has " + std::to_string(l.order()) +
                           " vertices; limit is " + std::to_string(kMaxPatternColoringOrder));
}

class ColoringSearch {
 public:
  explicit ColoringSearch(const LabeledGraph& g) : adj_(g), color_(g.order(), -1) {}

  bool colorable(int k) {
    std::fill(color_.begin(), color_.end(), -1);
    return assign(0, 0, k);
  }

 private:
  // Colors are introduced in order, so vertex v never opens color > used.
  bool assign(int v, int used, int k) {
    if (v == adj_.n) return true;
    for (int c = 0; c < std::min(used + 1, k); ++c) {
      bool clash = false;
      for (int u = 0; u < v && !clash; ++u) clash = color_[u] == c && adj_.adjacent(u, v);
      if (clash) continue;
      color_[v] = c;
      if (assign(v + 1, std::max(used, c + 1), k)) return true;
    }
    color_[v] = -1;
    return false;
  }

  Adjacency adj_;
  std::vector<int> color_;
};

/// Minimum number of independent sets covering each vertex subset, indexed
/// by bit mask. On the complement this counts cliques.
inline std::vector<int> min_cover_by_independent_sets(const Adjacency& adj) {
  const int n = adj.n;
  const std::size_t full = std::size_t{1} << n;
  std::vector<bool> independent(full, false);
  independent[0] = true;
  for (std::size_t s = 1; s < full; ++s) {
    const int v = std::countr_zero(s);
    const std::size_t rest = s & (s - 1);
    independent[s] = independent[rest] && (adj.rows[v] & rest) == 0;
  }
  std::vector<int> cover(full, n + 1);
  cover[0] = 0;
  for (std::size_t s = 1; s < full; ++s) {
    const std::size_t low = s & (~s + 1);
    // Some part contains the lowest vertex; enumerate it among subsets of s.
    for (std::size_t t = s; t; t = (t - 1) & s)
      if ((t & low) && independent[t]) cover[s] = std::min(cover[s], cover[s ^ t] + 1);
  }
  return cover;
}

}  // namespace detail

inline int chromatic_number(const LabeledGraph& l) {
  detail::require_small_pattern(l, "chromatic_number");
  if (l.edgeless()) return 1;
  detail::ColoringSearch search(l);
  int k = 2;
  while (!search.colorable(k)) ++k;
  return k;
}

/// Largest r such that for some 0 <= s <= r the vertices cannot be covered
/// by s cliques and r - s independent sets.
inline int partition_number(const LabeledGraph& l) {
  detail::require_small_pattern(l, "partition_number");
  const int n = l.order();
  const Adjacency adj(l);
  const Adjacency co(complement(l));
  const auto by_independent = detail::min_cover_by_independent_sets(adj);
  const auto by_cliques = detail::min_cover_by_independent_sets(co);
  const std::size_t full = (std::size_t{1} << n) - 1;
  // coverable(s, t): some split U, V\U with cliques(U) <= s and indep(V\U) <= t.
  auto coverable = [&](int s, int t) {
    for (std::size_t u = full;; u = (u - 1) & full) {
      if (by_cliques[u] <= s && by_independent[full ^ u] <= t) return true;
      if (u == 0) break;
    }
    return false;
  };
  int best = 0;
  for (int r = 1; r <= n; ++r)
    for (int s = 0; s <= r; ++s)
      if (!coverable(s, r - s)) {
        best = r;
        break;
      }
  return best;
}

/// 1 / (chi(L) - 1); the induced variant has the same value.
inline Rational distancity(const LabeledGraph& l, bool induced = false) {
  (void)induced;
  if (l.edgeless())
    throw unsupported_parameter("distancity: edgeless patterns are not covered by the formula");
  return Rational(1, chromatic_number(l) - 1);
}

/// 1 / (chi_min - 1) over a finite list of patterns.
inline Rational distancity_of_class(const std::vector<LabeledGraph>& patterns) {
  if (patterns.empty()) throw std::domain_error("distancity_of_class: empty class");
  int chi = kMaxPatternColoringOrder + 1;
  for (const auto& l : patterns) {
    if (l.edgeless())
      throw unsupported_parameter("distancity_of_class: edgeless pattern in class");
    chi = std::min(chi, chromatic_number(l));
  }
  return Rational(1, chi - 1);
}

/// 2 log2(size) / (n (n-1)).
inline double rate(int n, const Cardinality& size) {
  if (n < 2) throw std::domain_error("rate: need n >= 2");
  if (size.is_zero()) throw std::domain_error("rate: empty family");
  return size.log2() / static_cast<double>(edge_slots(n));
}

/// Exact rate when the size is a power of two.
inline std::optional<Rational> rate_exact(int n, const Cardinality& size) {
  if (n < 2) throw std::domain_error("rate: need n >= 2");
  if (auto e = size.exact_log2()) return Rational(*e, edge_slots(n));
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Reports

/// A family size: exact, or 2^log2 for a rational exponent.
struct Magnitude {
  std::optional<Cardinality> exact;
  Rational log2_value;

  static Magnitude of(const Cardinality& c) {
    Magnitude m{c, Rational(0)};
    if (auto e = c.exact_log2()) m.log2_value = Rational(*e);
    return m;
  }
  static Magnitude pow2(const Rational& e) {
    if (e.den == 1) return of(Cardinality::pow2(e.num));
    return Magnitude{std::nullopt, e};
  }

  double log2() const { return exact ? exact->log2() : log2_value.value(); }

  std::string to_string() const {
    if (exact) return exact->to_short_string();
    return "2^" + log2_value.to_string();
  }

  friend bool operator==(const Magnitude& a, const Magnitude& b) {
    if (a.exact && b.exact) return *a.exact == *b.exact;
    if (!a.exact && !b.exact) return a.log2_value == b.log2_value;
    return false;
  }
  friend bool operator<=(const Magnitude& a, const Magnitude& b) {
    if (a.exact && b.exact) return *a.exact <= *b.exact;
    if (a.exact && a.exact->exact_log2()) return Rational(*a.exact->exact_log2()) <= b.log2_value;
    if (b.exact && b.exact->exact_log2()) return a.log2_value <= Rational(*b.exact->exact_log2());
    return a.log2() <= b.log2();
  }
};

struct BoundSide {
  Magnitude value;
  std::string provenance;
};

struct BoundReport {
  int n = 0;
  std::string predicate;
  BoundSide lower;
  BoundSide upper;
  bool tight = false;
};

inline BoundReport make_report(int n, std::string predicate, BoundSide lower, BoundSide upper) {
  if (!(lower.value <= upper.value))
    throw std::logic_error("bound report for " + predicate + " at n=" + std::to_string(n) +
                           ": lower exceeds upper");
  BoundReport r{n, std::move(predicate), std::move(lower), std::move(upper), false};
  r.tight = r.lower.value == r.upper.value;
  return r;
}

}  // namespace gfcode

#endif  // GFCODE_BOUNDS_HPP_
