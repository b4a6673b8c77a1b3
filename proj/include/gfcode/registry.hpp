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

// Constructions by name, and the bound table built from their closed-form
// sizes and the matching upper bounds.

#ifndef GFCODE_REGISTRY_HPP_
#define GFCODE_REGISTRY_HPP_

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gfcode/bounds.hpp"
#include "gfcode/cardinality.hpp"
#include "gfcode/constructions.hpp"
#include "gfcode/errors.hpp"
#include "gfcode/family.hpp"
#include "gfcode/gf2.hpp"
#include "gfcode/predicates.hpp"

namespace gfcode {

struct BuildParams {
  std::optional<int> n;
  std::optional<int> k;
  std::optional<int> p;
  std::optional<int> r;
  std::optional<LabeledGraph> host;
};

/// A constructed family with the predicate it is meant to satisfy.
struct BuiltFamily {
  std::string name;
  Predicate predicate;
  bool dual = false;
  Cardinality size;
  std::optional<GraphFamily> family;  // explicit members, when within budget
  std::optional<LinearFamily> linear;
  std::optional<AffineFamily> affine;
};

struct RegistryEntry {
  const char* name;
  const char* params;
  const char* summary;
};

inline const std::vector<RegistryEntry>& registry() {
  static const std::vector<RegistryEntry> entries = {
      {"split-clique", "--n", "disjoint unions of two cliques (connected)"},
      {"even-split", "--n (even)", "split cliques with even sides (2conn)"},
      {"odd-2conn", "--n (odd)", "odd-n split-clique subfamily (2conn)"},
      {"hamming-3conn", "--k", "cut graphs of the Hamming code, n = 2^k-1 (3conn, linear)"},
      {"ham-path", "--p (odd prime)", "even unions of truncated perfect matchings (hampath)"},
      {"ham-cycle", "--n (p+1)", "even unions of a perfect 1-factorization (hamcycle)"},
      {"star", "--n", "edge-colouring construction (star)"},
      {"k3", "--n (3..6)", "triangle families (k3)"},
      {"codd", "--n (7)", "Steiner triple system plus 7-cycles (oddcycle)"},
      {"clique-agreement", "--n --r", "graphs empty on {1..r} (independent r-set)"},
      {"dual-isolated", "--n", "vertex n isolated (dual of connected)"},
      {"dual-pendant", "--n", "vertex n of degree <= 1 towards n-1 (dual of 2conn)"},
      {"dual-lowdeg", "--n", "vertex n of degree <= 1 (dual of 3conn)"},
      {"dual-star", "--n", "supergraphs of a minimum edge cover (dual of star)"},
      {"dual-subgraph", "--n --host", "subgraphs of a host graph (dual of sub:<L> for L-free hosts)"},
  };
  return entries;
}

namespace detail {

inline int need(const std::optional<int>& v, const char* flag, const std::string& family) {
  if (!v) throw std::domain_error("family '" + family + "' needs " + flag);
  return *v;
}

inline BuiltFamily from_linear(std::string name, Predicate pred, LinearFamily lin, bool dual = false) {
  BuiltFamily b{std::move(name), std::move(pred), dual, lin.size(), std::nullopt, lin, std::nullopt};
  if (lin.rank() <= kFamilyBudgetLog2) b.family = enumerate_span(lin);
  return b;
}

inline BuiltFamily from_explicit(std::string name, Predicate pred, GraphFamily fam, bool dual = false) {
  const Cardinality size = fam.claimed_size().value_or(Cardinality(fam.size()));
  return BuiltFamily{std::move(name), std::move(pred), dual, size, std::move(fam), std::nullopt,
                     std::nullopt};
}

}  // namespace detail

/// Builds a registered construction. Families above the enumeration budget
/// come back implicit only (linear or affine form).
inline BuiltFamily build_family(const std::string& name, const BuildParams& params) {
  using detail::need;
  if (name == "split-clique")
    return detail::from_explicit(name, Predicate::connected(), split_clique_family(need(params.n, "--n", name)));
  if (name == "even-split")
    return detail::from_explicit(name, Predicate::k_connected(2), even_split_family(need(params.n, "--n", name)));
  if (name == "odd-2conn")
    return detail::from_explicit(name, Predicate::k_connected(2), odd_two_conn_family(need(params.n, "--n", name)));
  if (name == "hamming-3conn")
    return detail::from_linear(name, Predicate::k_connected(3), hamming_bipartite_family(need(params.k, "--k", name)));
  if (name == "ham-path")
    return detail::from_linear(name, Predicate::ham_path(), ham_path_family(need(params.p, "--p", name)));
  if (name == "ham-cycle")
    return detail::from_linear(name, Predicate::ham_cycle(), ham_cycle_family(need(params.n, "--n", name)));
  if (name == "star") return detail::from_explicit(name, Predicate::spanning_star(), star_family(need(params.n, "--n", name)));
  if (name == "k3") {
    switch (need(params.n, "--n", name)) {
      case 3: return detail::from_explicit(name, Predicate::triangle(), k3_family_3());
      case 4: return detail::from_explicit(name, Predicate::triangle(), k3_family_4());
      case 5: return detail::from_linear(name, Predicate::triangle(), k3_family_5());
      case 6: return detail::from_linear(name, Predicate::triangle(), k3_family_6());
      default: throw unsupported_parameter("k3: constructions exist for n = 3..6 only");
    }
  }
  if (name == "codd") {
    if (need(params.n, "--n", name) != 7) throw unsupported_parameter("codd: construction exists for n = 7 only");
    return detail::from_linear(name, Predicate::odd_cycle(), codd_family_7());
  }
  if (name == "clique-agreement") {
    const int n = need(params.n, "--n", name), r = need(params.r, "--r", name);
    return detail::from_linear(name, Predicate::contains_induced(LabeledGraph(r), "indep:" + std::to_string(r)),
                               clique_agreement_space(n, r));
  }
  if (name == "dual-isolated")
    return detail::from_linear(name, Predicate::connected(), dual_isolated_space(need(params.n, "--n", name)), true);
  if (name == "dual-pendant")
    return detail::from_linear(name, Predicate::k_connected(2), dual_pendant_space(need(params.n, "--n", name)), true);
  if (name == "dual-lowdeg") {
    const int n = need(params.n, "--n", name);
    BuiltFamily b{name, Predicate::k_connected(3), true, dual_lowdeg_size(n), std::nullopt, std::nullopt,
                  std::nullopt};
    if (b.size <= Cardinality::pow2(kFamilyBudgetLog2)) b.family = dual_lowdeg_family(n);
    return b;
  }
  if (name == "dual-star") {
    const AffineFamily coset = dual_star_coset(need(params.n, "--n", name));
    BuiltFamily b{name, Predicate::spanning_star(), true, coset.size(), std::nullopt, std::nullopt, coset};
    if (coset.directions.rank() <= kFamilyBudgetLog2) b.family = materialize(coset);
    return b;
  }
  if (name == "dual-subgraph") {
    if (!params.host) throw std::domain_error("family 'dual-subgraph' needs --host");
    if (params.n && *params.n != params.host->order())
      throw std::domain_error("dual-subgraph: --n disagrees with the host graph");
    return detail::from_linear(name, Predicate::triangle(), dual_subgraph_space(*params.host), true);
  }
  throw std::domain_error("unknown family '" + name + "'");
}

// ---------------------------------------------------------------------------
// Bound table

namespace detail {

inline bool odd_prime(int p) { return is_odd_prime(p); }

inline std::optional<int> hamming_k(int n) {
  for (int k = 2; (1 << k) - 1 <= n; ++k)
    if ((1 << k) - 1 == n) return k;
  return std::nullopt;
}

inline Magnitude pow2_mag(std::int64_t e) { return Magnitude::of(Cardinality::pow2(e)); }

inline std::optional<Cardinality> k3_construction_size(int n) {
  switch (n) {
    case 3: return Cardinality(2);
    case 4: return Cardinality(4);
    case 5: return Cardinality(16);
    case 6: return Cardinality(64);
    default: return std::nullopt;
  }
}

}  // namespace detail

/// Predicates understood by `bound_report`; "d:" prefixes ask for the dual.
inline const std::vector<std::string>& bound_predicates() {
  static const std::vector<std::string> names = {
      "connected", "2conn", "3conn", "3conn-linear", "hampath", "hamcycle", "star", "k3",
      "oddcycle", "d:connected", "d:2conn", "d:3conn", "d:star"};
  return names;
}

/// Best construction and upper bound known here for (predicate, n).
inline BoundReport bound_report(const std::string& pred, int n) {
  using detail::pow2_mag;
  if (n < 2) throw std::domain_error("bound: need n >= 2");
  if (n > kMaxVertices) throw capability_error("bound: n above vertex limit");
  const std::int64_t c = edge_slots(n);
  const std::int64_t c1 = static_cast<std::int64_t>(pair_count(n - 1));
  const BoundSide trivial{Magnitude::of(Cardinality(1)), "single graph"};

  if (pred == "connected")
    return make_report(n, pred, {pow2_mag(n - 1), "split-clique"},
                       {pow2_mag(product_upper_bound(n, c1)), "product bound with dual-isolated"});
  if (pred == "2conn") {
    const BoundSide upper{pow2_mag(product_upper_bound(n, c1 + 1)), "product bound with dual-pendant"};
    if (n == 2) return make_report(n, pred, trivial, upper);
    if (n % 2 == 0) return make_report(n, pred, {pow2_mag(n - 2), "even-split"}, upper);
    return make_report(n, pred, {Magnitude::of(odd_two_conn_size(n)), "odd-2conn"}, upper);
  }
  if (pred == "3conn" || pred == "3conn-linear") {
    // n * 2^{C(n-1,2)} graphs with deg(n) <= 1 form a dual family.
    const bool linear = pred == "3conn-linear";
    BoundSide upper;
    if (linear) {
      const int d = static_cast<int>(std::floor(std::log2(std::ldexp(1.0, n - 1) / n) + 1e-12));
      upper = {pow2_mag(std::max(0, d)), "largest power of two under the dual-lowdeg product bound"};
    } else {
      const std::uint64_t top = n - 1 < 64 ? (std::uint64_t{1} << (n - 1)) / static_cast<std::uint64_t>(n) : 0;
      if (n - 1 >= 64) throw capability_error("bound: 3conn upper bound above 64 bits");
      upper = {Magnitude::of(Cardinality(top)), "product bound with dual-lowdeg"};
    }
    if (auto k = detail::hamming_k(n))
      return make_report(n, pred, {pow2_mag(n - *k - 1), "hamming-3conn"}, upper);
    return make_report(n, pred, trivial, upper);
  }
  if (pred == "hampath") {
    const BoundSide upper{pow2_mag(n - 1), "connectivity bound"};
    if (detail::odd_prime(n)) return make_report(n, pred, {pow2_mag(n - 1), "ham-path"}, upper);
    return make_report(n, pred, trivial, upper);
  }
  if (pred == "hamcycle") {
    const BoundSide upper{pow2_mag(std::max<std::int64_t>(0, n - 2)), "2-connectivity bound"};
    if (n % 2 == 0 && detail::odd_prime(n - 1))
      return make_report(n, pred, {pow2_mag(n - 2), "ham-cycle"}, upper);
    return make_report(n, pred, trivial, upper);
  }
  if (pred == "star")
    return make_report(n, pred, {Magnitude::of(Cardinality(star_upper_bound(n))), "star"},
                       {Magnitude::of(Cardinality(star_upper_bound(n))), "edge-colouring bound"});
  if (pred == "k3" || pred == "oddcycle") {
    if (n < 3) return make_report(n, pred, trivial, trivial);
    const BoundSide upper{pow2_mag(subgraph_upper_bound(n, 3)), "Turan bound with dual-subgraph"};
    if (auto s = detail::k3_construction_size(n)) return make_report(n, pred, {Magnitude::of(*s), "k3"}, upper);
    if (pred == "oddcycle" && n == 7) return make_report(n, pred, {pow2_mag(9), "codd"}, upper);
    return make_report(n, pred, trivial, upper);
  }
  if (pred == "d:connected")
    return make_report(n, pred, {pow2_mag(c1), "dual-isolated"},
                       {pow2_mag(product_upper_bound(n, n - 1)), "product bound with split-clique"});
  if (pred == "d:2conn") {
    const BoundSide lower{pow2_mag(c1 + 1), "dual-pendant"};
    if (n % 2 == 0 && n >= 4)
      return make_report(n, pred, lower, {pow2_mag(product_upper_bound(n, n - 2)), "product bound with even-split"});
    return make_report(n, pred, lower, {pow2_mag(c), "all graphs"});
  }
  if (pred == "d:3conn") {
    BoundSide upper{pow2_mag(c), "all graphs"};
    if (auto k = detail::hamming_k(n)) upper = {pow2_mag(product_upper_bound(n, n - *k - 1)), "product bound with hamming-3conn"};
    return make_report(n, pred, {Magnitude::of(dual_lowdeg_size(n)), "dual-lowdeg"}, upper);
  }
  if (pred == "d:star") {
    const LogBounds s = shearer_dual_star_bounds(n);
    return make_report(n, pred, {Magnitude::pow2(s.lower), "dual-star"},
                       {Magnitude::pow2(s.upper), "Shearer bound"});
  }
  throw std::domain_error("bound: no bounds for predicate '" + pred + "'");
}

/// Rows for n where a construction exists: one per predicate with a known construction.
inline std::vector<BoundReport> table_rows(int n) {
  std::vector<BoundReport> rows;
  rows.push_back(bound_report("connected", n));
  rows.push_back(bound_report("2conn", n));
  if (detail::hamming_k(n)) rows.push_back(bound_report("3conn-linear", n));
  if (detail::odd_prime(n)) rows.push_back(bound_report("hampath", n));
  if (n % 2 == 0 && detail::odd_prime(n - 1)) rows.push_back(bound_report("hamcycle", n));
  rows.push_back(bound_report("star", n));
  if (detail::k3_construction_size(n)) rows.push_back(bound_report("k3", n));
  if (detail::k3_construction_size(n) || n == 7) rows.push_back(bound_report("oddcycle", n));
  rows.push_back(bound_report("d:connected", n));
  rows.push_back(bound_report("d:star", n));
  return rows;
}

}  // namespace gfcode

#endif  // GFCODE_REGISTRY_HPP_
