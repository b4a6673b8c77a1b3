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

// Linear algebra over GF(2) on the C(n,2)-dimensional edge space.

#ifndef GFCODE_GF2_HPP_
#define GFCODE_GF2_HPP_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gfcode/cardinality.hpp"
#include "gfcode/errors.hpp"
#include "gfcode/family.hpp"
#include "gfcode/graph.hpp"

namespace gfcode {

inline constexpr int kSpanEnumerationLimit = 26;

namespace detail {

inline std::optional<std::size_t> lowest_slot(const LabeledGraph& g) {
  auto w = g.words();
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(w[i]));
  return std::nullopt;
}

}  // namespace detail

/// Fully reduced echelon basis. Each vector's pivot is its lowest set slot,
/// and no other vector has that slot set. Vectors are kept by increasing
/// pivot, so the basis of a given span is unique.
class Gf2Basis {
 public:
  explicit Gf2Basis(int n) : n_(n) {}

  int order() const { return n_; }
  int rank() const { return static_cast<int>(vectors_.size()); }
  const std::vector<LabeledGraph>& vectors() const { return vectors_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  LabeledGraph reduce(LabeledGraph g) const {
    check(g);
    for (std::size_t i = 0; i < vectors_.size(); ++i)
      if (g.test(pivots_[i])) g ^= vectors_[i];
    return g;
  }

  bool contains(const LabeledGraph& g) const { return reduce(g).edgeless(); }

  /// Returns false when g already lies in the span.
  bool insert(const LabeledGraph& g) {
    LabeledGraph r = reduce(g);
    const auto pivot = detail::lowest_slot(r);
    if (!pivot) return false;
    for (auto& v : vectors_)
      if (v.test(*pivot)) v ^= r;
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), *pivot) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, *pivot);
    vectors_.insert(vectors_.begin() + pos, r);
    return true;
  }

 private:
  void check(const LabeledGraph& g) const {
    if (g.order() != n_)
      throw std::domain_error("Gf2Basis: generator has n=" + std::to_string(g.order()) +
                              ", basis has n=" + std::to_string(n_));
  }

  int n_;
  std::vector<LabeledGraph> vectors_;
  std::vector<std::size_t> pivots_;
};

/// Dimension of the span; an empty list has rank 0.
inline int rank(std::span<const LabeledGraph> generators) {
  if (generators.empty()) return 0;
  Gf2Basis basis(generators.front().order());
  for (const auto& g : generators) basis.insert(g);
  return basis.rank();
}

/// True iff every edge slot of K_n is set in exactly two generators.
inline bool double_cover_check(std::span<const LabeledGraph> generators) {
  if (generators.empty()) return false;
  const int n = generators.front().order();
  std::vector<int> hits(pair_count(n), 0);
  for (const auto& g : generators) {
    if (g.order() != n) throw std::domain_error("double_cover_check: mixed vertex counts");
    g.for_each_slot([&](std::size_t s) { ++hits[s]; });
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 2; });
}

/// A family given by generators; the family is their GF(2) span.
class LinearFamily {
 public:
  LinearFamily(int n, std::vector<LabeledGraph> generators, Provenance provenance = {},
               bool redundant = false)
      : n_(n),
        generators_(std::move(generators)),
        provenance_(std::move(provenance)),
        redundant_(redundant),
        basis_(n) {
    for (const auto& g : generators_) basis_.insert(g);
  }

  int order() const { return n_; }
  const std::vector<LabeledGraph>& generators() const { return generators_; }
  const Gf2Basis& basis() const { return basis_; }
  int rank() const { return basis_.rank(); }
  Cardinality size() const { return Cardinality::pow2(rank()); }
  bool redundant() const { return redundant_; }
  const Provenance& provenance() const { return provenance_; }
  bool contains(const LabeledGraph& g) const { return basis_.contains(g); }

 private:
  int n_;
  std::vector<LabeledGraph> generators_;
  Provenance provenance_;
  bool redundant_;
  Gf2Basis basis_;
};

/// Gray-code walk over the span of `basis`, restricted to the chunk whose top
/// `chunk_bits` coefficients equal `chunk`. Calls fn(member, coefficients)
/// where coefficients index the basis vectors.
template <typename Fn>
void walk_span(std::span<const LabeledGraph> basis, int n, std::uint64_t chunk, int chunk_bits,
               Fn&& fn) {
  const int r = static_cast<int>(basis.size());
  if (r > 63) throw capability_error("walk_span: rank above 63");
  chunk_bits = std::min(chunk_bits, r);
  const int low = r - chunk_bits;
  LabeledGraph cur(n);
  for (int b = 0; b < chunk_bits; ++b)
    if ((chunk >> b) & 1u) cur ^= basis[static_cast<std::size_t>(low + b)];
  const std::uint64_t high = chunk << low;
  const std::uint64_t steps = std::uint64_t{1} << low;
  std::uint64_t gray = 0;
  fn(static_cast<const LabeledGraph&>(cur), high);
  for (std::uint64_t k = 1; k < steps; ++k) {
    const int flip = std::countr_zero(k);
    cur ^= basis[static_cast<std::size_t>(flip)];
    gray ^= std::uint64_t{1} << flip;
    fn(static_cast<const LabeledGraph&>(cur), high | gray);
  }
}

template <typename Fn>
void for_each_span_member(const Gf2Basis& basis, Fn&& fn) {
  walk_span(basis.vectors(), basis.order(), 0, 0, fn);
}

/// XOR of the basis vectors selected by `coefficients`.
inline LabeledGraph span_member(const Gf2Basis& basis, std::uint64_t coefficients) {
  LabeledGraph g(basis.order());
  for (int i = 0; i < basis.rank(); ++i)
    if ((coefficients >> i) & 1u) g ^= basis.vectors()[static_cast<std::size_t>(i)];
  return g;
}

/// All 2^rank members, each produced once, sorted by edge vector.
inline GraphFamily enumerate_span(const LinearFamily& fam,
                                  int max_rank = kSpanEnumerationLimit) {
  if (fam.rank() > max_rank)
    throw capability_error("enumerate_span: rank " + std::to_string(fam.rank()) +
                           " exceeds the enumeration limit " + std::to_string(max_rank));
  GraphFamily out(fam.order(), fam.provenance());
  out.reserve(std::size_t{1} << fam.rank());
  for_each_span_member(fam.basis(), [&](const LabeledGraph& g, std::uint64_t) {
    out.push_back(g);
  });
  out.sort();
  out.set_claimed_size(fam.size());
  return out;
}

/// Coset offset + span(directions). Families too large to list are carried
/// this way; pairwise differences of members are exactly the span members.
struct AffineFamily {
  LabeledGraph offset;
  LinearFamily directions;

  int order() const { return directions.order(); }
  Cardinality size() const { return directions.size(); }
  bool contains(const LabeledGraph& g) const { return directions.contains(g ^ offset); }
};

inline GraphFamily materialize(const AffineFamily& fam, int max_rank = kSpanEnumerationLimit) {
  if (fam.directions.rank() > max_rank)
    throw capability_error("materialize: rank " + std::to_string(fam.directions.rank()) +
                           " exceeds the enumeration limit " + std::to_string(max_rank));
  GraphFamily out(fam.order(), fam.directions.provenance());
  out.reserve(std::size_t{1} << fam.directions.rank());
  for_each_span_member(fam.directions.basis(), [&](const LabeledGraph& g, std::uint64_t) {
    out.push_back(g ^ fam.offset);
  });
  out.sort();
  out.set_claimed_size(fam.size());
  return out;
}

}  // namespace gfcode

#endif  // GFCODE_GF2_HPP_
