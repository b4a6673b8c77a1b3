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

// Exact certification of good and dual families.
//
// Reports carry the lexicographically first failing index pair. Workers scan
// rows in increasing order and share the best failure found so far, so the
// witness does not depend on the thread count.

#ifndef GFCODE_VERIFY_HPP_
#define GFCODE_VERIFY_HPP_

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "gfcode/errors.hpp"
#include "gfcode/family.hpp"
#include "gfcode/gf2.hpp"
#include "gfcode/graph.hpp"
#include "gfcode/predicates.hpp"

namespace gfcode {

enum class VerifyMode { kPairwise, kLinear, kDual };

inline const char* to_string(VerifyMode m) {
  switch (m) {
    case VerifyMode::kPairwise: return "pairwise";
    case VerifyMode::kLinear: return "linear";
    case VerifyMode::kDual: return "dual";
  }
  return "?";
}

/// For pairwise and dual runs `first < second` index the family. For linear
/// runs `first` is 0 (the empty member) and `second` is the coefficient mask
/// of the failing span member over the reduced basis.
struct Witness {
  std::uint64_t first = 0;
  std::uint64_t second = 0;
  LabeledGraph difference{1};
};

struct VerifyReport {
  bool pass = true;
  std::uint64_t pairs_checked = 0;
  std::optional<Witness> witness;
  VerifyMode mode = VerifyMode::kPairwise;
};

struct VerifyOptions {
  unsigned threads = 0;  // 0: hardware concurrency
  /// Families at least this large that form a coset of a linear space are
  /// certified through the 2^r - 1 nonzero differences instead of all pairs.
  std::size_t coset_shortcut_min = 1024;
};

/// Raised when a predicate refuses a pair; carries the pair.
class verify_capability_error : public capability_error {
 public:
  verify_capability_error(std::uint64_t first, std::uint64_t second, const std::string& what)
      : capability_error("pair (" + std::to_string(first) + "," + std::to_string(second) +
                         "): " + what),
        first_(first),
        second_(second) {}
  std::uint64_t first() const { return first_; }
  std::uint64_t second() const { return second_; }

 private:
  std::uint64_t first_, second_;
};

namespace detail {

inline unsigned worker_count(unsigned requested, std::uint64_t work) {
  unsigned t = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (work < 2) t = 1;
  return static_cast<unsigned>(std::min<std::uint64_t>(t, std::max<std::uint64_t>(work, 1)));
}

/// Runs body(worker) on `threads` workers and rethrows the first exception.
template <typename Body>
void run_workers(unsigned threads, Body&& body) {
  if (threads <= 1) {
    body(0u);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      try {
        body(w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

inline void atomic_min(std::atomic<std::uint64_t>& target, std::uint64_t value) {
  std::uint64_t cur = target.load(std::memory_order_relaxed);
  while (value < cur && !target.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
  }
}

inline LabeledGraph member_diff(const GraphFamily& fam, std::size_t i, std::size_t j) {
  LabeledGraph g = fam[i];
  g ^= fam[j];
  return g;
}

inline std::uint64_t pair_count_of(std::uint64_t size) {
  return size < 2 ? 0 : size * (size - 1) / 2;
}

/// Lex rank of (i, j), i < j, among all pairs of an N-member family.
inline std::uint64_t lex_rank(std::uint64_t i, std::uint64_t j, std::uint64_t size) {
  return i * (2 * size - i - 1) / 2 + (j - i - 1);
}

/// Pairwise scan; `ok(diff)` is the per-pair requirement.
template <typename Ok>
VerifyReport scan_pairs(const GraphFamily& fam, Ok&& ok, VerifyMode mode, unsigned threads) {
  const std::uint64_t size = fam.size();
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> next_row{0};
  std::atomic<std::uint64_t> best{kNone};     // i * size + j
  std::atomic<std::uint64_t> refused{kNone};  // same key, capability failure
  std::mutex error_mutex;
  std::string refusal;

  run_workers(worker_count(threads, size), [&](unsigned) {
    for (;;) {
      const std::uint64_t i = next_row.fetch_add(1, std::memory_order_relaxed);
      if (i + 1 >= size) return;
      const std::uint64_t stop = std::min(best.load(std::memory_order_relaxed),
                                          refused.load(std::memory_order_relaxed));
      if (i * size >= stop) return;
      for (std::uint64_t j = i + 1; j < size; ++j) {
        const std::uint64_t key = i * size + j;
        if (key >= best.load(std::memory_order_relaxed) ||
            key >= refused.load(std::memory_order_relaxed))
          break;
        bool good = false;
        try {
          good = ok(member_diff(fam, i, j));
        } catch (const capability_error& e) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (key < refused.load()) {
            refused.store(key);
            refusal = e.what();
          }
          break;
        }
        if (!good) {
          atomic_min(best, key);
          break;
        }
      }
    }
  });

  const std::uint64_t fail = best.load();
  const std::uint64_t err = refused.load();
  if (err != kNone && err < fail) throw verify_capability_error(err / size, err % size, refusal);

  VerifyReport report;
  report.mode = mode;
  if (fail == kNone) {
    report.pairs_checked = pair_count_of(size);
    return report;
  }
  const std::uint64_t i = fail / size, j = fail % size;
  report.pass = false;
  report.pairs_checked = lex_rank(i, j, size) + 1;
  report.witness = Witness{i, j, member_diff(fam, i, j)};
  return report;
}

/// Checks ok() on every nonzero member of span(basis). Returns the smallest
/// failing coefficient mask, if any.
template <typename Ok>
std::optional<std::uint64_t> scan_span(const Gf2Basis& basis, Ok&& ok, unsigned threads) {
  const int r = basis.rank();
  if (r == 0) return std::nullopt;
  const int chunk_bits = std::min(r, 8);
  const std::uint64_t chunks = std::uint64_t{1} << chunk_bits;
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{kNone};
  const std::uint64_t low_span = std::uint64_t{1} << (r - chunk_bits);

  run_workers(worker_count(threads, chunks), [&](unsigned) {
    for (;;) {
      const std::uint64_t c = next.fetch_add(1, std::memory_order_relaxed);
      if (c >= chunks) return;
      // Masks in chunk c lie in [c * low_span, (c + 1) * low_span).
      if (c * low_span >= best.load(std::memory_order_relaxed)) return;
      std::uint64_t local = kNone;
      walk_span(basis.vectors(), basis.order(), c, chunk_bits,
                [&](const LabeledGraph& g, std::uint64_t coeffs) {
                  if (coeffs == 0 || coeffs >= local) return;
                  if (!ok(g)) local = coeffs;
                });
      if (local != kNone) atomic_min(best, local);
    }
  });
  if (best.load() == kNone) return std::nullopt;
  return best.load();
}

/// Basis of {G ^ G_0 : G in fam} when fam is exactly one coset of that span
/// (size 2^rank, members distinct); nullopt otherwise.
inline std::optional<Gf2Basis> coset_directions(const GraphFamily& fam) {
  const std::uint64_t size = fam.size();
  if (size < 2 || !std::has_single_bit(size)) return std::nullopt;
  const int want = std::countr_zero(size);
  if (want > kSpanEnumerationLimit) return std::nullopt;
  const LabeledGraph base = fam[0];
  Gf2Basis basis(fam.order());
  for (std::size_t i = 1; i < size && basis.rank() < want; ++i) basis.insert(fam[i] ^ base);
  if (basis.rank() != want) return std::nullopt;

  // Word-level membership: clearing the pivot bits of a span member with
  // the reduced basis leaves zero, and the cleared pivots are its key.
  const std::size_t stride = word_count(fam.order());
  std::vector<std::uint64_t> vecs;
  for (const auto& v : basis.vectors()) vecs.insert(vecs.end(), v.words().begin(), v.words().end());
  const auto& pivots = basis.pivots();
  std::vector<bool> seen(std::size_t{1} << want, false);
  std::vector<std::uint64_t> d(stride);
  const auto base_words = base.words();
  for (std::size_t i = 0; i < size; ++i) {
    const auto w = fam.member_words(i);
    for (std::size_t k = 0; k < stride; ++k) d[k] = w[k] ^ base_words[k];
    std::uint64_t key = 0;
    for (int b = 0; b < want; ++b) {
      const std::size_t p = pivots[static_cast<std::size_t>(b)];
      if ((d[p / 64] >> (p % 64)) & 1u) {
        key |= std::uint64_t{1} << b;
        const std::uint64_t* v = vecs.data() + static_cast<std::size_t>(b) * stride;
        for (std::size_t k = 0; k < stride; ++k) d[k] ^= v[k];
      }
    }
    if (std::any_of(d.begin(), d.end(), [](std::uint64_t x) { return x != 0; })) return std::nullopt;
    if (seen[key]) return std::nullopt;
    seen[key] = true;
  }
  return basis;
}

template <typename Ok>
VerifyReport verify_explicit(const GraphFamily& fam, Ok&& ok, VerifyMode mode,
                             const VerifyOptions& opts) {
  if (fam.size() < 2) throw std::domain_error("verify: family needs at least 2 members");
  if (fam.size() >= opts.coset_shortcut_min) {
    if (auto dirs = coset_directions(fam)) {
      // Pairwise differences of a coset are exactly the nonzero span members.
      if (!scan_span(*dirs, ok, opts.threads)) {
        VerifyReport report;
        report.mode = mode;
        report.pairs_checked = pair_count_of(fam.size());
        return report;
      }
    }
  }
  return scan_pairs(fam, ok, mode, opts.threads);
}

template <typename Ok>
VerifyReport verify_span(const Gf2Basis& basis, Ok&& ok, VerifyMode mode, const VerifyOptions& opts,
                         int max_rank, const char* what) {
  if (basis.rank() > max_rank)
    throw capability_error(std::string(what) + ": rank " + std::to_string(basis.rank()) +
                           " exceeds the enumeration limit " + std::to_string(max_rank));
  VerifyReport report;
  report.mode = mode;
  const std::uint64_t members = (std::uint64_t{1} << basis.rank()) - 1;
  if (auto fail = scan_span(basis, ok, opts.threads)) {
    report.pass = false;
    report.pairs_checked = *fail;
    report.witness = Witness{0, *fail, span_member(basis, *fail)};
  } else {
    report.pairs_checked = members;
  }
  return report;
}

}  // namespace detail

/// Every pairwise symmetric difference satisfies `pred`.
inline VerifyReport verify_family(const GraphFamily& fam, const Predicate& pred,
                                  const VerifyOptions& opts = {}) {
  return detail::verify_explicit(fam, [&](const LabeledGraph& d) { return pred(d); },
                                 VerifyMode::kPairwise, opts);
}

/// No pairwise symmetric difference satisfies `pred`.
inline VerifyReport verify_dual_family(const GraphFamily& fam, const Predicate& pred,
                                       const VerifyOptions& opts = {}) {
  return detail::verify_explicit(fam, [&](const LabeledGraph& d) { return !pred(d); },
                                 VerifyMode::kDual, opts);
}

/// Every nonzero span member satisfies `pred`; equivalent to pairwise
/// verification of the enumerated span.
inline VerifyReport verify_linear_family(const LinearFamily& fam, const Predicate& pred,
                                         const VerifyOptions& opts = {},
                                         int max_rank = kSpanEnumerationLimit) {
  return detail::verify_span(fam.basis(), [&](const LabeledGraph& d) { return pred(d); },
                             VerifyMode::kLinear, opts, max_rank, "verify_linear_family");
}

/// Dual check of a linear family: no nonzero member satisfies `pred`.
inline VerifyReport verify_dual_linear(const LinearFamily& fam, const Predicate& pred,
                                       const VerifyOptions& opts = {},
                                       int max_rank = kSpanEnumerationLimit) {
  return detail::verify_span(fam.basis(), [&](const LabeledGraph& d) { return !pred(d); },
                             VerifyMode::kDual, opts, max_rank, "verify_dual_linear");
}

/// Dual check of a coset: differences are the nonzero direction members.
inline VerifyReport verify_dual_affine(const AffineFamily& fam, const Predicate& pred,
                                       const VerifyOptions& opts = {},
                                       int max_rank = kSpanEnumerationLimit) {
  return verify_dual_linear(fam.directions, pred, opts, max_rank);
}

/// Budget for cross_difference_distinct.
inline constexpr int kCrossBudgetLog2 = 24;

/// True iff the |A||B| graphs G ^ T (G in A, T in B) are pairwise distinct.
inline bool cross_difference_distinct(const GraphFamily& a, const GraphFamily& b) {
  if (a.order() != b.order())
    throw std::domain_error("cross_difference_distinct: families have different n");
  std::size_t shared = 0;
  {
    GraphFamily both(a.order());
    for (std::size_t i = 0; i < a.size(); ++i) both.push_back(a[i]);
    for (std::size_t i = 0; i < b.size(); ++i) both.push_back(b[i]);
    if (both.first_duplicate()) {
      both.sort();
      for (std::size_t k = 1; k < both.size(); ++k)
        if (both.compare(k, k - 1) == 0) ++shared;
    }
  }
  if (shared >= 2)
    throw std::domain_error("cross_difference_distinct: families share " + std::to_string(shared) +
                            " members, so they cannot be a good/dual pair");
  const Cardinality product = Cardinality(a.size()) * Cardinality(b.size());
  if (product > Cardinality::pow2(kCrossBudgetLog2))
    throw capability_error("cross_difference_distinct: product " + product.to_short_string() +
                           " exceeds 2^" + std::to_string(kCrossBudgetLog2));
  GraphFamily all(a.order());
  all.reserve(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const LabeledGraph g = a[i];
    for (std::size_t j = 0; j < b.size(); ++j) all.push_back(g ^ b[j]);
  }
  all.sort();
  for (std::size_t k = 1; k < all.size(); ++k)
    if (all.compare(k, k - 1) == 0) return false;
  return true;
}

}  // namespace gfcode

#endif  // GFCODE_VERIFY_HPP_
