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

#ifndef GFCODE_FAMILY_HPP_
#define GFCODE_FAMILY_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gfcode/cardinality.hpp"
#include "gfcode/graph.hpp"

namespace gfcode {

/// Which construction produced a family, and with which parameters.
struct Provenance {
  std::string construction;
  std::map<std::string, std::string> params;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// Ordered, duplicate-free list of graphs on a common vertex count.
///
/// Members are packed contiguously, word_count(n) words each, so families of
/// a few million small graphs stay compact. Element access returns copies.
class GraphFamily {
 public:
  GraphFamily() = default;
  explicit GraphFamily(int n, Provenance provenance = {})
      : n_(n), stride_(word_count(n)), provenance_(std::move(provenance)) {
    LabeledGraph probe(n);  // range check
    (void)probe;
  }

  int order() const { return n_; }
  std::size_t size() const { return stride_ == 0 ? count_ : words_.size() / stride_; }
  bool empty() const { return size() == 0; }

  const Provenance& provenance() const { return provenance_; }
  Provenance& provenance() { return provenance_; }

  const std::optional<Cardinality>& claimed_size() const { return claimed_size_; }
  void set_claimed_size(Cardinality c) { claimed_size_ = c; }

  LabeledGraph operator[](std::size_t i) const {
    return LabeledGraph::from_words(n_, member_words(i));
  }
  std::span<const std::uint64_t> member_words(std::size_t i) const {
    return {words_.data() + i * stride_, stride_};
  }

  /// Appends without a duplicate check; call `validate` once assembled.
  void push_back(const LabeledGraph& g) {
    if (g.order() != n_)
      throw std::domain_error("GraphFamily: member has n=" +
                              std::to_string(g.order()) + ", family has n=" +
                              std::to_string(n_));
    auto w = g.words();
    words_.insert(words_.end(), w.begin(), w.end());
    if (stride_ == 0) ++count_;
  }

  void reserve(std::size_t count) { words_.reserve(count * stride_); }

  /// Sorts members by edge vector (numeric order).
  void sort() {
    if (stride_ <= 1) {
      std::sort(words_.begin(), words_.end());
      return;
    }
    std::vector<std::size_t> idx(size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return compare(a, b) < 0; });
    std::vector<std::uint64_t> sorted;
    sorted.reserve(words_.size());
    for (std::size_t i : idx)
      sorted.insert(sorted.end(), words_.begin() + static_cast<std::ptrdiff_t>(i * stride_),
                    words_.begin() + static_cast<std::ptrdiff_t>((i + 1) * stride_));
    words_ = std::move(sorted);
  }

  std::vector<LabeledGraph> members() const {
    std::vector<LabeledGraph> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) out.push_back((*this)[i]);
    return out;
  }

  /// Index of the first member equal to an earlier one, if any.
  std::optional<std::size_t> first_duplicate() const {
    std::vector<std::size_t> order(size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return compare(a, b) < 0;
    });
    std::optional<std::size_t> first;
    for (std::size_t k = 1; k < order.size(); ++k)
      if (compare(order[k], order[k - 1]) == 0) {
        const std::size_t later = std::max(order[k], order[k - 1]);
        if (!first || later < *first) first = later;
      }
    return first;
  }

  /// Three-way numeric comparison of members a and b.
  int compare(std::size_t a, std::size_t b) const {
    if (stride_ == 0) return 0;
    for (std::size_t w = stride_; w-- > 0;) {
      const std::uint64_t x = words_[a * stride_ + w], y = words_[b * stride_ + w];
      if (x != y) return x < y ? -1 : 1;
    }
    return 0;
  }

  /// Throws std::domain_error on duplicates.
  void validate() const {
    if (auto d = first_duplicate())
      throw std::domain_error("GraphFamily: member " + std::to_string(*d) +
                              " duplicates an earlier member");
  }

  friend bool operator==(const GraphFamily& a, const GraphFamily& b) {
    return a.n_ == b.n_ && a.words_ == b.words_ && a.count_ == b.count_ &&
           a.provenance_ == b.provenance_;
  }

 private:
  int n_ = 1;
  std::size_t stride_ = 0;
  std::size_t count_ = 0;  // only used when stride_ == 0 (n == 1)
  std::vector<std::uint64_t> words_;
  Provenance provenance_;
  std::optional<Cardinality> claimed_size_;
};

/// Family translated by a fixed graph: {G ^ t : G in fam}.
inline GraphFamily translate(const GraphFamily& fam, const LabeledGraph& t) {
  GraphFamily out(fam.order(), fam.provenance());
  out.reserve(fam.size());
  for (std::size_t i = 0; i < fam.size(); ++i) out.push_back(fam[i] ^ t);
  return out;
}

inline GraphFamily complement_all(const GraphFamily& fam) {
  return translate(fam, graphs::complete(fam.order()));
}

}  // namespace gfcode

#endif  // GFCODE_FAMILY_HPP_
