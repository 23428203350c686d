// Copyright 2026 The rouge2 Authors
//
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

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "rouge2/text.hpp"

namespace rouge2 {

/// An n-gram is its ordered normalized words; the gram order is the size.
using NGram = std::vector<std::string>;

/// Multiset of n-grams of one fixed order. Counts are kept per distinct
/// gram; iteration order is deterministic (lexicographic).
class NGramMultiset {
 public:
  explicit NGramMultiset(std::size_t order) : order_(order) {
    if (order_ < 1) throw std::invalid_argument("NGramMultiset: gram order must be >= 1");
  }

  void add(NGram gram) {
    if (gram.size() != order_) {
      throw std::invalid_argument("NGramMultiset::add: gram order mismatch");
    }
    ++counts_[std::move(gram)];
    ++total_;
  }

  std::size_t order() const { return order_; }

  /// Number of gram instances (with multiplicity).
  std::size_t total() const { return total_; }

  bool empty() const { return total_ == 0; }

  const std::map<NGram, std::size_t>& counts() const { return counts_; }

  bool operator==(const NGramMultiset&) const = default;

 private:
  std::size_t order_;
  std::size_t total_ = 0;
  std::map<NGram, std::size_t> counts_;
};

/// Every contiguous window of `n` tokens within a sentence. Windows never
/// cross sentence boundaries; duplicates keep their multiplicity.
inline NGramMultiset extract_ngrams(const TokenizedText& text, std::size_t n) {
  if (n < 1) throw std::invalid_argument("extract_ngrams: gram order must be >= 1");
  NGramMultiset grams(n);
  for (const auto& sentence : text.sentences) {
    if (sentence.size() < n) continue;
    for (std::size_t i = 0; i + n <= sentence.size(); ++i) {
      NGram gram;
      gram.reserve(n);
      for (std::size_t j = 0; j < n; ++j) gram.push_back(sentence[i + j].normalized);
      grams.add(std::move(gram));
    }
  }
  return grams;
}

/// Clipped multiset overlap: sum over distinct grams of
/// min(count in ref, count in sys). No smoothing of any kind is applied;
/// the result is the raw clipped count.
inline std::size_t clipped_overlap(const NGramMultiset& ref_grams,
                                   const NGramMultiset& sys_grams) {
  if (ref_grams.order() != sys_grams.order()) {
    throw std::invalid_argument("clipped_overlap: gram orders differ");
  }
  const auto& a = ref_grams.counts();
  const auto& b = sys_grams.counts();
  // Walk the smaller map.
  const auto& small = a.size() <= b.size() ? a : b;
  const auto& large = a.size() <= b.size() ? b : a;
  std::size_t overlap = 0;
  for (const auto& [gram, count] : small) {
    auto it = large.find(gram);
    if (it != large.end()) overlap += std::min(count, it->second);
  }
  return overlap;
}

}  // namespace rouge2
