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

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace rouge2 {

/// Maximum bipartite matching by augmenting paths (Kuhn's algorithm),
/// O(V*E). Instances here are gram occurrences of a summary pair, so V is
/// summary-sized; the matching SIZE is unique, which keeps synonym overlap
/// counts deterministic regardless of edge insertion order.
class BipartiteMatcher {
 public:
  BipartiteMatcher(std::size_t left_size, std::size_t right_size)
      : adjacency_(left_size),
        match_left_(left_size, kUnmatched),
        match_right_(right_size, kUnmatched),
        visited_(left_size, 0) {}

  void add_edge(std::size_t left, std::size_t right) {
    if (left >= adjacency_.size() || right >= match_right_.size()) {
      throw std::out_of_range("BipartiteMatcher::add_edge: node out of range");
    }
    adjacency_[left].push_back(right);
  }

  std::size_t max_matching() {
    std::size_t matched = 0;
    for (std::size_t v = 0; v < adjacency_.size(); ++v) {
      if (match_left_[v] != kUnmatched) continue;
      ++stamp_;
      if (try_augment(v)) ++matched;
    }
    return matched;
  }

 private:
  static constexpr int kUnmatched = -1;

  bool try_augment(std::size_t v) {
    visited_[v] = stamp_;
    for (std::size_t u : adjacency_[v]) {
      if (match_right_[u] == kUnmatched) {
        match_left_[v] = static_cast<int>(u);
        match_right_[u] = static_cast<int>(v);
        return true;
      }
    }
    for (std::size_t u : adjacency_[v]) {
      const auto owner = static_cast<std::size_t>(match_right_[u]);
      if (visited_[owner] != stamp_ && try_augment(owner)) {
        match_left_[v] = static_cast<int>(u);
        match_right_[u] = static_cast<int>(v);
        return true;
      }
    }
    return false;
  }

  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<int> match_left_;
  std::vector<int> match_right_;
  std::vector<unsigned> visited_;
  unsigned stamp_ = 0;
};

}  // namespace rouge2
