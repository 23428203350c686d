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

namespace rouge2 {

/// Recall / precision / F1 plus the raw counts they were computed from.
/// Recall is listed first everywhere: these are recall-oriented measures.
struct RougeScore {
  double recall = 0.0;
  double precision = 0.0;
  double f_score = 0.0;
  std::size_t overlap = 0;
  std::size_t ref_size = 0;
  std::size_t sys_size = 0;

  bool operator==(const RougeScore&) const = default;
};

/// Harmonic mean of precision and recall (balanced F1, no beta knob).
/// Returns 0 when both inputs are 0. Throws std::invalid_argument when
/// either argument falls outside [0, 1].
inline double f_score(double precision, double recall) {
  if (!(precision >= 0.0 && precision <= 1.0) ||
      !(recall >= 0.0 && recall <= 1.0)) {
    throw std::invalid_argument("f_score: precision and recall must lie in [0, 1]");
  }
  const double denom = precision + recall;
  if (denom <= 0.0) return 0.0;
  return 2.0 * precision * recall / denom;
}

/// Builds a full RougeScore from raw counts. An empty side yields 0 for the
/// affected fraction rather than an error.
inline RougeScore score_from_counts(std::size_t overlap, std::size_t ref_size,
                                    std::size_t sys_size) {
  RougeScore s;
  s.overlap = overlap;
  s.ref_size = ref_size;
  s.sys_size = sys_size;
  s.recall = ref_size > 0 ? static_cast<double>(overlap) / static_cast<double>(ref_size) : 0.0;
  s.precision = sys_size > 0 ? static_cast<double>(overlap) / static_cast<double>(sys_size) : 0.0;
  s.f_score = f_score(s.precision, s.recall);
  return s;
}

}  // namespace rouge2
