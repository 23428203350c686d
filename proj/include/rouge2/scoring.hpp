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
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include "rouge2/ngram.hpp"
#include "rouge2/score.hpp"
#include "rouge2/synonym.hpp"
#include "rouge2/text.hpp"
#include "rouge2/topic.hpp"

namespace rouge2 {

enum class Measure { RougeN, RougeTopic, RougeTopicUniq };

/// One measure configuration: which score to compute and with which
/// optional transforms. Enabled features must carry their resources —
/// validate() enforces that. Shared pointers keep one loaded dictionary /
/// stopword set reusable across many configurations and worker threads
/// (all reads, never mutated after load).
struct ScoreOptions {
  Measure measure = Measure::RougeN;
  std::size_t n = 1;  // gram order; RougeN only
  std::optional<TopicFilter> topic_filter;
  bool remove_stopwords = false;
  std::shared_ptr<const StopwordSet> stopwords;
  bool use_synonyms = false;
  std::shared_ptr<const SynonymDictionary> synonyms;

  void validate() const {
    if (measure == Measure::RougeN && n < 1) {
      throw std::invalid_argument("ScoreOptions: gram order must be >= 1");
    }
    if (measure != Measure::RougeN && !topic_filter.has_value()) {
      throw std::invalid_argument("ScoreOptions: topic measures require a topic filter");
    }
    if (remove_stopwords && !stopwords) {
      throw std::invalid_argument("ScoreOptions: stopword removal enabled without a stopword set");
    }
    if (use_synonyms && !synonyms) {
      throw std::invalid_argument("ScoreOptions: synonym matching enabled without a dictionary");
    }
  }

  std::string measure_label() const {
    switch (measure) {
      case Measure::RougeN: return "ROUGE-" + std::to_string(n);
      case Measure::RougeTopic: return "ROUGE-Topic";
      case Measure::RougeTopicUniq: return "ROUGE-TopicUniq";
    }
    return "?";
  }

  /// Settings column value, e.g. "pos=NN|JJ+StopWordRemoval+Synonyms";
  /// "-" when nothing beyond the bare measure is enabled.
  std::string settings_label() const {
    std::string out;
    auto append = [&out](const std::string& part) {
      if (!out.empty()) out.push_back('+');
      out += part;
    };
    if (topic_filter.has_value() && measure != Measure::RougeN) {
      append("pos=" + topic_filter->label());
    }
    if (remove_stopwords) append("StopWordRemoval");
    if (use_synonyms) append("Synonyms");
    return out.empty() ? "-" : out;
  }
};

namespace detail {

inline std::size_t overlap_of(const NGramMultiset& ref_grams, const NGramMultiset& sys_grams,
                              const ScoreOptions& opts) {
  if (opts.use_synonyms) return matching_overlap(ref_grams, sys_grams, *opts.synonyms);
  return clipped_overlap(ref_grams, sys_grams);
}

inline NGramMultiset unigram_multiset(const std::vector<std::string>& words) {
  NGramMultiset grams(1);
  for (const std::string& word : words) grams.add(NGram{word});
  return grams;
}

}  // namespace detail

/// ROUGE-N over plain texts: optional stopword removal on both sides,
/// n-gram extraction, then clipped overlap (exact mode) or maximum-matching
/// overlap (synonym mode). Empty sides are not an error — the affected
/// fractions are simply 0.
inline RougeScore score_rouge_n(const TokenizedText& ref, const TokenizedText& sys,
                                std::size_t n, const ScoreOptions& opts) {
  if (n < 1) throw std::invalid_argument("score_rouge_n: gram order must be >= 1");
  if (opts.remove_stopwords && !opts.stopwords) {
    throw std::invalid_argument("score_rouge_n: stopword removal enabled without a stopword set");
  }
  if (opts.use_synonyms && !opts.synonyms) {
    throw std::invalid_argument("score_rouge_n: synonym matching enabled without a dictionary");
  }

  TokenizedText ref_filtered;
  TokenizedText sys_filtered;
  const TokenizedText* ref_text = &ref;
  const TokenizedText* sys_text = &sys;
  if (opts.remove_stopwords) {
    ref_filtered = remove_stopwords(ref, *opts.stopwords);
    sys_filtered = remove_stopwords(sys, *opts.stopwords);
    ref_text = &ref_filtered;
    sys_text = &sys_filtered;
  }
  const NGramMultiset ref_grams = extract_ngrams(*ref_text, n);
  const NGramMultiset sys_grams = extract_ngrams(*sys_text, n);
  const std::size_t overlap = detail::overlap_of(ref_grams, sys_grams, opts);
  return score_from_counts(overlap, ref_grams.total(), sys_grams.total());
}

/// ROUGE-Topic: overlap of the topic-word MULTISETS (so repeated system
/// topic words count up to their reference multiplicity). Both sides must
/// come from the same filter; sizes are the full token counts.
inline RougeScore score_rouge_topic(const TopicTokens& ref, const TopicTokens& sys,
                                    const ScoreOptions& opts) {
  if (opts.use_synonyms && !opts.synonyms) {
    throw std::invalid_argument("score_rouge_topic: synonym matching enabled without a dictionary");
  }
  const NGramMultiset ref_grams = detail::unigram_multiset(ref.tokens);
  const NGramMultiset sys_grams = detail::unigram_multiset(sys.tokens);
  const std::size_t overlap = detail::overlap_of(ref_grams, sys_grams, opts);
  return score_from_counts(overlap, ref.count(), sys.count());
}

/// ROUGE-TopicUniq: overlap of the UNIQUE topic-word sets, suppressing
/// repetition effects. Exact mode is plain set intersection; synonym mode
/// is a maximum matching between the two unique-word sets (nodes are words,
/// not instances).
inline RougeScore score_rouge_topic_uniq(const TopicTokens& ref, const TopicTokens& sys,
                                         const ScoreOptions& opts) {
  if (opts.use_synonyms && !opts.synonyms) {
    throw std::invalid_argument(
        "score_rouge_topic_uniq: synonym matching enabled without a dictionary");
  }
  std::size_t overlap = 0;
  if (!opts.use_synonyms) {
    // Ordered-set intersection walk.
    auto r = ref.unique.begin();
    auto s = sys.unique.begin();
    while (r != ref.unique.end() && s != sys.unique.end()) {
      if (*r < *s) {
        ++r;
      } else if (*s < *r) {
        ++s;
      } else {
        ++overlap;
        ++r;
        ++s;
      }
    }
  } else {
    NGramMultiset ref_grams(1);
    for (const std::string& word : ref.unique) ref_grams.add(NGram{word});
    NGramMultiset sys_grams(1);
    for (const std::string& word : sys.unique) sys_grams.add(NGram{word});
    overlap = matching_overlap(ref_grams, sys_grams, *opts.synonyms);
  }
  return score_from_counts(overlap, ref.unique_count(), sys.unique_count());
}

/// Pipeline helper for the topic measures: stopword removal (if enabled)
/// then topic filtering, yielding the TopicTokens the two scorers consume.
inline TopicTokens topic_tokens_for(const TaggedText& text, const ScoreOptions& opts) {
  if (!opts.topic_filter.has_value()) {
    throw std::invalid_argument("topic_tokens_for: no topic filter configured");
  }
  if (opts.remove_stopwords && !opts.stopwords) {
    throw std::invalid_argument("topic_tokens_for: stopword removal enabled without a stopword set");
  }
  if (opts.remove_stopwords) {
    return filter_topics(remove_stopwords(text, *opts.stopwords), *opts.topic_filter);
  }
  return filter_topics(text, *opts.topic_filter);
}

}  // namespace rouge2
