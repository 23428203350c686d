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

#include <cctype>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rouge2/text.hpp"

namespace rouge2 {

/// A token paired with its part-of-speech tag (e.g. "NN", "VBD").
struct TaggedToken {
  Token token;
  std::string pos;

  bool operator==(const TaggedToken&) const = default;
};

/// Sentence-segmented tagged text, the tagged sibling of TokenizedText.
struct TaggedText {
  std::vector<std::vector<TaggedToken>> sentences;

  std::size_t token_count() const {
    std::size_t count = 0;
    for (const auto& sentence : sentences) count += sentence.size();
    return count;
  }

  bool empty() const { return token_count() == 0; }

  /// Drops the tags, yielding plain tokenized text.
  TokenizedText untagged() const {
    TokenizedText text;
    text.sentences.reserve(sentences.size());
    for (const auto& sentence : sentences) {
      auto& out = text.sentences.emplace_back();
      out.reserve(sentence.size());
      for (const TaggedToken& tagged : sentence) out.push_back(tagged.token);
    }
    return text;
  }

  bool operator==(const TaggedText&) const = default;
};

namespace detail {

inline std::string ascii_upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  }
  return out;
}

}  // namespace detail

/// Selects topic words by part-of-speech prefix. A token is admitted when
/// its tag STARTS WITH any requested prefix, so "NN" covers NN, NNS, NNP,
/// NNPS while "VBD" covers only VBD. Prefixes are uppercased on
/// construction; matching is exact-case against the (conventionally
/// uppercase) tags.
class TopicFilter {
 public:
  explicit TopicFilter(std::vector<std::string> prefixes) {
    for (std::string& p : prefixes) {
      p = detail::ascii_upper(p);
      if (p.empty()) throw std::invalid_argument("TopicFilter: empty pos prefix");
    }
    if (prefixes.empty()) {
      throw std::invalid_argument("TopicFilter: at least one pos prefix is required");
    }
    prefixes_ = std::move(prefixes);
  }

  /// Parses a spec like "NN,JJ" or "NN|JJ" (either separator, mixed is fine).
  static TopicFilter parse(std::string_view spec) {
    std::vector<std::string> prefixes;
    std::string current;
    auto flush = [&] {
      if (!current.empty()) {
        prefixes.push_back(current);
        current.clear();
      }
    };
    for (char c : spec) {
      if (c == ',' || c == '|') {
        flush();
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        current.push_back(c);
      }
    }
    flush();
    if (prefixes.empty()) {
      throw std::invalid_argument("TopicFilter: no pos prefixes in spec '" +
                                  std::string(spec) + "'");
    }
    return TopicFilter(std::move(prefixes));
  }

  bool admits(std::string_view pos) const {
    for (const std::string& prefix : prefixes_) {
      if (pos.starts_with(prefix)) return true;
    }
    return false;
  }

  const std::vector<std::string>& prefixes() const { return prefixes_; }

  /// Canonical display form, e.g. "NN|JJ".
  std::string label() const {
    std::string out;
    for (const std::string& p : prefixes_) {
      if (!out.empty()) out.push_back('|');
      out += p;
    }
    return out;
  }

  bool operator==(const TopicFilter&) const = default;

 private:
  std::vector<std::string> prefixes_;
};

/// The topic words of one text: the full multiset (as an ordered vector of
/// normalized words) and the corresponding unique-word set.
struct TopicTokens {
  std::vector<std::string> tokens;
  std::set<std::string, std::less<>> unique;

  std::size_t count() const { return tokens.size(); }
  std::size_t unique_count() const { return unique.size(); }

  bool operator==(const TopicTokens&) const = default;
};

/// Parses pre-tagged text where every token is written word_TAG and
/// sentences are newline-separated, e.g.
///   The_DT phone_NN is_VBZ very_RB lightweight_JJ
/// The split is on the LAST underscore, so snake_case words survive as long
/// as they carry a tag. Tokens whose word part normalizes to "" are
/// dropped; a token with no underscore or an empty tag is a parse error
/// naming the line and token index. Empty sentences are dropped.
inline TaggedText parse_tagged(std::string_view input) {
  TaggedText text;
  std::vector<TaggedToken> sentence;
  std::size_t sentence_index = 0;
  std::size_t line_number = 1;
  std::size_t token_index = 0;

  auto fail = [&](const std::string& why, std::string_view raw) {
    throw std::runtime_error("tagged input line " + std::to_string(line_number) +
                             ", token " + std::to_string(token_index) + ": " + why +
                             " in '" + std::string(raw) + "'");
  };
  auto flush_sentence = [&] {
    if (!sentence.empty()) {
      text.sentences.push_back(std::move(sentence));
      sentence.clear();
      ++sentence_index;
    }
    token_index = 0;
  };
  auto take_token = [&](std::string_view raw) {
    ++token_index;
    const std::size_t underscore = raw.rfind('_');
    if (underscore == std::string_view::npos) fail("missing _TAG suffix", raw);
    if (underscore + 1 == raw.size()) fail("empty pos tag", raw);
    const std::string_view word = raw.substr(0, underscore);
    const std::string_view pos = raw.substr(underscore + 1);
    std::string normalized = normalize_word(word);
    if (normalized.empty()) return;  // punctuation-only token
    TaggedToken tagged;
    tagged.token.surface = std::string(word);
    tagged.token.normalized = std::move(normalized);
    tagged.token.sentence_index = sentence_index;
    tagged.token.position = sentence.size();
    tagged.pos = std::string(pos);
    sentence.push_back(std::move(tagged));
  };

  std::size_t word_start = std::string_view::npos;
  for (std::size_t i = 0; i <= input.size(); ++i) {
    const char c = i < input.size() ? input[i] : '\n';
    const bool space = c == ' ' || c == '\t' || c == '\r' || c == '\n';
    if (!space) {
      if (word_start == std::string_view::npos) word_start = i;
      continue;
    }
    if (word_start != std::string_view::npos) {
      take_token(input.substr(word_start, i - word_start));
      word_start = std::string_view::npos;
    }
    if (c == '\n') {
      flush_sentence();
      ++line_number;
    }
  }
  return text;
}

inline TaggedText load_tagged(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open tagged file: " + path.string());
  }
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  try {
    return parse_tagged(content);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

/// Word -> tag lookup used to tag plain text when no pre-tagged variant is
/// available. Lookups are by normalized word; misses fall back to
/// default_tag.
struct PosLexicon {
  std::unordered_map<std::string, std::string> tags;
  std::string default_tag = "NN";

  std::string_view tag_of(std::string_view normalized_word) const {
    auto it = tags.find(std::string(normalized_word));
    return it == tags.end() ? std::string_view(default_tag) : std::string_view(it->second);
  }
};

/// Loads a lexicon file of word<TAB>TAG lines; '#' and blank lines are
/// ignored. Later duplicates overwrite earlier ones.
inline PosLexicon load_lexicon(const std::filesystem::path& path,
                               std::string default_tag = "NN") {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open lexicon file: " + path.string());
  }
  PosLexicon lexicon;
  lexicon.default_tag = std::move(default_tag);
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw std::runtime_error(path.string() + ":" + std::to_string(line_number) +
                               ": expected word<TAB>TAG");
    }
    std::string word = normalize_word(std::string_view(line).substr(0, tab));
    std::string_view tag_part = std::string_view(line).substr(tab + 1);
    while (!tag_part.empty() && (tag_part.front() == ' ' || tag_part.front() == '\t')) {
      tag_part.remove_prefix(1);
    }
    while (!tag_part.empty() && (tag_part.back() == ' ' || tag_part.back() == '\t')) {
      tag_part.remove_suffix(1);
    }
    std::string tag = detail::ascii_upper(tag_part);
    if (word.empty() || tag.empty()) {
      throw std::runtime_error(path.string() + ":" + std::to_string(line_number) +
                               ": empty word or tag");
    }
    lexicon.tags[std::move(word)] = std::move(tag);
  }
  return lexicon;
}

/// Tags plain tokenized text via lexicon lookup on the normalized word.
inline TaggedText tag_with_lexicon(const TokenizedText& text, const PosLexicon& lexicon) {
  TaggedText tagged;
  tagged.sentences.reserve(text.sentences.size());
  for (const auto& sentence : text.sentences) {
    auto& out = tagged.sentences.emplace_back();
    out.reserve(sentence.size());
    for (const Token& token : sentence) {
      TaggedToken t;
      t.token = token;
      t.pos = std::string(lexicon.tag_of(token.normalized));
      out.push_back(std::move(t));
    }
  }
  return tagged;
}

/// Stopword removal for tagged text: same semantics as the plain-text
/// overload — sentence slots survive, positions are reindexed, tags ride
/// along with their tokens.
inline TaggedText remove_stopwords(const TaggedText& text, const StopwordSet& stopwords) {
  TaggedText out;
  out.sentences.resize(text.sentences.size());
  for (std::size_t s = 0; s < text.sentences.size(); ++s) {
    auto& sentence = out.sentences[s];
    for (const TaggedToken& tagged : text.sentences[s]) {
      if (stopwords.contains(tagged.token.normalized)) continue;
      TaggedToken kept = tagged;
      kept.token.position = sentence.size();
      sentence.push_back(std::move(kept));
    }
  }
  return out;
}

/// Extracts the topic words (unigrams only): every token whose tag the
/// filter admits contributes its normalized word to the multiset, and once
/// to the unique set. Order of `tokens` follows the text.
inline TopicTokens filter_topics(const TaggedText& text, const TopicFilter& filter) {
  TopicTokens topics;
  for (const auto& sentence : text.sentences) {
    for (const TaggedToken& tagged : sentence) {
      if (!filter.admits(tagged.pos)) continue;
      topics.tokens.push_back(tagged.token.normalized);
      topics.unique.insert(tagged.token.normalized);
    }
  }
  return topics;
}

}  // namespace rouge2
