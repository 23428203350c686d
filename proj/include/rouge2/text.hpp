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
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace rouge2 {

/// One word of a summary. `surface` is the raw character run as it appeared
/// in the input; `normalized` is the lowercased form with surrounding
/// punctuation stripped, which is what every measure compares on.
struct Token {
  std::string surface;
  std::string normalized;
  std::size_t sentence_index = 0;
  std::size_t position = 0;

  bool operator==(const Token&) const = default;
};

/// A summary as ordered sentences of ordered tokens.
struct TokenizedText {
  std::vector<std::vector<Token>> sentences;

  std::size_t token_count() const {
    std::size_t n = 0;
    for (const auto& s : sentences) n += s.size();
    return n;
  }

  bool empty() const { return token_count() == 0; }

  /// Flattened normalized word stream, in document order.
  std::vector<std::string> normalized_words() const {
    std::vector<std::string> out;
    out.reserve(token_count());
    for (const auto& s : sentences)
      for (const auto& t : s) out.push_back(t.normalized);
    return out;
  }

  bool operator==(const TokenizedText&) const = default;
};

namespace detail {

// Bytes >= 0x80 are kept inside tokens so multi-byte UTF-8 words survive
// intact; only ASCII is case-folded and classified.
inline bool is_word_byte(unsigned char c) {
  return std::isalnum(c) != 0 || c == '\'' || c >= 0x80;
}

inline bool is_alnum_byte(unsigned char c) {
  return std::isalnum(c) != 0 || c >= 0x80;
}

inline char ascii_lower(unsigned char c) {
  return static_cast<char>(std::tolower(c));
}

}  // namespace detail

/// Lowercases a word and strips leading/trailing non-alphanumeric characters
/// (so "Screen," -> "screen", "'tis" -> "tis", "don't" -> "don't").
/// Returns the empty string when nothing alphanumeric remains.
inline std::string normalize_word(std::string_view raw) {
  std::size_t begin = 0;
  std::size_t end = raw.size();
  while (begin < end && !detail::is_alnum_byte(static_cast<unsigned char>(raw[begin]))) ++begin;
  while (end > begin && !detail::is_alnum_byte(static_cast<unsigned char>(raw[end - 1]))) --end;
  std::string out;
  out.reserve(end - begin);
  for (std::size_t i = begin; i < end; ++i)
    out.push_back(detail::ascii_lower(static_cast<unsigned char>(raw[i])));
  return out;
}

/// Splits raw text into sentences and normalized tokens.
///
/// Sentences end at '.', '!' or '?' followed by whitespace or end of input;
/// line breaks count as plain whitespace. Tokens are maximal runs of
/// letters, digits and internal apostrophes. Tokens that normalize to the
/// empty string are dropped, as are sentences left without any token.
inline TokenizedText tokenize(std::string_view text) {
  TokenizedText out;
  std::vector<Token> sentence;
  std::string word;

  auto flush_word = [&] {
    if (word.empty()) return;
    std::string normalized = normalize_word(word);
    if (!normalized.empty()) {
      sentence.push_back(Token{word, std::move(normalized), 0, sentence.size()});
    }
    word.clear();
  };
  auto flush_sentence = [&] {
    flush_word();
    if (sentence.empty()) return;
    for (auto& t : sentence) t.sentence_index = out.sentences.size();
    out.sentences.push_back(std::move(sentence));
    sentence.clear();
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (detail::is_word_byte(c)) {
      word.push_back(static_cast<char>(c));
      continue;
    }
    flush_word();
    if ((c == '.' || c == '!' || c == '?') &&
        (i + 1 == text.size() ||
         std::isspace(static_cast<unsigned char>(text[i + 1])) != 0)) {
      flush_sentence();
    }
  }
  flush_sentence();
  return out;
}

/// Reads a whole UTF-8 file and tokenizes it. Throws std::runtime_error
/// when the file cannot be opened.
inline TokenizedText load_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open text file: " + path.string());
  }
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  return tokenize(content);
}

/// Set of normalized words to drop before scoring. Immutable once loaded.
class StopwordSet {
 public:
  StopwordSet() = default;

  StopwordSet(std::initializer_list<std::string_view> words) {
    for (auto w : words) insert(w);
  }

  /// Normalizes `word` and adds it; words that normalize to "" are ignored.
  void insert(std::string_view word) {
    std::string normalized = normalize_word(word);
    if (!normalized.empty()) words_.insert(std::move(normalized));
  }

  bool contains(std::string_view normalized) const {
    return words_.find(std::string(normalized)) != words_.end();
  }

  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }

  bool operator==(const StopwordSet&) const = default;

 private:
  std::unordered_set<std::string> words_;
};

/// Loads a stopword file: one word per line, '#' lines and blank lines
/// ignored, entries normalized on load. Throws std::runtime_error when the
/// file cannot be opened.
inline StopwordSet load_stopwords(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open stopword file: " + path.string());
  }
  StopwordSet set;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    set.insert(line);
  }
  return set;
}

/// The stopword list that ships with the library (and with the bundled
/// data/stopwords-rouge2-reference.txt file): a small function-word list
/// that never removes content words.
inline const StopwordSet& reference_stopwords() {
  static const StopwordSet set{"the", "is",  "very", "also", "and", "i",
                               "it",  "this", "was",  "a",   "to",  "my",
                               "do",  "that", "in",   "of"};
  return set;
}

/// Removes every token whose normalized form is in `stopwords`. Sentence
/// slots are preserved (a sentence may become empty); positions are
/// re-indexed contiguously. Idempotent.
inline TokenizedText remove_stopwords(const TokenizedText& text,
                                      const StopwordSet& stopwords) {
  TokenizedText out;
  out.sentences.reserve(text.sentences.size());
  for (std::size_t si = 0; si < text.sentences.size(); ++si) {
    std::vector<Token> kept;
    for (const Token& t : text.sentences[si]) {
      if (stopwords.contains(t.normalized)) continue;
      Token copy = t;
      copy.sentence_index = si;
      copy.position = kept.size();
      kept.push_back(std::move(copy));
    }
    out.sentences.push_back(std::move(kept));
  }
  return out;
}

}  // namespace rouge2
