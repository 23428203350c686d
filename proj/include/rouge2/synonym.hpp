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
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rouge2/matching.hpp"
#include "rouge2/ngram.hpp"
#include "rouge2/text.hpp"

namespace rouge2 {

/// Word -> synonym-set map. Lookup of an absent word yields the empty set.
/// Synonymy queries are symmetric over the stored entries; they are NOT
/// transitive, chained lookup is deliberately avoided.
class SynonymDictionary {
 public:
  /// Normalizes both words and records `synonym` under `headword`.
  /// Self-pairs and words that normalize to "" are dropped.
  void add(std::string_view headword, std::string_view synonym) {
    std::string head = normalize_word(headword);
    std::string syn = normalize_word(synonym);
    if (head.empty() || syn.empty() || head == syn) return;
    entries_[std::move(head)].insert(std::move(syn));
  }

  /// Ensures `headword` exists as an entry, possibly with an empty set.
  void add_headword(std::string_view headword) {
    std::string head = normalize_word(headword);
    if (!head.empty()) entries_[std::move(head)];
  }

  const std::set<std::string, std::less<>>& synonyms_of(std::string_view word) const {
    static const std::set<std::string, std::less<>> kEmpty;
    auto it = entries_.find(word);
    return it == entries_.end() ? kEmpty : it->second;
  }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  const std::map<std::string, std::set<std::string, std::less<>>, std::less<>>& entries() const {
    return entries_;
  }

  bool operator==(const SynonymDictionary&) const = default;

 private:
  std::map<std::string, std::set<std::string, std::less<>>, std::less<>> entries_;
};

/// Loads a dictionary file: one entry per line as
///   headword<TAB>synonym,synonym,...
/// '#' lines and blank lines are ignored; words are normalized on load and
/// duplicate headwords merge their synonym sets. Throws std::runtime_error
/// on a missing file or a malformed line (the message names the line).
inline SynonymDictionary load_dictionary(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open synonym dictionary: " + path.string());
  }
  SynonymDictionary dict;
  std::string line;
  std::size_t line_number = 0;
  auto malformed = [&](const std::string& why) {
    return std::runtime_error(path.string() + ":" + std::to_string(line_number) +
                              ": malformed dictionary line: " + why);
  };
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;

    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) throw malformed("expected a single TAB separator");
    if (line.find('\t', tab + 1) != std::string::npos) throw malformed("more than one TAB");
    std::string head = normalize_word(std::string_view(line).substr(0, tab));
    if (head.empty()) throw malformed("empty headword");

    std::string_view rest = std::string_view(line).substr(tab + 1);
    bool any = false;
    while (!rest.empty()) {
      const std::size_t comma = rest.find(',');
      std::string_view item = rest.substr(0, comma);
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
      std::string syn = normalize_word(item);
      if (syn.empty()) throw malformed("empty synonym entry");
      dict.add(head, syn);
      any = true;
    }
    if (!any) throw malformed("no synonyms listed");
  }
  return dict;
}

/// True iff the words are equal, or either lists the other. One symmetric
/// hop only: no transitive chaining.
inline bool synonymous(std::string_view a, std::string_view b,
                       const SynonymDictionary& dict) {
  if (a == b) return true;
  if (dict.synonyms_of(a).count(b) > 0) return true;
  return dict.synonyms_of(b).count(a) > 0;
}

namespace detail {

/// Grams match iff every position matches under synonymous(); no partial
/// credit for n > 1.
inline bool grams_match(const NGram& a, const NGram& b, const SynonymDictionary& dict) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!synonymous(a[i], b[i], dict)) return false;
  }
  return true;
}

}  // namespace detail

/// Synonym-aware overlap: one node per gram INSTANCE on each side, an edge
/// wherever the grams match position-wise under synonymous(), and the
/// result is the size of a maximum bipartite matching. A greedy pairing
/// would be order-dependent and could undercount; the maximum matching size
/// is unique. With an empty dictionary this equals clipped_overlap.
inline std::size_t matching_overlap(const NGramMultiset& ref_grams,
                                    const NGramMultiset& sys_grams,
                                    const SynonymDictionary& dict) {
  if (ref_grams.order() != sys_grams.order()) {
    throw std::invalid_argument("matching_overlap: gram orders differ");
  }
  if (ref_grams.empty() || sys_grams.empty()) return 0;

  // Distinct grams with their instance index ranges.
  struct Group {
    const NGram* gram;
    std::size_t first;
    std::size_t count;
  };
  auto group = [](const NGramMultiset& ms) {
    std::vector<Group> groups;
    groups.reserve(ms.counts().size());
    std::size_t next = 0;
    for (const auto& [gram, count] : ms.counts()) {
      groups.push_back(Group{&gram, next, count});
      next += count;
    }
    return groups;
  };
  const std::vector<Group> ref_groups = group(ref_grams);
  const std::vector<Group> sys_groups = group(sys_grams);

  BipartiteMatcher matcher(ref_grams.total(), sys_grams.total());
  for (const Group& r : ref_groups) {
    for (const Group& s : sys_groups) {
      if (!detail::grams_match(*r.gram, *s.gram, dict)) continue;
      for (std::size_t i = 0; i < r.count; ++i)
        for (std::size_t j = 0; j < s.count; ++j)
          matcher.add_edge(r.first + i, s.first + j);
    }
  }
  return matcher.max_matching();
}

// ---------------------------------------------------------------------------
// Dictionary construction from synset relations.

enum class SynsetPos { Noun, Verb, Adjective };
enum class SynsetRelation { Hyponym, Hypernym, Troponym, Satellite };

/// One synset member (or related word) with its corpus tag count.
struct SynsetLemma {
  std::string word;
  unsigned tag_count = 0;

  bool operator==(const SynsetLemma&) const = default;
};

/// One synset with its lemmas and related word lists, the input unit for
/// build_dictionary(). Neutral of any particular lexical database layout.
struct SynsetRecord {
  SynsetPos pos = SynsetPos::Noun;
  std::vector<SynsetLemma> lemmas;
  std::map<SynsetRelation, std::vector<SynsetLemma>> relations;

  bool operator==(const SynsetRecord&) const = default;
};

inline std::string_view to_string(SynsetPos pos) {
  switch (pos) {
    case SynsetPos::Noun: return "noun";
    case SynsetPos::Verb: return "verb";
    case SynsetPos::Adjective: return "adjective";
  }
  return "?";
}

inline std::string_view to_string(SynsetRelation rel) {
  switch (rel) {
    case SynsetRelation::Hyponym: return "hyponym";
    case SynsetRelation::Hypernym: return "hypernym";
    case SynsetRelation::Troponym: return "troponym";
    case SynsetRelation::Satellite: return "satellite";
  }
  return "?";
}

namespace detail {

inline SynsetPos parse_synset_pos(std::string_view s) {
  if (s == "noun") return SynsetPos::Noun;
  if (s == "verb") return SynsetPos::Verb;
  if (s == "adjective") return SynsetPos::Adjective;
  throw std::runtime_error("unknown synset pos: '" + std::string(s) + "'");
}

inline SynsetRelation parse_synset_relation(std::string_view s) {
  if (s == "hyponym") return SynsetRelation::Hyponym;
  if (s == "hypernym") return SynsetRelation::Hypernym;
  if (s == "troponym") return SynsetRelation::Troponym;
  if (s == "satellite") return SynsetRelation::Satellite;
  throw std::runtime_error("unknown relation kind: '" + std::string(s) + "'");
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  while (true) {
    const std::size_t at = s.find(sep);
    parts.push_back(s.substr(0, at));
    if (at == std::string_view::npos) break;
    s = s.substr(at + 1);
  }
  return parts;
}

inline SynsetLemma parse_counted_word(std::string_view s) {
  const std::size_t colon = s.rfind(':');
  if (colon == std::string_view::npos || colon == 0 || colon + 1 == s.size()) {
    throw std::runtime_error("expected word:tagcount, got '" + std::string(s) + "'");
  }
  SynsetLemma lemma;
  lemma.word = normalize_word(s.substr(0, colon));
  if (lemma.word.empty()) {
    throw std::runtime_error("empty word in '" + std::string(s) + "'");
  }
  const std::string_view digits = s.substr(colon + 1);
  unsigned value = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw std::runtime_error("tag count is not a non-negative integer in '" +
                               std::string(s) + "'");
    }
    value = value * 10 + static_cast<unsigned>(c - '0');
  }
  lemma.tag_count = value;
  return lemma;
}

inline std::vector<SynsetLemma> parse_counted_words(std::string_view s) {
  std::vector<SynsetLemma> out;
  for (std::string_view item : split(s, ',')) out.push_back(parse_counted_word(item));
  return out;
}

}  // namespace detail

/// Parses one record line:
///   pos|word:tagcount,word:tagcount|relkind=word:tagcount,...;relkind=...
/// The relations field is optional. Throws std::runtime_error on any
/// malformed piece.
inline SynsetRecord parse_synset_record(std::string_view line) {
  const std::vector<std::string_view> fields = detail::split(line, '|');
  if (fields.size() < 2 || fields.size() > 3) {
    throw std::runtime_error("expected pos|lemmas[|relations], got " +
                             std::to_string(fields.size()) + " field(s)");
  }
  SynsetRecord record;
  record.pos = detail::parse_synset_pos(fields[0]);
  record.lemmas = detail::parse_counted_words(fields[1]);
  if (fields.size() == 3) {
    if (fields[2].empty()) throw std::runtime_error("empty relations field");
    for (std::string_view group : detail::split(fields[2], ';')) {
      const std::size_t eq = group.find('=');
      if (eq == std::string_view::npos) {
        throw std::runtime_error("expected relkind=words in '" + std::string(group) + "'");
      }
      const SynsetRelation kind = detail::parse_synset_relation(group.substr(0, eq));
      auto words = detail::parse_counted_words(group.substr(eq + 1));
      auto& bucket = record.relations[kind];
      bucket.insert(bucket.end(), words.begin(), words.end());
    }
  }
  return record;
}

/// Inverse of parse_synset_record; round-trips bit-exactly for normalized
/// records.
inline std::string format_synset_record(const SynsetRecord& record) {
  std::string out(to_string(record.pos));
  out.push_back('|');
  auto append_words = [&out](const std::vector<SynsetLemma>& words) {
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (i > 0) out.push_back(',');
      out += words[i].word;
      out.push_back(':');
      out += std::to_string(words[i].tag_count);
    }
  };
  append_words(record.lemmas);
  if (!record.relations.empty()) {
    out.push_back('|');
    bool first = true;
    for (const auto& [kind, words] : record.relations) {
      if (!first) out.push_back(';');
      first = false;
      out += to_string(kind);
      out.push_back('=');
      append_words(words);
    }
  }
  return out;
}

/// Loads a line-delimited record stream; '#' lines and blank lines are
/// ignored. Errors name the offending line.
inline std::vector<SynsetRecord> load_synset_records(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open synset record file: " + path.string());
  }
  std::vector<SynsetRecord> records;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    try {
      records.push_back(parse_synset_record(line));
    } catch (const std::runtime_error& e) {
      throw std::runtime_error(path.string() + ":" + std::to_string(line_number) +
                               ": " + e.what());
    }
  }
  return records;
}

/// Builds a synonym dictionary from synset records.
///
/// Per record, every lemma receives as synonyms:
///   nouns      - its co-lemmas, plus hyponym/hypernym words with tag count > 3
///   verbs      - its co-lemmas, plus troponym/hypernym words with tag count > 3
///   adjectives - its co-lemmas, plus satellite words (no tag-count filter)
///
/// The tag-count filter applies to relation-derived words only, never to the
/// co-lemmas of the synset itself. A word never lists itself. Records whose
/// relation kinds are invalid for their pos (e.g. a troponym on a noun) are
/// rejected.
inline SynonymDictionary build_dictionary(std::span<const SynsetRecord> records) {
  constexpr unsigned kMinTagCount = 4;  // "greater than 3"
  SynonymDictionary dict;
  for (const SynsetRecord& record : records) {
    const bool adjective = record.pos == SynsetPos::Adjective;
    for (const auto& [kind, words] : record.relations) {
      const bool valid =
          (record.pos == SynsetPos::Noun &&
           (kind == SynsetRelation::Hyponym || kind == SynsetRelation::Hypernym)) ||
          (record.pos == SynsetPos::Verb &&
           (kind == SynsetRelation::Troponym || kind == SynsetRelation::Hypernym)) ||
          (adjective && kind == SynsetRelation::Satellite);
      if (!valid) {
        throw std::runtime_error("build_dictionary: relation kind '" +
                                 std::string(to_string(kind)) +
                                 "' is invalid for pos '" +
                                 std::string(to_string(record.pos)) + "'");
      }
      (void)words;
    }

    std::vector<std::string> pool;
    for (const SynsetLemma& lemma : record.lemmas) pool.push_back(lemma.word);
    for (const auto& [kind, words] : record.relations) {
      for (const SynsetLemma& related : words) {
        if (adjective || related.tag_count >= kMinTagCount) pool.push_back(related.word);
      }
    }

    for (const SynsetLemma& lemma : record.lemmas) {
      dict.add_headword(lemma.word);
      for (const std::string& candidate : pool) {
        if (candidate != lemma.word) dict.add(lemma.word, candidate);
      }
    }
  }
  return dict;
}

}  // namespace rouge2
