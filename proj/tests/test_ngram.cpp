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

#include <random>
#include <stdexcept>

#include <catch2/catch_amalgamated.hpp>

#include "rouge2/ngram.hpp"
#include "rouge2/text.hpp"
#include "test_helpers.hpp"

using rouge2::NGram;
using rouge2::NGramMultiset;
using rouge2::clipped_overlap;
using rouge2::extract_ngrams;
using rouge2::load_text;
using rouge2::tokenize;

namespace {

NGramMultiset fixture_unigrams(const std::string& relative) {
  return extract_ngrams(load_text(testutil::fixture(relative)), 1);
}

}  // namespace

TEST_CASE("extract_ngrams counts unigrams with multiplicity") {
  const NGramMultiset grams =
      extract_ngrams(tokenize("The phone is very lightweight. The display is also very "
                              "bright and clear."),
                     1);
  CHECK(grams.order() == 1);
  CHECK(grams.total() == 13);
  CHECK(grams.counts().at(NGram{"the"}) == 2);
  CHECK(grams.counts().at(NGram{"is"}) == 2);
  CHECK(grams.counts().at(NGram{"very"}) == 2);
  CHECK(grams.counts().at(NGram{"phone"}) == 1);
}

TEST_CASE("extract_ngrams keeps bigram windows inside sentences") {
  const NGramMultiset grams =
      extract_ngrams(tokenize("The phone is very lightweight. The display is also very "
                              "bright and clear."),
                     2);
  // 5-token sentence -> 4 windows, 8-token sentence -> 7 windows.
  CHECK(grams.total() == 11);
  CHECK(grams.counts().count(NGram{"very", "lightweight"}) == 1);
  // The boundary-straddling pair must not exist.
  CHECK(grams.counts().count(NGram{"lightweight", "the"}) == 0);
}

TEST_CASE("extract_ngrams yields nothing when no window fits") {
  const NGramMultiset grams = extract_ngrams(tokenize("Bright screen. Nice one."), 3);
  CHECK(grams.empty());
  CHECK(grams.total() == 0);
}

TEST_CASE("extract_ngrams rejects gram order zero") {
  CHECK_THROWS_AS(extract_ngrams(tokenize("a b c."), 0), std::invalid_argument);
}

TEST_CASE("NGramMultiset rejects grams of the wrong order") {
  NGramMultiset grams(2);
  grams.add(NGram{"a", "b"});
  CHECK_THROWS_AS(grams.add(NGram{"a"}), std::invalid_argument);
  CHECK_THROWS_AS(NGramMultiset(0), std::invalid_argument);
}

TEST_CASE("clipped_overlap reproduces the documented fixture counts") {
  const NGramMultiset ref = fixture_unigrams("fixtures/phone/references/phone.1.txt");
  const NGramMultiset sys1 = fixture_unigrams("fixtures/phone/systems/phone_sys1.txt");
  const NGramMultiset sys2 = fixture_unigrams("fixtures/phone/systems/phone_sys2.txt");

  CHECK(ref.total() == 13);
  CHECK(sys1.total() == 8);
  CHECK(sys2.total() == 46);
  CHECK(clipped_overlap(ref, sys1) == 6);
  CHECK(clipped_overlap(ref, sys2) == 9);
}

TEST_CASE("clipped_overlap of a multiset with itself is its total") {
  const NGramMultiset grams = fixture_unigrams("fixtures/phone/systems/phone_sys1.txt");
  CHECK(clipped_overlap(grams, grams) == grams.total());
}

TEST_CASE("clipped_overlap rejects mixed gram orders") {
  NGramMultiset unigrams(1);
  unigrams.add(NGram{"a"});
  NGramMultiset bigrams(2);
  bigrams.add(NGram{"a", "b"});
  CHECK_THROWS_AS(clipped_overlap(unigrams, bigrams), std::invalid_argument);
}

TEST_CASE("extract_ngrams agrees with the window-slider oracle") {
  std::mt19937 rng(42);
  for (int i = 0; i < 150; ++i) {
    const auto sentences = testutil::random_sentences(rng, 4, 7);
    const std::size_t n = 1 + static_cast<std::size_t>(i % 4);
    const NGramMultiset grams = extract_ngrams(testutil::make_text(sentences), n);
    const auto expected = testutil::oracle_ngrams(sentences, n);
    CAPTURE(i, n);
    REQUIRE(grams.counts().size() == expected.size());
    for (const auto& [gram, count] : expected) {
      REQUIRE(grams.counts().at(gram) == count);
    }
  }
}

TEST_CASE("clipped_overlap agrees with the oracle and is symmetric and bounded") {
  std::mt19937 rng(1234);
  for (int i = 0; i < 150; ++i) {
    const auto a_sentences = testutil::random_sentences(rng, 3, 6, 5);
    const auto b_sentences = testutil::random_sentences(rng, 3, 6, 5);
    const std::size_t n = 1 + static_cast<std::size_t>(i % 2);
    const NGramMultiset a = extract_ngrams(testutil::make_text(a_sentences), n);
    const NGramMultiset b = extract_ngrams(testutil::make_text(b_sentences), n);

    const std::size_t overlap = clipped_overlap(a, b);
    CAPTURE(i, n);
    REQUIRE(overlap == testutil::oracle_clipped_overlap(testutil::oracle_ngrams(a_sentences, n),
                                                        testutil::oracle_ngrams(b_sentences, n)));
    REQUIRE(overlap == clipped_overlap(b, a));
    REQUIRE(overlap <= std::min(a.total(), b.total()));
  }
}
