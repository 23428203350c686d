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
#include <set>
#include <stdexcept>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "rouge2/text.hpp"
#include "rouge2/topic.hpp"
#include "test_helpers.hpp"

using rouge2::PosLexicon;
using rouge2::TaggedText;
using rouge2::TopicFilter;
using rouge2::TopicTokens;
using rouge2::filter_topics;
using rouge2::load_lexicon;
using rouge2::load_tagged;
using rouge2::load_text;
using rouge2::parse_tagged;
using rouge2::reference_stopwords;
using rouge2::remove_stopwords;
using rouge2::tag_with_lexicon;

TEST_CASE("parse_tagged splits word_TAG tokens on the last underscore") {
  const TaggedText text = parse_tagged("The_DT phone_NN is_VBZ very_RB lightweight_JJ");
  REQUIRE(text.sentences.size() == 1);
  REQUIRE(text.sentences[0].size() == 5);
  CHECK(text.sentences[0][0].token.normalized == "the");
  CHECK(text.sentences[0][0].pos == "DT");
  CHECK(text.sentences[0][1].token.normalized == "phone");
  CHECK(text.sentences[0][1].pos == "NN");
  CHECK(text.sentences[0][4].pos == "JJ");

  const TaggedText snake = parse_tagged("ice_cream_NN");
  CHECK(snake.sentences[0][0].token.normalized == "ice_cream");
  CHECK(snake.sentences[0][0].pos == "NN");
}

TEST_CASE("parse_tagged treats lines as sentences and skips empties") {
  const TaggedText text = parse_tagged("One_CD two_CD\n\nThree_CD\n");
  REQUIRE(text.sentences.size() == 2);
  CHECK(text.sentences[0].size() == 2);
  CHECK(text.sentences[1].size() == 1);
  CHECK(text.sentences[1][0].token.sentence_index == 1);
  CHECK(parse_tagged("").empty());
}

TEST_CASE("parse_tagged drops tokens that normalize to nothing") {
  const TaggedText text = parse_tagged("hello_UH ,_, world_NN ._.");
  REQUIRE(text.sentences.size() == 1);
  CHECK(text.sentences[0].size() == 2);
  CHECK(text.sentences[0][1].token.normalized == "world");
  CHECK(text.sentences[0][1].token.position == 1);
}

TEST_CASE("parse_tagged reports missing or empty tags with line and token position") {
  CHECK_THROWS_WITH(parse_tagged("good_JJ bad"),
                    Catch::Matchers::ContainsSubstring("line 1, token 2"));
  CHECK_THROWS_WITH(parse_tagged("ok_NN\nnope_"),
                    Catch::Matchers::ContainsSubstring("line 2, token 1"));
}

TEST_CASE("tagged fixtures carry the documented token and topic counts") {
  const TaggedText sys2 = load_tagged(testutil::fixture("fixtures/phone/systems/phone_sys2.tag"));
  CHECK(sys2.token_count() == 46);

  const TopicFilter filter({"NN", "JJ"});
  CHECK(filter_topics(sys2, filter).count() == 13);
  CHECK(filter_topics(sys2, filter).unique_count() == 11);

  const TaggedText ref = load_tagged(testutil::fixture("fixtures/phone/references/phone.1.tag"));
  CHECK(ref.token_count() == 13);
  const TopicTokens ref_topics = filter_topics(ref, filter);
  CHECK(ref_topics.tokens ==
        std::vector<std::string>{"phone", "lightweight", "display", "bright", "clear"});
  CHECK(ref_topics.unique_count() == 5);

  const TaggedText sys1 = load_tagged(testutil::fixture("fixtures/phone/systems/phone_sys1.tag"));
  CHECK(sys1.token_count() == 8);
  CHECK(filter_topics(sys1, filter).count() == 6);
  CHECK(filter_topics(sys1, filter).unique_count() == 5);
}

TEST_CASE("untagged projection preserves sentence structure") {
  const TaggedText tagged = load_tagged(testutil::fixture("fixtures/phone/systems/phone_sys1.tag"));
  const auto plain = tagged.untagged();
  CHECK(plain.sentences.size() == tagged.sentences.size());
  CHECK(plain.token_count() == 8);
  CHECK(plain.sentences[0][0].normalized == "lightweight");
}

TEST_CASE("TopicFilter parses comma and pipe lists identically") {
  const TopicFilter commas = TopicFilter::parse("NN,JJ");
  const TopicFilter pipes = TopicFilter::parse("NN|JJ");
  const TopicFilter spaced = TopicFilter::parse(" nn , jj ");
  CHECK(commas == pipes);
  CHECK(commas == spaced);
  CHECK(commas.label() == "NN|JJ");
  CHECK_THROWS_AS(TopicFilter::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(TopicFilter::parse(",|"), std::invalid_argument);
  CHECK_THROWS_AS(TopicFilter(std::vector<std::string>{}), std::invalid_argument);
}

TEST_CASE("TopicFilter admits tags by prefix") {
  const TopicFilter nn({"NN"});
  CHECK(nn.admits("NN"));
  CHECK(nn.admits("NNS"));
  CHECK(nn.admits("NNP"));
  CHECK(nn.admits("NNPS"));
  CHECK_FALSE(nn.admits("JJ"));
  CHECK_FALSE(nn.admits("VBN"));

  const TopicFilter vbd({"VBD"});
  CHECK(vbd.admits("VBD"));
  CHECK_FALSE(vbd.admits("VB"));
  CHECK_FALSE(vbd.admits("VBZ"));

  const TopicFilter vb({"VB"});
  CHECK(vb.admits("VB"));
  CHECK(vb.admits("VBD"));
  CHECK(vb.admits("VBZ"));

  const TopicFilter nnp({"NNP"});
  CHECK(nnp.admits("NNP"));
  CHECK(nnp.admits("NNPS"));
  CHECK_FALSE(nnp.admits("NN"));
}

TEST_CASE("filter_topics with an alien tag set is empty") {
  const TaggedText ref = load_tagged(testutil::fixture("fixtures/phone/references/phone.1.tag"));
  const TopicTokens topics = filter_topics(ref, TopicFilter({"ZZ"}));
  CHECK(topics.count() == 0);
  CHECK(topics.unique_count() == 0);
}

TEST_CASE("enlarging the filter never shrinks the topic set") {
  const TaggedText sys2 = load_tagged(testutil::fixture("fixtures/phone/systems/phone_sys2.tag"));
  const TopicTokens narrow = filter_topics(sys2, TopicFilter({"NN"}));
  const TopicTokens wide = filter_topics(sys2, TopicFilter({"NN", "JJ"}));
  const TopicTokens wider = filter_topics(sys2, TopicFilter({"NN", "JJ", "VB"}));
  CHECK(narrow.count() <= wide.count());
  CHECK(wide.count() <= wider.count());
  for (const auto& word : narrow.unique) CHECK(wide.unique.contains(word));
  for (const auto& word : wide.unique) CHECK(wider.unique.contains(word));
}

TEST_CASE("lexicon loading validates format and normalizes entries") {
  const testutil::TempDir dir;
  const auto path = dir.write("lex.txt", "# words\nPhone\tnn\nbright\tJJ\n\nbright\tRB\n");
  const PosLexicon lexicon = load_lexicon(path);
  CHECK(lexicon.tag_of("phone") == "NN");
  CHECK(lexicon.tag_of("bright") == "RB");  // later duplicate wins
  CHECK(lexicon.tag_of("unknown") == "NN");  // default fallback

  CHECK_THROWS_WITH(load_lexicon(dir.write("bad.txt", "word NN\n")),
                    Catch::Matchers::ContainsSubstring(":1:"));
  CHECK_THROWS_AS(load_lexicon(dir.path() / "absent.txt"), std::runtime_error);

  const PosLexicon custom = load_lexicon(path, "XX");
  CHECK(custom.tag_of("unknown") == "XX");
}

TEST_CASE("the bundled lexicon reproduces the gold fixture tags exactly") {
  const PosLexicon lexicon = load_lexicon(testutil::fixture("fixtures/phone/lexicon.txt"));
  const struct {
    const char* plain;
    const char* tagged;
  } pairs[] = {
      {"fixtures/phone/systems/phone_sys1.txt", "fixtures/phone/systems/phone_sys1.tag"},
      {"fixtures/phone/systems/phone_sys2.txt", "fixtures/phone/systems/phone_sys2.tag"},
      {"fixtures/phone/references/phone.1.txt", "fixtures/phone/references/phone.1.tag"},
  };
  for (const auto& pair : pairs) {
    CAPTURE(pair.plain);
    const TaggedText via_lexicon = tag_with_lexicon(load_text(testutil::fixture(pair.plain)), lexicon);
    const TaggedText gold = load_tagged(testutil::fixture(pair.tagged));
    REQUIRE(via_lexicon.sentences.size() == gold.sentences.size());
    for (std::size_t s = 0; s < gold.sentences.size(); ++s) {
      REQUIRE(via_lexicon.sentences[s].size() == gold.sentences[s].size());
      for (std::size_t t = 0; t < gold.sentences[s].size(); ++t) {
        CAPTURE(s, t);
        REQUIRE(via_lexicon.sentences[s][t].token.normalized ==
                gold.sentences[s][t].token.normalized);
        REQUIRE(via_lexicon.sentences[s][t].pos == gold.sentences[s][t].pos);
      }
    }
  }
}

TEST_CASE("tagged stopword removal keeps tags and reindexes positions") {
  const TaggedText text = parse_tagged("The_DT phone_NN is_VBZ very_RB lightweight_JJ");
  const TaggedText removed = remove_stopwords(text, reference_stopwords());
  REQUIRE(removed.sentences.size() == 1);
  REQUIRE(removed.sentences[0].size() == 2);
  CHECK(removed.sentences[0][0].token.normalized == "phone");
  CHECK(removed.sentences[0][0].pos == "NN");
  CHECK(removed.sentences[0][0].token.position == 0);
  CHECK(removed.sentences[0][1].token.normalized == "lightweight");
  CHECK(removed.sentences[0][1].pos == "JJ");
  CHECK(removed.sentences[0][1].token.position == 1);
}
