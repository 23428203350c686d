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
#include <charconv>
#include <filesystem>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "rouge2/harness.hpp"
#include "rouge2/scoring.hpp"
#include "rouge2/synonym.hpp"
#include "rouge2/text.hpp"
#include "rouge2/topic.hpp"

namespace rouge2::cli {

/// Invalid command line. run() maps this to exit status 1 plus the usage
/// text on standard error.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MetricSpec {
  Measure measure = Measure::RougeN;
  std::size_t n = 1;

  bool operator==(const MetricSpec&) const = default;
};

struct CliConfig {
  std::filesystem::path systems_dir;
  std::filesystem::path references_dir;
  std::vector<MetricSpec> metrics;
  std::optional<TopicFilter> topic_filter;
  std::optional<std::filesystem::path> synonym_path;
  std::optional<std::filesystem::path> stopword_path;
  std::optional<std::filesystem::path> lexicon_path;
  std::optional<std::filesystem::path> output_path;
  bool remove_stopwords = false;
  std::string default_tag = "NN";
  Aggregation aggregation = Aggregation::Mean;
};

inline constexpr std::string_view kUsage =
    "usage: rouge2 --systems DIR --references DIR --metric SPEC [--metric SPEC ...]\n"
    "              [--pos LIST] [--synonyms FILE] [--stopwords FILE] [--remove-stopwords]\n"
    "              [--lexicon FILE] [--default-tag TAG] [--aggregate mean|max] [--output FILE]\n"
    "\n"
    "metric specs:\n"
    "  rouge1, rouge2        unigram / bigram overlap\n"
    "  rougeN:<n>            n-gram overlap for any n >= 1\n"
    "  topic                 topic-word overlap (requires --pos)\n"
    "  topicUniq             unique-topic-word overlap (requires --pos)\n"
    "\n"
    "options:\n"
    "  --systems DIR         system summaries, named <task>_<system>.{txt|tag}\n"
    "  --references DIR      reference summaries, named <task>.<k>.{txt|tag}\n"
    "  --metric SPEC         measure to compute; repeatable\n"
    "  --pos LIST            POS prefixes for topic measures, e.g. \"NN,JJ\" or \"NN|JJ\"\n"
    "  --synonyms FILE       synonym dictionary; enables synonym-aware matching\n"
    "  --stopwords FILE      stopword list; implies --remove-stopwords\n"
    "  --remove-stopwords    drop stopwords before scoring (bundled list if no --stopwords)\n"
    "  --lexicon FILE        word<TAB>TAG lexicon for tagging plain text in topic measures\n"
    "  --default-tag TAG     fallback tag for words missing from the lexicon (default: NN)\n"
    "  --aggregate MODE      multi-reference aggregation: mean (default) or max\n"
    "  --output FILE         write the CSV report to FILE instead of standard output\n";

namespace detail {

inline MetricSpec parse_metric_spec(const std::string& spec) {
  if (spec == "rouge1") return {Measure::RougeN, 1};
  if (spec == "rouge2") return {Measure::RougeN, 2};
  if (spec == "topic") return {Measure::RougeTopic, 1};
  if (spec == "topicUniq") return {Measure::RougeTopicUniq, 1};
  constexpr std::string_view kPrefix = "rougeN:";
  if (spec.starts_with(kPrefix)) {
    const std::string_view digits = std::string_view(spec).substr(kPrefix.size());
    std::size_t n = 0;
    const auto result = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (result.ec != std::errc{} || result.ptr != digits.data() + digits.size() || n < 1) {
      throw UsageError("invalid gram order in metric spec '" + spec + "'");
    }
    return {Measure::RougeN, n};
  }
  throw UsageError("unknown metric spec '" + spec +
                   "' (expected rouge1, rouge2, rougeN:<n>, topic or topicUniq)");
}

}  // namespace detail

/// Parses the complete flag surface. `args` excludes the program name.
/// Throws UsageError on any invalid command line; never crashes on input.
inline CliConfig parse_args(const std::vector<std::string>& args) {
  CLI::App app{"summary evaluation"};
  app.set_help_flag();  // usage text is printed by run(); no auto --help

  std::string systems;
  std::string references;
  std::vector<std::string> metric_specs;
  std::string pos_spec;
  std::string synonym_path;
  std::string stopword_path;
  std::string lexicon_path;
  std::string output_path;
  bool remove_stopwords = false;
  std::string default_tag = "NN";
  std::string aggregate_mode = "mean";

  app.add_option("--systems", systems)->required();
  app.add_option("--references", references)->required();
  app.add_option("--metric", metric_specs)->required();
  app.add_option("--pos", pos_spec);
  app.add_option("--synonyms", synonym_path);
  app.add_option("--stopwords", stopword_path);
  app.add_flag("--remove-stopwords", remove_stopwords);
  app.add_option("--lexicon", lexicon_path);
  app.add_option("--default-tag", default_tag);
  app.add_option("--aggregate", aggregate_mode)
      ->check(CLI::IsMember({"mean", "max"}));
  app.add_option("--output", output_path);

  try {
    // CLI11 consumes this overload back-to-front.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  CliConfig config;
  config.systems_dir = systems;
  config.references_dir = references;
  for (const std::string& spec : metric_specs) {
    config.metrics.push_back(detail::parse_metric_spec(spec));
  }
  if (!pos_spec.empty()) {
    try {
      config.topic_filter = TopicFilter::parse(pos_spec);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  for (const MetricSpec& metric : config.metrics) {
    if (metric.measure != Measure::RougeN && !config.topic_filter.has_value()) {
      throw UsageError("topic metrics require --pos (e.g. --pos NN,JJ)");
    }
  }
  if (!synonym_path.empty()) config.synonym_path = synonym_path;
  if (!stopword_path.empty()) config.stopword_path = stopword_path;
  if (!lexicon_path.empty()) config.lexicon_path = lexicon_path;
  if (!output_path.empty()) config.output_path = output_path;
  config.remove_stopwords = remove_stopwords || config.stopword_path.has_value();
  if (default_tag.empty()) throw UsageError("--default-tag must not be empty");
  config.default_tag = default_tag;
  config.aggregation = aggregate_mode == "max" ? Aggregation::Max : Aggregation::Mean;
  return config;
}

/// Full pipeline: parse flags, load resources, discover pairs, evaluate,
/// emit the report (to --output or `out`). Diagnostics go to `err` only.
/// Exit status: 0 success; 1 fatal configuration error; 2 completed with
/// per-task warnings or errors.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig config;
  try {
    config = parse_args(args);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << kUsage;
    return 1;
  }

  try {
    std::shared_ptr<const StopwordSet> stopwords;
    if (config.stopword_path.has_value()) {
      stopwords = std::make_shared<const StopwordSet>(load_stopwords(*config.stopword_path));
    } else if (config.remove_stopwords) {
      stopwords = std::make_shared<const StopwordSet>(reference_stopwords());
    }
    std::shared_ptr<const SynonymDictionary> synonyms;
    if (config.synonym_path.has_value()) {
      synonyms = std::make_shared<const SynonymDictionary>(load_dictionary(*config.synonym_path));
    }
    std::optional<PosLexicon> lexicon;
    if (config.lexicon_path.has_value()) {
      lexicon = load_lexicon(*config.lexicon_path, config.default_tag);
    }

    std::vector<ScoreOptions> score_configs;
    score_configs.reserve(config.metrics.size());
    for (const MetricSpec& metric : config.metrics) {
      ScoreOptions opts;
      opts.measure = metric.measure;
      opts.n = metric.n;
      if (metric.measure != Measure::RougeN) opts.topic_filter = config.topic_filter;
      opts.remove_stopwords = config.remove_stopwords;
      opts.stopwords = stopwords;
      opts.use_synonyms = synonyms != nullptr;
      opts.synonyms = synonyms;
      opts.validate();
      score_configs.push_back(std::move(opts));
    }

    DiscoveryResult discovered = discover_pairs(config.systems_dir, config.references_dir);
    const unsigned threads = std::clamp(std::thread::hardware_concurrency(), 1u, 8u);
    Report report = evaluate(discovered.tasks, score_configs, config.aggregation,
                             lexicon.has_value() ? &*lexicon : nullptr, threads);
    report.warnings.insert(report.warnings.begin(), discovered.warnings.begin(),
                           discovered.warnings.end());

    for (const std::string& warning : report.warnings) err << "warning: " << warning << "\n";
    for (const std::string& error : report.errors) err << "error: " << error << "\n";

    if (config.output_path.has_value()) {
      write_report(report, *config.output_path);
    } else {
      out << render_csv(report);
    }
    return report.clean() ? 0 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace rouge2::cli
