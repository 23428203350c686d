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

#include <atomic>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "rouge2/score.hpp"
#include "rouge2/scoring.hpp"
#include "rouge2/text.hpp"
#include "rouge2/topic.hpp"

namespace rouge2 {

/// One summary as found on disk. A summary may exist as plain text, as
/// pre-tagged text, or both (same basename with .txt and .tag extensions);
/// each measure picks its natural form.
struct Summary {
  std::optional<TokenizedText> plain;
  std::optional<TaggedText> tagged;

  bool operator==(const Summary&) const = default;
};

/// One system summary with all its references for one task.
struct EvaluationTask {
  std::string task_id;
  std::string system_id;
  Summary system;
  std::vector<Summary> references;
};

enum class Aggregation { Mean, Max };

inline std::string_view to_string(Aggregation mode) {
  return mode == Aggregation::Mean ? "mean" : "max";
}

/// One report line: a (task, system, measure configuration) triple with its
/// aggregated score. `per_reference` keeps the pre-aggregation detail; it
/// is not serialized to CSV.
struct ReportRow {
  std::string task_id;
  std::string system_id;
  std::string measure;
  std::string settings;
  std::size_t reference_count = 0;
  Aggregation aggregation = Aggregation::Mean;
  RougeScore score;
  std::vector<RougeScore> per_reference;
};

/// Full evaluation output. `warnings` records skipped tasks (e.g. a system
/// file with no references); `errors` records per-task scoring failures.
/// Both are diagnostics — only `rows` is report content.
struct Report {
  std::vector<ReportRow> rows;
  std::vector<std::string> warnings;
  std::vector<std::string> errors;

  bool clean() const { return warnings.empty() && errors.empty(); }
};

struct DiscoveryResult {
  std::vector<EvaluationTask> tasks;
  std::vector<std::string> warnings;
};

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

/// Loads one summary file into the right slot of `summary` by extension.
inline void load_into(Summary& summary, const std::filesystem::path& path) {
  if (path.extension() == ".txt") {
    summary.plain = load_text(path);
  } else {
    summary.tagged = load_tagged(path);
  }
}

}  // namespace detail

/// Scans the two directories for the evaluation layout
///   systems_dir/<task>_<system>.{txt|tag}
///   references_dir/<task>.<k>.{txt|tag}      (k >= 1)
/// and builds one EvaluationTask per (task, system) with all references of
/// that task, ordered by k. Task list ordering is lexicographic by task_id
/// then system_id regardless of directory enumeration order.
///
/// A .txt/.tag pair with the same basename is ONE summary with both forms.
/// Files with other extensions are ignored. A system with zero references
/// becomes a warning, not a task. Throws std::runtime_error on a missing
/// directory or a filename that does not follow the convention.
inline DiscoveryResult discover_pairs(const std::filesystem::path& systems_dir,
                                      const std::filesystem::path& references_dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(systems_dir)) {
    throw std::runtime_error("systems directory does not exist: " + systems_dir.string());
  }
  if (!fs::is_directory(references_dir)) {
    throw std::runtime_error("references directory does not exist: " +
                             references_dir.string());
  }

  // (task, system) -> summary, ordered for deterministic task output.
  std::map<std::pair<std::string, std::string>, Summary> systems;
  for (const fs::directory_entry& entry : fs::directory_iterator(systems_dir)) {
    if (!entry.is_regular_file()) continue;
    const fs::path& path = entry.path();
    const fs::path ext = path.extension();
    if (ext != ".txt" && ext != ".tag") continue;
    const std::string stem = path.stem().string();
    const std::size_t underscore = stem.rfind('_');
    if (underscore == std::string::npos || underscore == 0 || underscore + 1 == stem.size()) {
      throw std::runtime_error("system filename not of the form <task>_<system>.{txt|tag}: " +
                               path.string());
    }
    detail::load_into(
        systems[{stem.substr(0, underscore), stem.substr(underscore + 1)}], path);
  }

  // task -> (k -> summary), k ordered numerically.
  std::map<std::string, std::map<unsigned long, Summary>> references;
  for (const fs::directory_entry& entry : fs::directory_iterator(references_dir)) {
    if (!entry.is_regular_file()) continue;
    const fs::path& path = entry.path();
    const fs::path ext = path.extension();
    if (ext != ".txt" && ext != ".tag") continue;
    const std::string stem = path.stem().string();  // e.g. "phone.1"
    const std::size_t dot = stem.rfind('.');
    const std::string_view index_part =
        dot == std::string::npos ? std::string_view{} : std::string_view(stem).substr(dot + 1);
    if (dot == std::string::npos || dot == 0 || !detail::all_digits(index_part)) {
      throw std::runtime_error("reference filename not of the form <task>.<k>.{txt|tag}: " +
                               path.string());
    }
    unsigned long k = 0;
    std::from_chars(index_part.data(), index_part.data() + index_part.size(), k);
    if (k < 1) {
      throw std::runtime_error("reference index must be >= 1: " + path.string());
    }
    detail::load_into(references[stem.substr(0, dot)][k], path);
  }

  DiscoveryResult result;
  for (auto& [key, summary] : systems) {
    const auto& [task_id, system_id] = key;
    auto refs = references.find(task_id);
    if (refs == references.end() || refs->second.empty()) {
      result.warnings.push_back("system '" + task_id + "_" + system_id +
                                "' has no references in the references directory; skipped");
      continue;
    }
    EvaluationTask task;
    task.task_id = task_id;
    task.system_id = system_id;
    task.system = std::move(summary);
    for (auto& [k, ref] : refs->second) task.references.push_back(ref);
    result.tasks.push_back(std::move(task));
  }
  return result;
}

/// Combines per-reference scores of one system summary.
///   mean — arithmetic mean of recall and precision independently, F
///          recomputed from the aggregated values (averaging F directly
///          would break the harmonic-mean relation); counts are summed.
///   max  — the input score with the highest F, ties broken by highest
///          recall, then by earliest position.
inline RougeScore aggregate(std::span<const RougeScore> scores, Aggregation mode) {
  if (scores.empty()) {
    throw std::invalid_argument("aggregate: empty score list");
  }
  if (scores.size() == 1) return scores.front();

  if (mode == Aggregation::Max) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < scores.size(); ++i) {
      if (scores[i].f_score > scores[best].f_score ||
          (scores[i].f_score == scores[best].f_score &&
           scores[i].recall > scores[best].recall)) {
        best = i;
      }
    }
    return scores[best];
  }

  RougeScore out;
  double recall_sum = 0.0;
  double precision_sum = 0.0;
  for (const RougeScore& s : scores) {
    recall_sum += s.recall;
    precision_sum += s.precision;
    out.overlap += s.overlap;
    out.ref_size += s.ref_size;
    out.sys_size += s.sys_size;
  }
  out.recall = recall_sum / static_cast<double>(scores.size());
  out.precision = precision_sum / static_cast<double>(scores.size());
  out.f_score = f_score(out.precision, out.recall);
  return out;
}

namespace detail {

/// Resolves the plain-text form of a summary: .txt content if present,
/// otherwise the untagged projection of the .tag content.
inline const TokenizedText* plain_form(const Summary& summary, TokenizedText& storage) {
  if (summary.plain.has_value()) return &*summary.plain;
  if (summary.tagged.has_value()) {
    storage = summary.tagged->untagged();
    return &storage;
  }
  storage = TokenizedText{};
  return &storage;
}

/// Resolves the tagged form: .tag content if present, else the lexicon
/// tagger over the .txt content. Returns nullptr when tags are required
/// but unavailable.
inline const TaggedText* tagged_form(const Summary& summary, TaggedText& storage,
                                     const PosLexicon* tagger) {
  if (summary.tagged.has_value()) return &*summary.tagged;
  if (summary.plain.has_value()) {
    if (tagger == nullptr) return nullptr;
    storage = tag_with_lexicon(*summary.plain, *tagger);
    return &storage;
  }
  storage = TaggedText{};
  return &storage;
}

/// Scores one (task, config) cell: system against each reference, then
/// aggregated. Throws std::runtime_error with a task-level message when the
/// cell cannot be scored (e.g. tags required but absent).
inline ReportRow score_cell(const EvaluationTask& task, const ScoreOptions& opts,
                            Aggregation mode, const PosLexicon* tagger) {
  ReportRow row;
  row.task_id = task.task_id;
  row.system_id = task.system_id;
  row.measure = opts.measure_label();
  row.settings = opts.settings_label();
  row.reference_count = task.references.size();
  row.aggregation = mode;

  if (opts.measure == Measure::RougeN) {
    TokenizedText sys_storage;
    const TokenizedText* sys = plain_form(task.system, sys_storage);
    for (const Summary& reference : task.references) {
      TokenizedText ref_storage;
      const TokenizedText* ref = plain_form(reference, ref_storage);
      row.per_reference.push_back(score_rouge_n(*ref, *sys, opts.n, opts));
    }
  } else {
    auto require_tagged = [&](const Summary& summary, TaggedText& storage,
                              std::string_view side) -> const TaggedText* {
      const TaggedText* tagged = tagged_form(summary, storage, tagger);
      if (tagged == nullptr) {
        throw std::runtime_error("task '" + task.task_id + "' system '" + task.system_id +
                                 "': " + row.measure + " requires tagged input for the " +
                                 std::string(side) +
                                 " summary and no lexicon tagger is configured");
      }
      return tagged;
    };
    TaggedText sys_storage;
    const TaggedText* sys = require_tagged(task.system, sys_storage, "system");
    const TopicTokens sys_topics = topic_tokens_for(*sys, opts);
    for (const Summary& reference : task.references) {
      TaggedText ref_storage;
      const TaggedText* ref = require_tagged(reference, ref_storage, "reference");
      const TopicTokens ref_topics = topic_tokens_for(*ref, opts);
      row.per_reference.push_back(opts.measure == Measure::RougeTopic
                                      ? score_rouge_topic(ref_topics, sys_topics, opts)
                                      : score_rouge_topic_uniq(ref_topics, sys_topics, opts));
    }
  }

  row.score = aggregate(row.per_reference, mode);
  return row;
}

}  // namespace detail

/// Runs every configured measure over every task and assembles the report.
/// Cells are independent; with threads > 1 they are scored by a worker pool
/// over a fixed slot grid, so row order (task-major, then config order) and
/// report bytes never depend on scheduling. A cell that cannot be scored
/// becomes an entry in Report::errors and the run continues.
inline Report evaluate(const std::vector<EvaluationTask>& tasks,
                       const std::vector<ScoreOptions>& configs, Aggregation mode,
                       const PosLexicon* tagger = nullptr, unsigned threads = 1) {
  if (configs.empty()) {
    throw std::invalid_argument("evaluate: at least one measure configuration is required");
  }
  for (const ScoreOptions& opts : configs) opts.validate();

  struct Slot {
    std::optional<ReportRow> row;
    std::string error;
  };
  const std::size_t cell_count = tasks.size() * configs.size();
  std::vector<Slot> slots(cell_count);

  auto score_slot = [&](std::size_t index) {
    const EvaluationTask& task = tasks[index / configs.size()];
    const ScoreOptions& opts = configs[index % configs.size()];
    try {
      slots[index].row = detail::score_cell(task, opts, mode, tagger);
    } catch (const std::exception& e) {
      slots[index].error = e.what();
    }
  };

  if (threads <= 1 || cell_count <= 1) {
    for (std::size_t i = 0; i < cell_count; ++i) score_slot(i);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next.fetch_add(1); i < cell_count; i = next.fetch_add(1)) {
        score_slot(i);
      }
    };
    const unsigned worker_count =
        static_cast<unsigned>(std::min<std::size_t>(threads, cell_count));
    std::vector<std::thread> pool;
    pool.reserve(worker_count);
    for (unsigned t = 0; t < worker_count; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  Report report;
  report.rows.reserve(cell_count);
  for (Slot& slot : slots) {
    if (slot.row.has_value()) {
      report.rows.push_back(std::move(*slot.row));
    } else {
      report.errors.push_back(std::move(slot.error));
    }
  }
  return report;
}

namespace detail {

/// Three-decimal rendering, matching the published tables.
inline std::string format_fixed3(double value) {
  char buffer[32];
  const int written = std::snprintf(buffer, sizeof buffer, "%.3f", value);
  return std::string(buffer, static_cast<std::size_t>(written));
}

/// Shortest representation that round-trips the exact double.
inline std::string format_full(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, result.ptr);
}

inline std::string csv_field(std::string_view value) {
  if (value.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(value);
  }
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted.push_back('"');
    quoted.push_back(c);
  }
  quoted.push_back('"');
  return quoted;
}

}  // namespace detail

inline constexpr std::string_view kReportHeader =
    "task,system,measure,settings,references,aggregation,"
    "recall,precision,f_score,recall_full,precision_full,f_score_full";

/// Renders the report rows as CSV (header always present, UTF-8, LF line
/// endings). Identical reports render to identical bytes.
inline std::string render_csv(const Report& report) {
  std::string out(kReportHeader);
  out.push_back('\n');
  for (const ReportRow& row : report.rows) {
    out += detail::csv_field(row.task_id);
    out.push_back(',');
    out += detail::csv_field(row.system_id);
    out.push_back(',');
    out += detail::csv_field(row.measure);
    out.push_back(',');
    out += detail::csv_field(row.settings);
    out.push_back(',');
    out += std::to_string(row.reference_count);
    out.push_back(',');
    out += to_string(row.aggregation);
    out.push_back(',');
    out += detail::format_fixed3(row.score.recall);
    out.push_back(',');
    out += detail::format_fixed3(row.score.precision);
    out.push_back(',');
    out += detail::format_fixed3(row.score.f_score);
    out.push_back(',');
    out += detail::format_full(row.score.recall);
    out.push_back(',');
    out += detail::format_full(row.score.precision);
    out.push_back(',');
    out += detail::format_full(row.score.f_score);
    out.push_back('\n');
  }
  return out;
}

/// Writes the CSV to `path`. Throws std::runtime_error on I/O failure.
inline void write_report(const Report& report, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open report file for writing: " + path.string());
  }
  const std::string csv = render_csv(report);
  out.write(csv.data(), static_cast<std::streamsize>(csv.size()));
  if (!out) {
    throw std::runtime_error("failed to write report file: " + path.string());
  }
}

}  // namespace rouge2
