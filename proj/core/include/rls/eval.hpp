// Copyright 2026 The RLS Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rls/generator.hpp"
#include "rls/ingest.hpp"
#include "rls/reasoner.hpp"

namespace rls {

inline constexpr std::string_view kReportSchema = "rls.eval_report/v1";

struct DepthStats {
  int count = 0;
  int correct = 0;
  double accuracy() const { return count ? static_cast<double>(correct) / count : 0.0; }
  friend bool operator==(const DepthStats&, const DepthStats&) = default;
};

struct EvalFailure {
  std::string id;
  std::string expected;
  std::string got;
  friend bool operator==(const EvalFailure&, const EvalFailure&) = default;
};

struct EvalReport {
  std::map<int, DepthStats> per_depth;
  /// Exact-match counts over extracted formulas, when measured.
  std::optional<DepthStats> em;
  int malformed_count = 0;
  std::vector<EvalFailure> failures;

  /// Sum over depths.
  DepthStats overall() const;
  std::optional<double> em_accuracy() const {
    return em ? std::optional<double>(em->accuracy()) : std::nullopt;
  }
  friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

/// Canonical encodings compared per gold id; malformed predictions count as
/// mismatches and in malformed_count. Throws Error(MissingPrediction) when a
/// gold id has no prediction.
EvalReport eval_em(const PredictionMap& predictions, const std::map<std::string, Formula>& golds);

/// EM of the formulas `source` yields for every record that carries gold.
/// Records the source cannot produce count as mismatches; malformed
/// predictions also count in malformed_count.
EvalReport eval_extraction(const std::vector<SentenceRecord>& records, const FormulaSource& source);

struct EvalConfig {
  FormulaSource source;
  ReasonerConfig reasoner;
  /// 0 picks the hardware concurrency.
  unsigned workers = 0;
};

/// Builds every instance's theory from the configured source and answers its
/// query. Instances that fail to build or evaluate count as wrong and are
/// listed in `failures`. With a predictions source, malformed_count counts
/// the malformed predictions among the sentences the dataset references.
EvalReport eval_answers(const std::vector<QAInstance>& dataset, const EvalConfig& config);

/// Dataset lines: {"id", "sentences": [...], "query": {...}, "label", "depth"}.
nlohmann::json to_json(const QAInstance& inst);
QAInstance instance_from_json(const nlohmann::json& j);
std::vector<QAInstance> read_dataset_jsonl(std::istream& in);
void write_dataset_jsonl(std::ostream& out, const std::vector<QAInstance>& dataset);

/// Versioned JSON; accuracies are written alongside the counts.
nlohmann::json to_json(const EvalReport& r);
/// Throws Error(InvalidArgument) on an unknown schema or bad shape.
EvalReport report_from_json(const nlohmann::json& j);

/// Table with rows 0..5 (and any deeper depth present) plus "All", columns
/// D, #qns, #correct, Accuracy; then EM and malformed lines and failures.
std::string render_markdown(const EvalReport& r);
/// Reads back the counts written by render_markdown.
EvalReport report_from_markdown(std::string_view text);

}  // namespace rls
