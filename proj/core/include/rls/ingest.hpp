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

#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "rls/codec.hpp"
#include "rls/theory.hpp"

namespace rls {

// ---------------------------------------------------------------------------
// Dataset annotation converters

/// Quoted-tuple annotations:
///   ("Harry" "is" "young" "+") ("Harry" "is" "nice" "+")
///   ("someone" "is" "nice" "+") -> ("someone" "is" "round" "+")
///   (("someone" "is" "big" "+") ("someone" "is" "red" "+")) -> (...)
/// Tuples whose relation is "is" become attribute literals.
Formula convert_ruletaker(std::string_view annotation);

enum class Gender { Female, Male };

/// Gendered inverses of kinship relations, read from a TSV data file.
class InverseTable {
 public:
  static const InverseTable& builtin();
  static InverseTable parse(std::string_view tsv);
  static InverseTable load(const std::string& path);

  /// Inverse of `relation` when the literal's first person has `gender`.
  std::optional<std::string> inverse(const std::string& relation, Gender gender) const;

 private:
  std::map<std::string, std::pair<std::string, std::string>> entries_;
};

/// For every edge (A, B) typed r emits (A, r, B) followed by its gendered
/// inverse (B, r', A).
Formula convert_clutrr(const std::vector<std::pair<std::string, std::string>>& edges,
                       const std::vector<std::string>& edge_types,
                       const std::map<std::string, Gender>& genders,
                       const InverseTable& table = InverseTable::builtin());

struct ClutrrRecord {
  std::string story_id;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> edge_types;
  std::map<std::string, Gender> genders;
};

/// CSV with a header naming (at least) the edges, edge_types and genders
/// columns, plus an id column ("story_id" or "id"). Cells may use the
/// bracketed forms of the dataset metadata, e.g. [("Sol", "Kent")],
/// ["son"], {"Sol": female, "Kent": male}.
std::vector<ClutrrRecord> load_clutrr_csv(std::istream& in);

/// Predicate name to phrase mapping for commonsense triples.
class PredicateMap {
 public:
  static const PredicateMap& builtin();
  static PredicateMap parse(std::string_view tsv);
  static PredicateMap load(const std::string& path);

  /// Listed phrase, else "/r/CapableOf" -> "capable of".
  std::string phrase(std::string_view predicate) const;

 private:
  std::map<std::string, std::string, std::less<>> entries_;
};

/// {"subject", "predicate", "object", "validity"} with validity "always true"
/// or "never true".
Formula convert_lot(const nlohmann::json& record,
                    const PredicateMap& predicates = PredicateMap::builtin());

// ---------------------------------------------------------------------------
// Templated extraction

struct TemplateMatch {
  Formula formula;
  std::string template_name;
};

/// Ordered sentence and clause patterns loaded from a grammar file (see
/// data/templates.txt for the format).
class TemplateGrammar {
 public:
  static const TemplateGrammar& builtin();
  static TemplateGrammar parse(std::string_view text);
  static TemplateGrammar load(const std::string& path);

  /// Throws Error(NoTemplateMatch) when no pattern yields a valid formula.
  TemplateMatch extract(std::string_view sentence) const;

  TemplateGrammar(TemplateGrammar&&) noexcept;
  TemplateGrammar& operator=(TemplateGrammar&&) noexcept;
  ~TemplateGrammar();

 private:
  struct Impl;
  explicit TemplateGrammar(std::unique_ptr<Impl> impl);
  std::unique_ptr<Impl> impl_;
};

Formula extract_templated(std::string_view sentence,
                          const TemplateGrammar& grammar = TemplateGrammar::builtin());

/// "chase" -> "chases", "carry" -> "carries", "push" -> "pushes".
std::string third_person(std::string_view verb);
/// Inverse of third_person for regular verbs.
std::string base_form(std::string_view verb);

// ---------------------------------------------------------------------------
// Sentence and prediction files

enum class SentenceRole { Fact, Rule, Query };

std::string_view to_string(SentenceRole role);
SentenceRole parse_role(std::string_view text);

struct SentenceRecord {
  std::string id;
  std::string text;
  SentenceRole role = SentenceRole::Fact;
  std::optional<std::string> gold;  // encoded sequence
};

nlohmann::json to_json(const SentenceRecord& r);
/// Throws Error(InvalidArgument) on schema violations and
/// MalformedSequence when `gold` does not decode.
SentenceRecord sentence_from_json(const nlohmann::json& j);

/// One JSON object per line; blank lines are skipped.
std::vector<SentenceRecord> read_sentences_jsonl(std::istream& in);
void write_sentences_jsonl(std::ostream& out, const std::vector<SentenceRecord>& records);

struct PredictionRecord {
  std::string id;
  std::string predicted;
};

using PredictionMap = std::map<std::string, DecodeResult>;

/// {"id", "predicted"} per line. Malformed sequences are kept as errors;
/// throws Error(DuplicateId) when an id repeats.
PredictionMap load_predictions(std::istream& in);
PredictionMap load_predictions(const std::vector<PredictionRecord>& records);
void write_predictions_jsonl(std::ostream& out, const std::vector<PredictionRecord>& records);

// ---------------------------------------------------------------------------
// Theory assembly

/// Where each sentence's formula comes from.
struct FormulaSource {
  enum class Kind { Gold, Template, Predictions };

  Kind kind = Kind::Gold;
  const PredictionMap* predictions = nullptr;
  const TemplateGrammar* grammar = nullptr;

  static FormulaSource gold() { return {}; }
  static FormulaSource templates(const TemplateGrammar& g = TemplateGrammar::builtin()) {
    return {Kind::Template, nullptr, &g};
  }
  static FormulaSource from_predictions(const PredictionMap& p) {
    return {Kind::Predictions, &p, nullptr};
  }
};

/// The formula for one record; throws (MalformedSequence, NoTemplateMatch,
/// MissingPrediction, ...) when it cannot be produced.
Formula resolve_formula(const SentenceRecord& record, const FormulaSource& source);

/// Fact sentences expand to one fact per conjunct (ids "<sid>" for a single
/// literal, "<sid>.<k>" otherwise); rule sentences become one rule with the
/// sentence id. Query records are ignored. Throws UnresolvedSentence listing
/// every record that could not be turned into theory items.
Theory theory_from_sentences(const std::vector<SentenceRecord>& records,
                             const FormulaSource& source);

}  // namespace rls
