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

#include <istream>
#include <ostream>
#include <set>

#include "rls/errors.hpp"
#include "rls/ingest.hpp"

namespace rls {
namespace {

std::string string_field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_string()) {
    throw Error(ErrorCode::InvalidArgument, std::string("record needs string field '") + key + "'");
  }
  return j.at(key).get<std::string>();
}

template <typename F>
void for_each_json_line(std::istream& in, F&& f) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (collapse_whitespace(line).empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorCode::InvalidArgument,
                  "line " + std::to_string(lineno) + ": invalid JSON: " + e.what());
    }
    f(j, lineno);
  }
}

}  // namespace

std::string_view to_string(SentenceRole role) {
  switch (role) {
    case SentenceRole::Fact: return "fact";
    case SentenceRole::Rule: return "rule";
    case SentenceRole::Query: return "query";
  }
  return "fact";
}

SentenceRole parse_role(std::string_view text) {
  if (text == "fact") return SentenceRole::Fact;
  if (text == "rule") return SentenceRole::Rule;
  if (text == "query") return SentenceRole::Query;
  throw Error(ErrorCode::InvalidArgument, "unknown sentence role '" + std::string(text) + "'");
}

nlohmann::json to_json(const SentenceRecord& r) {
  nlohmann::json j{{"id", r.id}, {"text", r.text}, {"role", std::string(to_string(r.role))}};
  if (r.gold) j["gold"] = *r.gold;
  return j;
}

SentenceRecord sentence_from_json(const nlohmann::json& j) {
  SentenceRecord r;
  r.id = string_field(j, "id");
  if (r.id.empty()) throw Error(ErrorCode::InvalidArgument, "empty sentence id");
  r.text = string_field(j, "text");
  r.role = j.contains("role") ? parse_role(string_field(j, "role")) : SentenceRole::Fact;
  if (j.contains("gold") && !j.at("gold").is_null()) {
    r.gold = string_field(j, "gold");
    decode(*r.gold);
  }
  return r;
}

std::vector<SentenceRecord> read_sentences_jsonl(std::istream& in) {
  std::vector<SentenceRecord> out;
  for_each_json_line(in, [&](const nlohmann::json& j, int) { out.push_back(sentence_from_json(j)); });
  return out;
}

void write_sentences_jsonl(std::ostream& out, const std::vector<SentenceRecord>& records) {
  for (const auto& r : records) out << to_json(r).dump() << '\n';
}

PredictionMap load_predictions(const std::vector<PredictionRecord>& records) {
  PredictionMap out;
  for (const auto& r : records) {
    if (!out.emplace(r.id, try_decode(r.predicted)).second) {
      throw Error(ErrorCode::DuplicateId, "duplicate prediction id " + r.id);
    }
  }
  return out;
}

PredictionMap load_predictions(std::istream& in) {
  std::vector<PredictionRecord> records;
  for_each_json_line(in, [&](const nlohmann::json& j, int) {
    records.push_back({string_field(j, "id"), string_field(j, "predicted")});
  });
  return load_predictions(records);
}

void write_predictions_jsonl(std::ostream& out, const std::vector<PredictionRecord>& records) {
  for (const auto& r : records) {
    out << nlohmann::json{{"id", r.id}, {"predicted", r.predicted}}.dump() << '\n';
  }
}

Formula resolve_formula(const SentenceRecord& record, const FormulaSource& source) {
  switch (source.kind) {
    case FormulaSource::Kind::Gold:
      if (!record.gold) {
        throw Error(ErrorCode::InvalidArgument, "sentence " + record.id + " has no gold formula");
      }
      return decode(*record.gold);
    case FormulaSource::Kind::Template:
      return extract_templated(record.text, source.grammar ? *source.grammar
                                                           : TemplateGrammar::builtin());
    case FormulaSource::Kind::Predictions: {
      if (!source.predictions) throw Error(ErrorCode::InvalidArgument, "no predictions loaded");
      auto it = source.predictions->find(record.id);
      if (it == source.predictions->end()) {
        throw Error(ErrorCode::MissingPrediction, "no prediction for sentence " + record.id);
      }
      if (auto* bad = std::get_if<MalformedSequence>(&it->second)) throw *bad;
      return std::get<Formula>(it->second);
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown formula source");
}

Theory theory_from_sentences(const std::vector<SentenceRecord>& records,
                             const FormulaSource& source) {
  std::vector<Fact> facts;
  std::vector<Rule> rules;
  std::map<std::string, std::string> provenance;
  std::vector<UnresolvedSentence::Failure> failures;
  const VariableSet vars;

  for (const auto& r : records) {
    if (r.role == SentenceRole::Query) continue;
    try {
      Formula f = resolve_formula(r, source);
      if (r.role == SentenceRole::Fact) {
        auto* c = std::get_if<Conjunction>(&f);
        if (!c) throw Error(ErrorCode::InvalidArgument, "fact sentence yielded a rule");
        for (const auto& l : c->literals) {
          if (!is_ground(l, vars)) throw Error(ErrorCode::InvalidLiteral, "fact is not ground");
        }
        for (std::size_t k = 0; k < c->literals.size(); ++k) {
          std::string id = c->literals.size() == 1 ? r.id : r.id + "." + std::to_string(k + 1);
          facts.push_back({id, c->literals[k]});
          provenance[id] = r.id;
        }
      } else {
        auto* rf = std::get_if<RuleFormula>(&f);
        if (!rf) throw Error(ErrorCode::InvalidArgument, "rule sentence yielded a conjunction");
        Rule rule{r.id, rf->antecedents, rf->consequent};
        validate_rule(rule, vars);
        rules.push_back(std::move(rule));
        provenance[r.id] = r.id;
      }
    } catch (const MalformedSequence& e) {
      failures.push_back({r.id, e.what()});
    } catch (const Error& e) {
      failures.push_back({r.id, e.what()});
    }
  }
  if (!failures.empty()) throw UnresolvedSentence(std::move(failures));
  return Theory(std::move(facts), std::move(rules), std::move(provenance));
}

}  // namespace rls
