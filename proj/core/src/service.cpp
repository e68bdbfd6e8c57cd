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

#include "rls/service.hpp"

#include <algorithm>
#include <mutex>

#include "rls/codec.hpp"
#include "rls/errors.hpp"
#include "rls/ingest.hpp"
#include "rls/theory_json.hpp"

namespace rls {
namespace {

using nlohmann::json;

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::InvalidArgument, std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::string string_field(const json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_string()) throw Error(ErrorCode::InvalidArgument, std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

Literal literal_field(const json& j, const char* key) {
  const auto& v = field(j, key);
  if (v.is_object()) return literal_from_json(v);
  if (!v.is_string()) throw Error(ErrorCode::InvalidArgument, std::string("'") + key + "' must be a string");
  return decode_literal(v.get<std::string>());
}

RuleFormula rule_field(const json& j) {
  auto f = decode(string_field(j, "rule"));
  auto* r = std::get_if<RuleFormula>(&f);
  if (!r) throw Error(ErrorCode::InvalidArgument, "'rule' must encode a rule");
  return *r;
}

std::optional<std::string> optional_string(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return string_field(j, key);
}

json literal_view(const Literal& l) {
  json out = to_json(l);
  out["encoded"] = encode(l);
  out["text"] = to_string(l);
  return out;
}

json unification_list(const std::vector<UnificationRecord>& records) {
  json out = json::array();
  for (const auto& r : records) out.push_back(to_json(r));
  return out;
}

void collect_unifications(const ProofNode& n, std::vector<UnificationRecord>& out) {
  for (const auto& u : n.unifications) {
    if (std::find(out.begin(), out.end(), u) == out.end()) out.push_back(u);
  }
  for (const auto& c : n.children) collect_unifications(c, out);
}

json answer_view(const Answer& a) {
  std::vector<UnificationRecord> used;
  if (a.query_unification) used.push_back(*a.query_unification);
  collect_unifications(a.proof.root, used);
  json out = {{"truth", a.truth},
              {"cwa", !a.truth && a.proof.root.kind == ProofKind::Naf},
              {"truncated", a.truncated},
              {"depth", a.proof.root.depth},
              {"proof", to_json(a.proof)},
              {"rendered", render_proof(a.proof)},
              {"query_unification", a.query_unification ? to_json(*a.query_unification) : json(nullptr)},
              {"unifications", unification_list(used)}};
  return out;
}

json delta_view(const Delta& d) {
  auto list = [](const std::vector<Implication>& v) {
    json out = json::array();
    for (const auto& i : v) {
      json e = literal_view(i.literal);
      e["depth"] = i.depth;
      out.push_back(std::move(e));
    }
    return out;
  };
  return {{"added", list(d.added)}, {"removed", list(d.removed)}};
}

std::vector<Edit> edits_field(const json& body) {
  const auto& list = field(body, "edits");
  if (!list.is_array()) throw Error(ErrorCode::InvalidArgument, "'edits' must be an array");
  std::vector<Edit> out;
  for (const auto& e : list) out.push_back(edit_from_json(e));
  return out;
}

ReasonerConfig config_for(const json& body, ReasonerConfig cfg) {
  if (body.is_object() && body.contains("unifier")) cfg.unifier = UnifierChoice::parse(string_field(body, "unifier"));
  if (body.is_object() && body.contains("max_depth")) {
    if (!body.at("max_depth").is_number_integer() || body.at("max_depth").get<int>() < 0) {
      throw Error(ErrorCode::InvalidArgument, "'max_depth' must be a nonnegative integer");
    }
    cfg.max_depth = body.at("max_depth").get<int>();
  }
  return cfg;
}

json error_body(const std::string& code, const std::string& message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

// Closure records for views that are not tied to one query. A theory that
// cannot be stratified still has a view; its records are simply empty.
json closure_unifications(const Theory& t, const ReasonerConfig& cfg) {
  try {
    return unification_list(closure(t, cfg).unifications_used);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotStratified) throw;
    return json::array();
  }
}

}  // namespace

Edit edit_from_json(const json& j) {
  const std::string op = string_field(j, "op");
  const std::string id = string_field(j, "id");
  if (op == "add_fact") return AddFact{{id, literal_field(j, "literal")}, optional_string(j, "source")};
  if (op == "remove_fact") return RemoveFact{id};
  if (op == "replace_fact") return ReplaceFact{id, literal_field(j, "literal")};
  if (op == "add_rule") {
    auto r = rule_field(j);
    return AddRule{{id, r.antecedents, r.consequent}, optional_string(j, "source")};
  }
  if (op == "remove_rule") return RemoveRule{id};
  if (op == "replace_rule") {
    auto r = rule_field(j);
    return ReplaceRule{id, r.antecedents, r.consequent};
  }
  throw Error(ErrorCode::InvalidArgument, "unknown edit op '" + op + "'");
}

Service::Service(Theory theory, ReasonerConfig config)
    : theory_(std::move(theory)), config_(std::move(config)) {}

Theory Service::theory() const {
  std::shared_lock lock(mutex_);
  return theory_;
}

json Service::theory_view() const {
  json t = to_json(theory_);
  for (auto& f : t["facts"]) f["encoded"] = encode(literal_from_json(f));
  for (auto& r : t["rules"]) {
    RuleFormula rf{{}, literal_from_json(r["consequent"])};
    for (const auto& a : r["antecedents"]) rf.antecedents.push_back(literal_from_json(a));
    r["encoded"] = encode(Formula{rf});
  }
  return {{"theory", std::move(t)}, {"sentences", sentences_}};
}

ServiceReply Service::handle(const std::string& method, const std::string& path,
                             const std::string& body) {
  try {
    json parsed;
    if (method == "POST") {
      try {
        parsed = body.empty() ? json::object() : json::parse(body);
      } catch (const json::parse_error& e) {
        return {400, error_body("InvalidJson", e.what())};
      }
      if (!parsed.is_object()) return {400, error_body("InvalidJson", "body must be a JSON object")};
    }
    return dispatch(method, path, parsed);
  } catch (const MalformedSequence& e) {
    json b = error_body("MalformedSequence", e.what());
    b["error"]["position"] = e.position();
    b["error"]["reason"] = e.reason();
    return {400, b};
  } catch (const UnresolvedSentence& e) {
    json b = error_body("UnresolvedSentence", e.what());
    b["error"]["failures"] = json::array();
    for (const auto& f : e.failures()) b["error"]["failures"].push_back({{"id", f.id}, {"reason", f.reason}});
    return {400, b};
  } catch (const Error& e) {
    int status = e.code() == ErrorCode::NotStratified ? 422 : 400;
    return {status, error_body(std::string(to_string(e.code())), e.what())};
  } catch (const json::exception& e) {
    return {400, error_body("InvalidArgument", e.what())};
  }
}

ServiceReply Service::dispatch(const std::string& method, const std::string& path, const json& body) {
  auto route = [&](const char* m, const char* p) { return method == m && path == p; };

  if (route("GET", "/theory")) {
    std::shared_lock lock(mutex_);
    json out = theory_view();
    out["unifications"] = closure_unifications(theory_, config_);
    return {200, out};
  }
  if (route("POST", "/theory")) {
    Theory next;
    std::map<std::string, std::string> texts;
    if (body.contains("theory")) {
      next = theory_from_json(body.at("theory"));
    } else if (body.contains("sentences") || body.contains("encoded")) {
      std::vector<SentenceRecord> records;
      FormulaSource source = FormulaSource::gold();
      if (body.contains("sentences")) {
        if (!body.at("sentences").is_array()) throw Error(ErrorCode::InvalidArgument, "'sentences' must be an array");
        for (const auto& s : body.at("sentences")) records.push_back(sentence_from_json(s));
        auto src = body.value("source", std::string("gold"));
        if (src == "template") {
          source = FormulaSource::templates();
        } else if (src != "gold") {
          throw Error(ErrorCode::InvalidArgument, "source must be gold or template");
        }
      } else {
        const auto& list = body.at("encoded");
        if (!list.is_array()) throw Error(ErrorCode::InvalidArgument, "'encoded' must be an array");
        int k = 0;
        for (const auto& e : list) {
          if (!e.is_string()) throw Error(ErrorCode::InvalidArgument, "encoded items must be strings");
          auto f = decode(e.get<std::string>());
          auto role = std::holds_alternative<RuleFormula>(f) ? SentenceRole::Rule : SentenceRole::Fact;
          records.push_back({"s" + std::to_string(++k), e.get<std::string>(), role, e.get<std::string>()});
        }
      }
      next = theory_from_sentences(records, source);
      for (const auto& r : records) texts[r.id] = r.text;
    } else {
      throw Error(ErrorCode::InvalidArgument, "expected 'theory', 'sentences' or 'encoded'");
    }
    std::unique_lock lock(mutex_);
    theory_ = std::move(next);
    sentences_ = std::move(texts);
    json out = theory_view();
    out["unifications"] = closure_unifications(theory_, config_);
    return {200, out};
  }
  if (route("POST", "/edit")) {
    auto edits = edits_field(body);
    std::unique_lock lock(mutex_);
    Theory next = apply_edits(theory_, edits);
    auto before = enumerate_implications(theory_, config_);
    auto after = enumerate_implications(next, config_);
    theory_ = std::move(next);
    json out = theory_view();
    out["delta"] = delta_view(implication_delta(before, after));
    out["unifications"] = closure_unifications(theory_, config_);
    return {200, out};
  }
  if (route("POST", "/query")) {
    Literal q = literal_field(body, "query");
    auto cfg = config_for(body, config_);
    std::shared_lock lock(mutex_);
    return {200, answer_view(answer(theory_, q, cfg))};
  }
  if (route("POST", "/whatif")) {
    auto edits = edits_field(body);
    Literal q = literal_field(body, "query");
    auto cfg = config_for(body, config_);
    std::shared_lock lock(mutex_);
    auto r = what_if(theory_, edits, q, cfg);
    json out = answer_view(r.answer);
    out["delta"] = delta_view(r.delta);
    return {200, out};
  }
  if (route("GET", "/implications")) {
    std::shared_lock lock(mutex_);
    auto c = closure(theory_, config_);
    json list = json::array();
    for (const auto& i : enumerate_implications(theory_, config_)) {
      json e = literal_view(i.literal);
      e["depth"] = i.depth;
      list.push_back(std::move(e));
    }
    return {200, {{"implications", list}, {"unifications", unification_list(c.unifications_used)}}};
  }
  if (route("GET", "/contradictions")) {
    std::shared_lock lock(mutex_);
    auto c = closure(theory_, config_);
    json list = json::array();
    for (const auto& [p, n] : c.contradictions) {
      list.push_back({{"positive", literal_view(p)}, {"negative", literal_view(n)}});
    }
    return {200, {{"contradictions", list}, {"unifications", unification_list(c.unifications_used)}}};
  }
  if (route("POST", "/abduce")) {
    Literal q = literal_field(body, "query");
    int max_size = body.value("max_size", 2);
    if (max_size < 1) throw Error(ErrorCode::InvalidArgument, "'max_size' must be positive");
    auto cfg = config_for(body, config_);
    std::shared_lock lock(mutex_);
    json sets = json::array();
    for (const auto& set : abduce(theory_, q, static_cast<std::size_t>(max_size), cfg)) {
      json s = json::array();
      for (const auto& l : set) s.push_back(literal_view(l));
      sets.push_back(std::move(s));
    }
    return {200, {{"sets", sets}, {"unifications", closure_unifications(theory_, cfg)}}};
  }
  return {404, error_body("NotFound", "no route " + method + " " + path)};
}

}  // namespace rls
