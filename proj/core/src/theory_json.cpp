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

#include "rls/theory_json.hpp"

#include <algorithm>
#include <fstream>

#include "rls/errors.hpp"

namespace rls {
namespace {

using nlohmann::json;

std::string required_string(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_string()) {
    throw Error(ErrorCode::InvalidTheory,
                std::string("missing string field '") + key + "'");
  }
  return j.at(key).get<std::string>();
}

void write_literal_fields(const Literal& l, json& out) {
  out["a"] = l.a.text();
  out["pred"] = l.pred.text();
  out["b"] = l.b.text();
  out["kind"] = l.kind == LiteralKind::Attribute ? "attr" : "rel";
  out["polarity"] = l.positive() ? "+" : "-";
}

}  // namespace

json to_json(const Literal& l) {
  json out = json::object();
  write_literal_fields(l, out);
  return out;
}

Literal literal_from_json(const json& j) {
  auto kind = required_string(j, "kind");
  auto polarity = required_string(j, "polarity");
  if (kind != "attr" && kind != "rel") {
    throw Error(ErrorCode::InvalidTheory, "kind must be \"attr\" or \"rel\"");
  }
  if (polarity != "+" && polarity != "-") {
    throw Error(ErrorCode::InvalidTheory, "polarity must be \"+\" or \"-\"");
  }
  return {kind == "attr" ? LiteralKind::Attribute : LiteralKind::Relation,
          Term(required_string(j, "a")), Term(required_string(j, "pred")),
          Term(required_string(j, "b")),
          polarity == "+" ? Polarity::Positive : Polarity::Negative};
}

json to_json(const Theory& t) {
  std::vector<const Fact*> facts;
  for (const auto& f : t.facts()) facts.push_back(&f);
  std::sort(facts.begin(), facts.end(),
            [](const Fact* x, const Fact* y) { return x->id < y->id; });
  std::vector<const Rule*> rules;
  for (const auto& r : t.rules()) rules.push_back(&r);
  std::sort(rules.begin(), rules.end(),
            [](const Rule* x, const Rule* y) { return x->id < y->id; });

  json out = {{"facts", json::array()}, {"rules", json::array()}};
  for (const Fact* f : facts) {
    json jf = {{"id", f->id}};
    write_literal_fields(f->literal, jf);
    if (auto src = t.source_of(f->id)) jf["source"] = *src;
    out["facts"].push_back(std::move(jf));
  }
  for (const Rule* r : rules) {
    json jr = {{"id", r->id}, {"antecedents", json::array()}};
    for (const auto& l : r->antecedents) jr["antecedents"].push_back(to_json(l));
    jr["consequent"] = to_json(r->consequent);
    if (auto src = t.source_of(r->id)) jr["source"] = *src;
    out["rules"].push_back(std::move(jr));
  }
  if (t.variables() != VariableSet()) out["variables"] = t.variables().tokens();
  return out;
}

Theory theory_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidTheory, "theory must be an object");
  std::vector<Fact> facts;
  std::vector<Rule> rules;
  std::map<std::string, std::string> provenance;
  auto array_field = [&](const char* key) {
    if (!j.contains(key)) return json::array();
    if (!j.at(key).is_array()) {
      throw Error(ErrorCode::InvalidTheory, std::string("'") + key + "' must be an array");
    }
    return j.at(key);
  };
  for (const auto& jf : array_field("facts")) {
    auto id = required_string(jf, "id");
    facts.push_back({id, literal_from_json(jf)});
    if (jf.contains("source")) provenance[id] = required_string(jf, "source");
  }
  for (const auto& jr : array_field("rules")) {
    auto id = required_string(jr, "id");
    if (!jr.contains("antecedents") || !jr.at("antecedents").is_array()) {
      throw Error(ErrorCode::InvalidTheory, "rule " + id + " lacks antecedents");
    }
    if (!jr.contains("consequent")) {
      throw Error(ErrorCode::InvalidTheory, "rule " + id + " lacks a consequent");
    }
    std::vector<Literal> antecedents;
    for (const auto& jl : jr.at("antecedents")) {
      antecedents.push_back(literal_from_json(jl));
    }
    rules.push_back({id, std::move(antecedents), literal_from_json(jr.at("consequent"))});
    if (jr.contains("source")) provenance[id] = required_string(jr, "source");
  }
  VariableSet vars;
  if (j.contains("variables")) {
    vars = VariableSet(j.at("variables").get<std::vector<std::string>>());
  }
  return Theory(std::move(facts), std::move(rules), std::move(provenance),
                std::move(vars));
}

Theory load_theory_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidTheory, path + ": " + e.what());
  }
  return theory_from_json(j);
}

void save_theory_file(const Theory& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
  out << to_json(t).dump(2) << '\n';
}

}  // namespace rls
