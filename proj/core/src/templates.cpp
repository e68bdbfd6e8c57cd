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

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <regex>
#include <sstream>

#include "rls/errors.hpp"
#include "rls/ingest.hpp"
#include "rls_data.hpp"

namespace rls {
namespace {

enum class SentenceAction { Facts, Rule, Generic };
enum class ClauseAction { Attr, Rel, More };

struct Pattern {
  std::string name;
  std::string action;
  std::map<std::string, std::string> params;  // key -> group index or option
  std::regex re;

  int group(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end()) return 0;
    return std::stoi(it->second);
  }
  std::string option(const std::string& key) const {
    auto it = params.find(key);
    return it == params.end() ? std::string() : it->second;
  }
};

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool is_pronoun(std::string_view w) {
  auto l = lower(w);
  return l == "they" || l == "it" || l == "he" || l == "she" || l == "them";
}

// "The cat" -> "the cat", "Someone" -> "someone"; names keep their case.
std::string normalize_entity(std::string_view raw) {
  std::string s = collapse_whitespace(raw);
  auto sp = s.find(' ');
  std::string first = lower(s.substr(0, sp));
  if (first == "the" || first == "someone" || first == "something" || is_pronoun(first)) {
    return first + (sp == std::string::npos ? "" : s.substr(sp));
  }
  return s;
}

std::string substitute_macros(std::string text, const std::map<std::string, std::string>& macros) {
  for (int pass = 0; pass < 16; ++pass) {
    bool changed = false;
    for (const auto& [name, body] : macros) {
      std::string key = "{" + name + "}";
      for (auto pos = text.find(key); pos != std::string::npos; pos = text.find(key, pos)) {
        text.replace(pos, key.size(), body);
        pos += body.size();
        changed = true;
      }
    }
    if (!changed) break;
  }
  return text;
}

std::vector<std::string> split_clauses(const std::string& list) {
  std::string s = list;
  const std::string sep = "\x1f";
  for (std::string delim : {", and ", " and ", ", "}) {
    for (auto pos = s.find(delim); pos != std::string::npos; pos = s.find(delim, pos)) {
      s.replace(pos, delim.size(), sep);
      pos += sep.size();
    }
  }
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto p = s.find(sep, start);
    out.push_back(collapse_whitespace(s.substr(start, p - start)));
    if (p == std::string::npos) break;
    start = p + sep.size();
  }
  return out;
}

struct NoMatch {};

}  // namespace

struct TemplateGrammar::Impl {
  std::vector<Pattern> sentences;
  std::vector<Pattern> clauses;

  std::vector<Literal> parse_clauses(const std::string& list) const {
    std::vector<Literal> out;
    for (const auto& clause : split_clauses(list)) {
      if (clause.empty()) throw NoMatch{};
      bool matched = false;
      for (const auto& p : clauses) {
        std::smatch m;
        if (!std::regex_match(clause, m, p.re)) continue;
        auto g = [&](const char* key) -> std::string {
          int i = p.group(key);
          return i > 0 && m[i].matched ? m[i].str() : std::string();
        };
        Polarity pol = g("neg").empty() ? Polarity::Positive : Polarity::Negative;
        if (p.action == "attr") {
          out.push_back(Literal::attr(normalize_entity(g("subj")), "is", g("prop"), pol));
        } else if (p.action == "rel") {
          std::string verb = g("verb");
          if (p.option("form") == "base") verb = third_person(verb);
          out.push_back(Literal::rel(normalize_entity(g("subj")), verb,
                                     normalize_entity(g("obj")), pol));
        } else if (p.action == "more") {
          if (out.empty() || out.back().kind != LiteralKind::Attribute) continue;
          out.push_back(Literal::attr(out.back().a.text(), "is", g("prop"), pol));
        } else {
          continue;
        }
        matched = true;
        break;
      }
      if (!matched) throw NoMatch{};
    }
    return out;
  }

  std::optional<Formula> apply(const Pattern& p, const std::smatch& m) const {
    auto g = [&](const char* key) -> std::string {
      int i = p.group(key);
      return i > 0 && m[i].matched ? m[i].str() : std::string();
    };
    const VariableSet vars;
    try {
      if (p.action == "facts") {
        auto lits = parse_clauses(g("body"));
        for (const auto& l : lits) {
          if (!is_ground(l, vars) || is_pronoun(l.a.text()) || is_pronoun(l.b.text())) {
            return std::nullopt;
          }
        }
        return Conjunction{std::move(lits)};
      }
      if (p.action == "rule") {
        auto ante = parse_clauses(g("ante"));
        auto cons = parse_clauses(g("cons"));
        if (ante.empty() || cons.size() != 1) return std::nullopt;
        if (is_pronoun(ante.front().a.text())) return std::nullopt;
        const Term anchor = ante.front().a;
        auto resolve = [&](Literal& l) {
          if (is_pronoun(l.a.text())) l.a = anchor;
          if (l.kind == LiteralKind::Relation && is_pronoun(l.b.text())) l.b = anchor;
        };
        for (auto& l : ante) resolve(l);
        resolve(cons.front());
        Rule check{"t", ante, cons.front()};
        validate_rule(check, vars);
        return RuleFormula{std::move(ante), cons.front()};
      }
      if (p.action == "generic") {
        std::string var = g("noun") == "things" ? "something" : "someone";
        std::vector<Literal> ante;
        for (const auto& prop : split_clauses(g("props"))) {
          ante.push_back(Literal::attr(var, "is", lower(prop)));
        }
        Polarity pol = g("neg").empty() ? Polarity::Positive : Polarity::Negative;
        return RuleFormula{std::move(ante), Literal::attr(var, "is", lower(g("prop")), pol)};
      }
    } catch (const NoMatch&) {
      return std::nullopt;
    } catch (const Error&) {
      return std::nullopt;
    }
    return std::nullopt;
  }
};

TemplateGrammar::TemplateGrammar(std::unique_ptr<Impl> impl) : impl_(std::move(impl)) {}
TemplateGrammar::TemplateGrammar(TemplateGrammar&&) noexcept = default;
TemplateGrammar& TemplateGrammar::operator=(TemplateGrammar&&) noexcept = default;
TemplateGrammar::~TemplateGrammar() = default;

TemplateGrammar TemplateGrammar::parse(std::string_view text) {
  auto impl = std::make_unique<Impl>();
  std::map<std::string, std::string> macros;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto bad = [&](const std::string& why) {
    return Error(ErrorCode::InvalidArgument,
                 "template grammar line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto trimmed = collapse_whitespace(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    if (trimmed.rfind("define ", 0) == 0) {
      auto eq = line.find(" = ");
      if (eq == std::string::npos) throw bad("define needs ' = '");
      auto name = collapse_whitespace(line.substr(7, eq - 7));
      macros[name] = substitute_macros(line.substr(eq + 3), macros);
      continue;
    }
    auto sep = line.find(" :: ");
    if (sep == std::string::npos) throw bad("missing ' :: '");
    std::istringstream head(line.substr(0, sep));
    std::string kind;
    Pattern p;
    head >> kind >> p.name >> p.action;
    if (p.action.empty()) throw bad("expected KIND NAME ACTION");
    std::string kv;
    while (head >> kv) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) throw bad("bad parameter '" + kv + "'");
      p.params[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    try {
      p.re = std::regex(substitute_macros(line.substr(sep + 4), macros),
                        std::regex::ECMAScript | std::regex::optimize);
    } catch (const std::regex_error& e) {
      throw bad(std::string("bad regex: ") + e.what());
    }
    if (kind == "sentence") {
      if (p.action != "facts" && p.action != "rule" && p.action != "generic") {
        throw bad("unknown sentence action " + p.action);
      }
      impl->sentences.push_back(std::move(p));
    } else if (kind == "clause") {
      if (p.action != "attr" && p.action != "rel" && p.action != "more") {
        throw bad("unknown clause action " + p.action);
      }
      impl->clauses.push_back(std::move(p));
    } else {
      throw bad("unknown entry kind " + kind);
    }
  }
  return TemplateGrammar(std::move(impl));
}

TemplateGrammar TemplateGrammar::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return parse(os.str());
}

const TemplateGrammar& TemplateGrammar::builtin() {
  static const TemplateGrammar grammar = parse(data::kTemplates);
  return grammar;
}

TemplateMatch TemplateGrammar::extract(std::string_view sentence) const {
  const std::string s = collapse_whitespace(sentence);
  for (const auto& p : impl_->sentences) {
    std::smatch m;
    if (!std::regex_match(s, m, p.re)) continue;
    if (auto f = impl_->apply(p, m)) return {std::move(*f), p.name};
  }
  throw Error(ErrorCode::NoTemplateMatch, "no template matches '" + s + "'");
}

Formula extract_templated(std::string_view sentence, const TemplateGrammar& grammar) {
  return grammar.extract(sentence).formula;
}

std::string third_person(std::string_view verb) {
  std::string v(verb);
  if (v.empty()) return v;
  auto ends = [&](std::string_view suf) { return v.size() >= suf.size() && v.ends_with(suf); };
  auto vowel = [](char c) { return std::string_view("aeiou").find(c) != std::string_view::npos; };
  if (v == "have") return "has";
  if (v == "be") return "is";
  if (ends("s") || ends("x") || ends("z") || ends("ch") || ends("sh") || ends("o")) return v + "es";
  if (v.size() >= 2 && v.back() == 'y' && !vowel(v[v.size() - 2])) {
    return v.substr(0, v.size() - 1) + "ies";
  }
  return v + "s";
}

std::string base_form(std::string_view verb) {
  std::string v(verb);
  if (v == "has") return "have";
  if (v == "is") return "be";
  auto ends = [&](std::string_view suf) { return v.size() >= suf.size() && v.ends_with(suf); };
  if (ends("ies") && v.size() > 3) return v.substr(0, v.size() - 3) + "y";
  for (std::string_view suf : {"sses", "xes", "zes", "ches", "shes", "oes"}) {
    if (ends(suf)) return v.substr(0, v.size() - 2);
  }
  if (ends("s") && !ends("ss")) return v.substr(0, v.size() - 1);
  return v;
}

}  // namespace rls
