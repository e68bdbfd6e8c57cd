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

#include "rls/session.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "rls/codec.hpp"
#include "rls/errors.hpp"
#include "rls/theory_json.hpp"

namespace rls {
namespace {

constexpr std::string_view kHelp =
    "show | ask <query> | proof | edit <id> <formula> | add <id> [source=<s>] <formula> |\n"
    "drop <id> | whatif <edit>; <edit> ? <query> | implications | contradictions |\n"
    "abduce <query> | save <path> | help | quit\n";

std::pair<std::string, std::string> split_word(std::string_view s) {
  std::string t = collapse_whitespace(s);
  auto sp = t.find(' ');
  if (sp == std::string::npos) return {t, ""};
  return {t.substr(0, sp), t.substr(sp + 1)};
}

Literal single_literal(std::string_view encoded) { return decode_literal(encoded); }

std::string describe(const std::exception& e) {
  if (const auto* err = dynamic_cast<const Error*>(&e)) {
    return "error: " + std::string(to_string(err->code())) + ": " + err->what();
  }
  return std::string("error: ") + e.what();
}

std::string render_answer(const Answer& a) {
  std::string head = a.truth ? "true" : "false";
  if (!a.truth && a.proof.root.kind == ProofKind::Naf) head += " (CWA)";
  if (a.truncated) head += " [depth limit reached]";
  std::string out = head + "\n";
  if (a.query_unification) {
    const auto& u = *a.query_unification;
    out += "~ query unified with " + to_string(u.matched) + " via " + u.op + "\n";
  }
  return out + render_proof(a.proof);
}

}  // namespace

Edit parse_edit_command(const Theory& t, std::string_view command) {
  auto [verb, rest] = split_word(command);
  auto [id, body] = split_word(rest);
  if (id.empty()) throw Error(ErrorCode::InvalidArgument, verb + " needs an id");
  if (verb == "drop") {
    if (!body.empty()) throw Error(ErrorCode::InvalidArgument, "drop takes only an id");
    if (t.find_fact(id)) return RemoveFact{id};
    if (t.find_rule(id)) return RemoveRule{id};
    throw Error(ErrorCode::UnknownId, "no fact or rule " + id);
  }
  if (verb == "edit") {
    if (t.find_fact(id)) return ReplaceFact{id, single_literal(body)};
    if (t.find_rule(id)) {
      auto f = decode(body);
      auto* r = std::get_if<RuleFormula>(&f);
      if (!r) throw Error(ErrorCode::InvalidArgument, "rule " + id + " needs a rule formula");
      return ReplaceRule{id, r->antecedents, r->consequent};
    }
    throw Error(ErrorCode::UnknownId, "no fact or rule " + id);
  }
  if (verb == "add") {
    std::optional<std::string> source;
    if (body.rfind("source=", 0) == 0) {
      auto [src, formula] = split_word(body);
      source = src.substr(7);
      body = formula;
    }
    auto f = decode(body);
    if (auto* r = std::get_if<RuleFormula>(&f)) return AddRule{{id, r->antecedents, r->consequent}, source};
    const auto& c = std::get<Conjunction>(f);
    if (c.literals.size() != 1) throw Error(ErrorCode::InvalidArgument, "add one literal per fact");
    return AddFact{{id, c.literals.front()}, source};
  }
  throw Error(ErrorCode::InvalidArgument, "unknown edit '" + verb + "'");
}

std::string render_delta(const Delta& d) {
  std::string out;
  for (const auto& i : d.added) out += "+ " + to_string(i.literal) + "  [depth " + std::to_string(i.depth) + "]\n";
  for (const auto& i : d.removed) out += "- " + to_string(i.literal) + "  [depth " + std::to_string(i.depth) + "]\n";
  if (out.empty()) out = "(no change in implications)\n";
  return out;
}

Session::Session(Theory theory, ReasonerConfig config)
    : theory_(std::move(theory)), config_(std::move(config)) {}

Session::Reply Session::execute(std::string_view line) {
  auto [verb, rest] = split_word(line);
  if (verb.empty()) return {"", true};
  try {
    return run(verb, rest);
  } catch (const std::exception& e) {
    return {describe(e) + "\n", false};
  }
}

Session::Reply Session::run(const std::string& verb, const std::string& rest) {
  if (verb == "help") return {std::string(kHelp)};
  if (verb == "quit" || verb == "exit") return {"", true, true};
  if (verb == "show") {
    std::ostringstream os;
    for (const auto& f : theory_.facts()) {
      os << f.id << ": " << encode(f.literal);
      if (auto s = theory_.source_of(f.id)) os << "  [source " << *s << "]";
      os << "\n";
    }
    for (const auto& r : theory_.rules()) {
      os << r.id << ": " << encode(Formula{RuleFormula{r.antecedents, r.consequent}});
      if (auto s = theory_.source_of(r.id)) os << "  [source " << *s << "]";
      os << "\n";
    }
    return {os.str()};
  }
  if (verb == "ask") {
    Answer a = answer(theory_, single_literal(rest), config_);
    last_ = a;
    return {render_answer(a)};
  }
  if (verb == "proof") {
    if (!last_) return {"no answer yet\n", false};
    return {render_proof(last_->proof)};
  }
  if (verb == "edit" || verb == "add" || verb == "drop") {
    Edit e = parse_edit_command(theory_, verb + " " + rest);
    auto before = enumerate_implications(theory_, config_);
    Theory next = apply_edits(theory_, {e});
    auto after = enumerate_implications(next, config_);
    theory_ = std::move(next);
    last_.reset();
    return {"ok\n" + render_delta(implication_delta(before, after))};
  }
  if (verb == "whatif") {
    auto q = rest.rfind('?');
    if (q == std::string::npos) throw Error(ErrorCode::InvalidArgument, "whatif needs '? <query>'");
    std::vector<Edit> edits;
    Theory scratch = theory_;
    std::string list = rest.substr(0, q);
    std::size_t start = 0;
    while (start <= list.size()) {
      auto semi = list.find(';', start);
      std::string cmd = collapse_whitespace(list.substr(start, semi - start));
      if (!cmd.empty()) {
        edits.push_back(parse_edit_command(scratch, cmd));
        scratch = apply_edits(scratch, {edits.back()});
      }
      if (semi == std::string::npos) break;
      start = semi + 1;
    }
    auto result = what_if(theory_, edits, single_literal(rest.substr(q + 1)), config_);
    last_ = result.answer;
    return {render_answer(result.answer) + render_delta(result.delta)};
  }
  if (verb == "implications") {
    std::string out;
    for (const auto& i : enumerate_implications(theory_, config_)) {
      out += to_string(i.literal) + "  [depth " + std::to_string(i.depth) + "]\n";
    }
    return {out.empty() ? "(none)\n" : out};
  }
  if (verb == "contradictions") {
    std::string out;
    for (const auto& [p, n] : detect_contradictions(theory_, config_)) {
      out += to_string(p) + " vs " + to_string(n) + "\n";
    }
    return {out.empty() ? "(none)\n" : out};
  }
  if (verb == "abduce") {
    std::string out;
    for (const auto& set : abduce(theory_, single_literal(rest), 2, config_)) {
      std::string line;
      for (const auto& l : set) line += (line.empty() ? "" : " + ") + to_string(l);
      out += line + "\n";
    }
    return {out.empty() ? "(no explanation within 2 facts)\n" : out};
  }
  if (verb == "save") {
    if (rest.empty()) throw Error(ErrorCode::InvalidArgument, "save needs a path");
    save_theory_file(theory_, rest);
    return {"saved " + rest + "\n"};
  }
  throw Error(ErrorCode::InvalidArgument, "unknown command '" + verb + "' (try help)");
}

void run_repl(Session& session, std::istream& in, std::ostream& out, bool prompt) {
  std::string line;
  if (prompt) out << "> " << std::flush;
  while (std::getline(in, line)) {
    auto reply = session.execute(line);
    out << reply.text;
    if (reply.quit) return;
    if (prompt) out << "> " << std::flush;
  }
}

}  // namespace rls
