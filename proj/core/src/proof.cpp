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

#include "rls/proof.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "rls/errors.hpp"
#include "rls/theory.hpp"
#include "rls/theory_json.hpp"

namespace rls {

using nlohmann::json;

json to_json(const UnificationRecord& r) {
  return {{"needed", to_json(r.needed)},
          {"matched", to_json(r.matched)},
          {"score", r.score},
          {"operator", r.op}};
}

json to_json(const ProofNode& n) {
  json out = {{"literal", to_json(n.literal)}, {"depth", n.depth}};
  switch (n.kind) {
    case ProofKind::Asserted:
      out["kind"] = "asserted";
      out["fact_id"] = n.fact_id;
      break;
    case ProofKind::Rule:
      out["kind"] = "rule";
      out["rule_id"] = n.rule_id;
      if (n.binding) out["binding"] = n.binding->text();
      break;
    case ProofKind::Naf:
      out["kind"] = "naf";
      if (n.naf_of) out["naf_of"] = to_json(*n.naf_of);
      break;
  }
  if (!n.unifications.empty()) {
    out["unifications"] = json::array();
    for (const auto& u : n.unifications) out["unifications"].push_back(to_json(u));
  }
  out["children"] = json::array();
  for (const auto& c : n.children) out["children"].push_back(to_json(c));
  return out;
}

json to_json(const ProofTree& p) { return to_json(p.root); }

ProofNode proof_node_from_json(const json& j) {
  auto kind = j.at("kind").get<std::string>();
  ProofNode n{.literal = literal_from_json(j.at("literal"))};
  n.depth = j.at("depth").get<int>();
  if (kind == "asserted") {
    n.kind = ProofKind::Asserted;
    n.fact_id = j.value("fact_id", "");
  } else if (kind == "rule") {
    n.kind = ProofKind::Rule;
    n.rule_id = j.at("rule_id").get<std::string>();
    if (j.contains("binding")) n.binding = Term(j.at("binding").get<std::string>());
  } else if (kind == "naf") {
    n.kind = ProofKind::Naf;
    if (j.contains("naf_of")) n.naf_of = literal_from_json(j.at("naf_of"));
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown proof node kind " + kind);
  }
  if (j.contains("unifications")) {
    for (const auto& u : j.at("unifications")) {
      n.unifications.push_back({literal_from_json(u.at("needed")),
                                literal_from_json(u.at("matched")),
                                u.at("score").get<double>(),
                                u.at("operator").get<std::string>()});
    }
  }
  for (const auto& c : j.at("children")) n.children.push_back(proof_node_from_json(c));
  return n;
}

namespace {

void render_node(const ProofNode& n, int indent, std::ostringstream& os) {
  os << std::string(static_cast<std::size_t>(indent) * 2, ' ') << to_string(n.literal) << "  [";
  switch (n.kind) {
    case ProofKind::Asserted:
      os << "fact " << n.fact_id;
      break;
    case ProofKind::Rule:
      os << "rule " << n.rule_id;
      if (n.binding) os << ", binding " << n.binding->text();
      os << ", depth " << n.depth;
      break;
    case ProofKind::Naf:
      os << "naf: " << (n.naf_of ? to_string(*n.naf_of) : std::string("?"))
         << " not derivable (CWA)";
      break;
  }
  os << "]\n";
  for (const auto& u : n.unifications) {
    os << std::string(static_cast<std::size_t>(indent + 1) * 2, ' ') << "~ unified "
       << to_string(u.needed) << " with " << to_string(u.matched) << " via " << u.op
       << " (score " << std::setprecision(3) << u.score << ")\n";
  }
  for (const auto& c : n.children) render_node(c, indent + 1, os);
}

std::optional<std::string> check_node(const Theory& t, const ProofNode& n) {
  const auto& vars = t.variables();
  switch (n.kind) {
    case ProofKind::Asserted: {
      const Fact* f = t.find_fact(n.fact_id);
      if (!f) return "asserted leaf cites unknown fact " + n.fact_id;
      if (f->literal != n.literal) return "fact " + n.fact_id + " does not state " + to_string(n.literal);
      if (n.depth != 0 || !n.children.empty()) return "asserted leaf with depth or children";
      return std::nullopt;
    }
    case ProofKind::Naf: {
      if (n.literal.positive()) return "naf node on a positive literal " + to_string(n.literal);
      if (!n.naf_of || *n.naf_of != negate(n.literal)) return "naf node without matching counterpart";
      if (n.depth != 0 || !n.children.empty()) return "naf leaf with depth or children";
      return std::nullopt;
    }
    case ProofKind::Rule: {
      const Rule* r = t.find_rule(n.rule_id);
      if (!r) return "rule node cites unknown rule " + n.rule_id;
      Rule g = *r;
      if (n.binding) {
        g = ground(*r, *n.binding, vars);
      } else if (rule_variable(*r, vars)) {
        return "rule " + n.rule_id + " applied without binding";
      }
      if (g.consequent != n.literal) {
        return "rule " + n.rule_id + " does not conclude " + to_string(n.literal);
      }
      if (g.antecedents.size() != n.children.size()) {
        return "rule " + n.rule_id + " has " + std::to_string(g.antecedents.size()) +
               " antecedents but node has " + std::to_string(n.children.size()) + " children";
      }
      int deepest = 0;
      for (std::size_t i = 0; i < g.antecedents.size(); ++i) {
        const auto& want = g.antecedents[i];
        const auto& child = n.children[i];
        bool direct = child.literal == want;
        bool unified = std::any_of(n.unifications.begin(), n.unifications.end(),
                                   [&](const UnificationRecord& u) {
                                     return u.needed == want && u.matched == child.literal;
                                   });
        if (!direct && !unified) {
          return "child " + to_string(child.literal) + " does not discharge " + to_string(want);
        }
        if (auto err = check_node(t, child)) return err;
        deepest = std::max(deepest, child.depth);
      }
      if (n.depth != deepest + 1) {
        return "rule node " + to_string(n.literal) + " has depth " + std::to_string(n.depth) +
               ", expected " + std::to_string(deepest + 1);
      }
      return std::nullopt;
    }
  }
  return "unknown node kind";
}

}  // namespace

std::string render_proof(const ProofTree& p) {
  std::ostringstream os;
  render_node(p.root, 0, os);
  return os.str();
}

std::optional<std::string> check_proof(const Theory& t, const ProofTree& p) {
  return check_node(t, p.root);
}

}  // namespace rls
