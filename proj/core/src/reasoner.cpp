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

#include "rls/reasoner.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <queue>
#include <set>
#include <tuple>

#include "rls/errors.hpp"

namespace rls {
namespace {

constexpr int kNoDepth = -1;

struct AntecedentSupport {
  Literal needed;
  std::vector<int> support;   // atoms that discharge the antecedent directly
  std::vector<int> blockers;  // negative antecedents: atoms defeating NAF
};

struct Instance {
  const RuleInstance* source = nullptr;
  int consequent = 0;
  std::vector<AntecedentSupport> antecedents;
  int stratum = 0;
};

// Ground atom universe with a unifier-aware lookup.
class AtomTable {
 public:
  AtomTable(std::vector<Literal> atoms, const UnifierChoice& unifier)
      : atoms_(std::move(atoms)), unifier_(unifier) {
    std::sort(atoms_.begin(), atoms_.end());
    atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
    for (int i = 0; i < size(); ++i) {
      index_.emplace(atoms_[i], i);
      if (unifier_.kind != UnifierKind::Exact) {
        buckets_[{normalize_for_matching(atoms_[i].a), atoms_[i].polarity}].push_back(i);
      }
    }
  }

  int size() const { return static_cast<int>(atoms_.size()); }
  const Literal& at(int i) const { return atoms_[static_cast<std::size_t>(i)]; }

  std::optional<int> find(const Literal& l) const {
    auto it = index_.find(l);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  // Every atom the unifier accepts for `needed`, in atom order.
  std::vector<int> matches(const Literal& needed) const {
    if (unifier_.kind == UnifierKind::Exact) {
      if (auto i = find(needed)) return {*i};
      return {};
    }
    std::vector<int> out;
    auto it = buckets_.find({normalize_for_matching(needed.a), needed.polarity});
    if (it == buckets_.end()) return out;
    for (int i : it->second) {
      if (unify(needed, at(i), unifier_)) out.push_back(i);
    }
    return out;
  }

 private:
  std::vector<Literal> atoms_;
  std::map<Literal, int> index_;
  std::map<std::pair<std::string, Polarity>, std::vector<int>> buckets_;
  UnifierChoice unifier_;
};

class Engine {
 public:
  Engine(const Theory& t, const ReasonerConfig& cfg)
      : theory_(t),
        cfg_(cfg),
        instances_src_(ground_instances(t, entities(t))),
        atoms_(collect_atoms(t, instances_src_), cfg.unifier) {}

  ClosureResult run() {
    build_instances();
    stratify();
    present_.assign(static_cast<std::size_t>(atoms_.size()), 0);
    depth_.assign(static_cast<std::size_t>(atoms_.size()), kNoDepth);
    fact_id_.assign(static_cast<std::size_t>(atoms_.size()), std::string());
    for (const auto& f : theory_.facts()) {
      int a = *atoms_.find(f.literal);
      auto& id = fact_id_[static_cast<std::size_t>(a)];
      if (id.empty() || f.id < id) id = f.id;
      present_[static_cast<std::size_t>(a)] = 1;
      depth_[static_cast<std::size_t>(a)] = 0;
    }
    fired_.assign(instances_.size(), 0);
    for (int s = 0; s <= max_stratum_; ++s) {
      saturate(s);
      assign_depths(s);
    }
    return collect();
  }

 private:
  static std::vector<Literal> collect_atoms(const Theory& t,
                                            const std::vector<RuleInstance>& insts) {
    std::vector<Literal> out;
    for (const auto& f : t.facts()) out.push_back(f.literal);
    for (const auto& i : insts) out.push_back(i.rule.consequent);
    return out;
  }

  std::size_t idx(int atom) const { return static_cast<std::size_t>(atom); }

  void build_instances() {
    instances_.reserve(instances_src_.size());
    watchers_.assign(idx(atoms_.size()), {});
    for (const auto& src : instances_src_) {
      Instance inst;
      inst.source = &src;
      inst.consequent = *atoms_.find(src.rule.consequent);
      for (const auto& l : src.rule.antecedents) {
        AntecedentSupport a{l, atoms_.matches(l), {}};
        if (!l.positive()) a.blockers = atoms_.matches(negate(l));
        inst.antecedents.push_back(std::move(a));
      }
      int id = static_cast<int>(instances_.size());
      for (const auto& a : inst.antecedents) {
        for (int s : a.support) watchers_[idx(s)].push_back(id);
      }
      instances_.push_back(std::move(inst));
    }
  }

  // Tarjan over consequent -> dependency edges; components come out
  // dependencies first, which is the evaluation order.
  void stratify() {
    const int n = atoms_.size();
    std::vector<std::vector<std::pair<int, bool>>> deps(idx(n));
    for (const auto& inst : instances_) {
      auto& out = deps[idx(inst.consequent)];
      for (const auto& a : inst.antecedents) {
        for (int s : a.support) out.emplace_back(s, false);
        for (int b : a.blockers) out.emplace_back(b, true);
      }
    }

    std::vector<int> index(idx(n), -1), low(idx(n), 0), comp(idx(n), -1);
    std::vector<char> on_stack(idx(n), 0);
    std::vector<int> stack;
    int counter = 0, components = 0;
    struct Frame {
      int node;
      std::size_t edge;
    };
    for (int root = 0; root < n; ++root) {
      if (index[idx(root)] != -1) continue;
      std::vector<Frame> call{{root, 0}};
      index[idx(root)] = low[idx(root)] = counter++;
      stack.push_back(root);
      on_stack[idx(root)] = 1;
      while (!call.empty()) {
        auto& f = call.back();
        const auto& edges = deps[idx(f.node)];
        if (f.edge < edges.size()) {
          int w = edges[f.edge++].first;
          if (index[idx(w)] == -1) {
            index[idx(w)] = low[idx(w)] = counter++;
            stack.push_back(w);
            on_stack[idx(w)] = 1;
            call.push_back({w, 0});
          } else if (on_stack[idx(w)]) {
            low[idx(f.node)] = std::min(low[idx(f.node)], index[idx(w)]);
          }
          continue;
        }
        int v = f.node;
        call.pop_back();
        if (!call.empty()) {
          low[idx(call.back().node)] = std::min(low[idx(call.back().node)], low[idx(v)]);
        }
        if (low[idx(v)] == index[idx(v)]) {
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[idx(w)] = 0;
            comp[idx(w)] = components;
          } while (w != v);
          ++components;
        }
      }
    }

    std::vector<std::vector<int>> members(static_cast<std::size_t>(components));
    for (int v = 0; v < n; ++v) members[static_cast<std::size_t>(comp[idx(v)])].push_back(v);
    std::vector<int> comp_stratum(static_cast<std::size_t>(components), 0);
    for (int c = 0; c < components; ++c) {
      int s = 0;
      for (int v : members[static_cast<std::size_t>(c)]) {
        for (auto [w, negative] : deps[idx(v)]) {
          int cw = comp[idx(w)];
          if (cw == c) {
            if (negative) report_cycle(v, w);
            continue;
          }
          s = std::max(s, comp_stratum[static_cast<std::size_t>(cw)] + (negative ? 1 : 0));
        }
      }
      comp_stratum[static_cast<std::size_t>(c)] = s;
    }
    max_stratum_ = 0;
    for (auto& inst : instances_) {
      inst.stratum = comp_stratum[static_cast<std::size_t>(comp[idx(inst.consequent)])];
      max_stratum_ = std::max(max_stratum_, inst.stratum);
    }
  }

  void report_cycle(int head, int blocked) {
    std::string msg = "negative dependency cycle: " + to_string(atoms_.at(head)) +
                      " depends negatively on " + to_string(atoms_.at(blocked)) +
                      ", which depends back on it";
    if (cfg_.nonstratified_policy == NonStratifiedPolicy::Error) {
      throw Error(ErrorCode::NotStratified, msg);
    }
    if (std::find(warnings_.begin(), warnings_.end(), msg) == warnings_.end()) {
      warnings_.push_back(msg);
    }
  }

  bool any_present(const std::vector<int>& atoms) const {
    return std::any_of(atoms.begin(), atoms.end(), [&](int a) { return present_[idx(a)] != 0; });
  }

  bool satisfied(const Instance& inst) const {
    for (const auto& a : inst.antecedents) {
      if (a.needed.positive()) {
        if (!any_present(a.support)) return false;
      } else if (!any_present(a.support) && any_present(a.blockers)) {
        return false;
      }
    }
    return true;
  }

  // Semi-naive: an instance is rechecked only when one of its support atoms
  // becomes present.
  void saturate(int stratum) {
    std::deque<int> queue;
    for (int i = 0; i < static_cast<int>(instances_.size()); ++i) {
      if (instances_[static_cast<std::size_t>(i)].stratum == stratum) queue.push_back(i);
    }
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      auto& inst = instances_[static_cast<std::size_t>(i)];
      if (fired_[static_cast<std::size_t>(i)] || !satisfied(inst)) continue;
      fired_[static_cast<std::size_t>(i)] = 1;
      if (present_[idx(inst.consequent)]) continue;
      present_[idx(inst.consequent)] = 1;
      for (int w : watchers_[idx(inst.consequent)]) {
        if (instances_[static_cast<std::size_t>(w)].stratum == stratum &&
            !fired_[static_cast<std::size_t>(w)]) {
          queue.push_back(w);
        }
      }
    }
  }

  bool naf_holds(const AntecedentSupport& a) const { return !any_present(a.blockers); }

  // Knuth's generalization of Dijkstra: an antecedent is resolved by the
  // first of its support atoms to be finalized, an instance fires once all
  // antecedents are resolved, and atoms are finalized in depth order.
  void assign_depths(int stratum) {
    std::vector<int> members;
    for (int i = 0; i < static_cast<int>(instances_.size()); ++i) {
      const auto& inst = instances_[static_cast<std::size_t>(i)];
      if (inst.stratum == stratum && fired_[static_cast<std::size_t>(i)]) members.push_back(i);
    }
    using Entry = std::pair<int, int>;  // (depth, atom)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
    std::map<int, std::vector<std::pair<int, std::size_t>>> users;
    std::map<int, std::size_t> pending;
    std::map<int, std::vector<int>> ant_depth;
    std::set<int> finalized;
    // Facts and lower-strata atoms arrive with their depth fixed; atoms of
    // this stratum get one when they are popped below.
    auto is_final = [&](int atom) { return depth_[idx(atom)] != kNoDepth; };

    auto try_fire = [&](int i) {
      const auto& d = ant_depth[i];
      int deepest = 0;
      for (int x : d) deepest = std::max(deepest, x);
      pq.push({deepest + 1, instances_[static_cast<std::size_t>(i)].consequent});
    };

    for (int i : members) {
      const auto& inst = instances_[static_cast<std::size_t>(i)];
      auto& d = ant_depth[i];
      d.assign(inst.antecedents.size(), kNoDepth);
      std::size_t open = 0;
      for (std::size_t k = 0; k < inst.antecedents.size(); ++k) {
        const auto& a = inst.antecedents[k];
        if (!a.needed.positive() && (naf_holds(a) || !any_present(a.support))) {
          d[k] = 0;
          continue;
        }
        int best = kNoDepth;
        for (int s : a.support) {
          if (!present_[idx(s)]) continue;
          if (is_final(s)) {
            int ds = depth_[idx(s)];
            if (best == kNoDepth || ds < best) best = ds;
          } else {
            users[s].push_back({i, k});
          }
        }
        if (best != kNoDepth) {
          d[k] = best;
        } else {
          ++open;
        }
      }
      pending[i] = open;
      if (open == 0) try_fire(i);
    }
    while (!pq.empty()) {
      auto [d, atom] = pq.top();
      pq.pop();
      if (finalized.count(atom)) continue;
      if (depth_[idx(atom)] != kNoDepth && depth_[idx(atom)] < d) d = depth_[idx(atom)];
      depth_[idx(atom)] = d;
      finalized.insert(atom);
      auto it = users.find(atom);
      if (it == users.end()) continue;
      for (auto [i, k] : it->second) {
        auto& slot = ant_depth[i][k];
        if (slot != kNoDepth) continue;
        slot = d;
        if (--pending[i] == 0) try_fire(i);
      }
    }

    if (cfg_.max_depth == ReasonerConfig::kUnlimited) return;
    for (int i : members) {
      int c = instances_[static_cast<std::size_t>(i)].consequent;
      if (present_[idx(c)] && depth_[idx(c)] > cfg_.max_depth) {
        present_[idx(c)] = 0;
        truncated_.insert(c);
      }
    }
  }

  // Among the present support atoms of minimal depth, the best unifier match.
  Premise choose_premise(const AntecedentSupport& a) const {
    if (!a.needed.positive() && (naf_holds(a) || !any_present(a.support))) {
      return {a.needed, std::nullopt, std::nullopt};
    }
    int best_depth = kNoDepth;
    for (int s : a.support) {
      if (present_[idx(s)] && (best_depth == kNoDepth || depth_[idx(s)] < best_depth)) {
        best_depth = depth_[idx(s)];
      }
    }
    std::vector<Literal> shallowest;
    for (int s : a.support) {
      if (present_[idx(s)] && depth_[idx(s)] == best_depth) shallowest.push_back(atoms_.at(s));
    }
    auto rec = best_match(a.needed, shallowest, cfg_.unifier);
    Premise p{a.needed, rec->matched, std::nullopt};
    if (rec->matched != a.needed) p.unification = rec;
    return p;
  }

  ClosureResult collect() {
    ClosureResult out;
    for (int a = 0; a < atoms_.size(); ++a) {
      if (!present_[idx(a)]) continue;
      const Literal& l = atoms_.at(a);
      (l.positive() ? out.derived : out.explicit_negatives).emplace(l, depth_[idx(a)]);
    }
    for (int a : truncated_) out.truncated.push_back(atoms_.at(a));
    std::sort(out.truncated.begin(), out.truncated.end());

    for (const auto& [pos, d] : out.derived) {
      (void)d;
      for (auto kind : {LiteralKind::Attribute, LiteralKind::Relation}) {
        Literal neg(kind, pos.a, pos.pred, pos.b, Polarity::Negative);
        if (out.explicit_negatives.count(neg)) out.contradictions.emplace_back(pos, neg);
      }
    }

    // Justifications: asserted facts first, then the minimal-depth rule
    // instance, ties by (rule id, premises, binding).
    using Key = std::tuple<std::string, std::vector<Literal>, std::string>;
    std::map<int, std::pair<Key, Justification>> chosen;
    for (std::size_t i = 0; i < instances_.size(); ++i) {
      if (!fired_[i]) continue;
      const auto& inst = instances_[i];
      int c = inst.consequent;
      if (!present_[idx(c)] || !fact_id_[idx(c)].empty()) continue;
      Justification j;
      j.rule_id = inst.source->rule.id;
      j.binding = inst.source->binding;
      int deepest = 0;
      bool ok = true;
      for (const auto& a : inst.antecedents) {
        if (a.needed.positive() && !any_present(a.support)) {
          ok = false;
          break;
        }
        Premise p = choose_premise(a);
        if (p.matched) deepest = std::max(deepest, depth_[idx(*atoms_.find(*p.matched))]);
        j.premises.push_back(std::move(p));
      }
      if (!ok) continue;
      j.depth = deepest + 1;
      if (j.depth != depth_[idx(c)]) continue;
      std::vector<Literal> lits;
      for (const auto& p : j.premises) lits.push_back(p.matched.value_or(p.needed));
      Key key{j.rule_id, std::move(lits), j.binding ? j.binding->text() : std::string()};
      auto it = chosen.find(c);
      if (it == chosen.end() || key < it->second.first) {
        chosen.insert_or_assign(c, std::make_pair(std::move(key), std::move(j)));
      }
    }
    std::set<std::pair<Literal, Literal>> seen_records;
    for (int a = 0; a < atoms_.size(); ++a) {
      if (!present_[idx(a)]) continue;
      const Literal& l = atoms_.at(a);
      if (!fact_id_[idx(a)].empty()) {
        Justification j;
        j.fact_id = fact_id_[idx(a)];
        out.justifications.emplace(l, std::move(j));
        continue;
      }
      auto it = chosen.find(a);
      if (it == chosen.end()) continue;
      for (const auto& p : it->second.second.premises) {
        if (p.unification && seen_records.insert({p.unification->needed, p.unification->matched}).second) {
          out.unifications_used.push_back(*p.unification);
        }
      }
      out.justifications.emplace(l, std::move(it->second.second));
    }
    std::sort(out.unifications_used.begin(), out.unifications_used.end(),
              [](const UnificationRecord& x, const UnificationRecord& y) {
                return std::tie(x.needed, x.matched) < std::tie(y.needed, y.matched);
              });
    out.warnings = warnings_;
    return out;
  }

  const Theory& theory_;
  ReasonerConfig cfg_;
  std::vector<RuleInstance> instances_src_;
  AtomTable atoms_;
  std::vector<Instance> instances_;
  std::vector<std::vector<int>> watchers_;
  int max_stratum_ = 0;
  std::vector<char> present_;
  std::vector<int> depth_;
  std::vector<std::string> fact_id_;
  std::vector<char> fired_;
  std::set<int> truncated_;
  std::vector<std::string> warnings_;
};

ProofNode naf_node(const Literal& negative) {
  ProofNode n{.kind = ProofKind::Naf, .literal = negative};
  n.naf_of = negate(negative);
  return n;
}

ProofNode build_node(const ClosureResult& c, const Literal& atom) {
  auto it = c.justifications.find(atom);
  if (it == c.justifications.end()) {
    throw Error(ErrorCode::InvalidArgument, "no justification for " + to_string(atom));
  }
  const auto& j = it->second;
  if (!j.fact_id.empty()) {
    ProofNode n{.kind = ProofKind::Asserted, .literal = atom};
    n.fact_id = j.fact_id;
    return n;
  }
  ProofNode n{.kind = ProofKind::Rule, .literal = atom, .depth = j.depth};
  n.rule_id = j.rule_id;
  n.binding = j.binding;
  for (const auto& p : j.premises) {
    if (!p.matched) {
      n.children.push_back(naf_node(p.needed));
      continue;
    }
    n.children.push_back(build_node(c, *p.matched));
    if (p.unification) n.unifications.push_back(*p.unification);
  }
  return n;
}

std::optional<UnificationRecord> lookup(const std::map<Literal, int>& atoms,
                                        const Literal& needed, const UnifierChoice& unifier) {
  if (unifier.kind == UnifierKind::Exact) {
    if (atoms.count(needed)) return UnificationRecord{needed, needed, 1.0, std::string(kExactOp)};
    return std::nullopt;
  }
  std::vector<Literal> keys;
  keys.reserve(atoms.size());
  for (const auto& [l, d] : atoms) keys.push_back(l);
  return best_match(needed, keys, unifier);
}

bool contains(const std::vector<Literal>& sorted, const Literal& l) {
  return std::binary_search(sorted.begin(), sorted.end(), l);
}

}  // namespace

bool ClosureResult::holds(const Literal& l) const {
  return l.positive() ? derived.count(l) > 0 : explicit_negatives.count(l) > 0;
}

ClosureResult closure(const Theory& t, const ReasonerConfig& cfg) {
  return Engine(t, cfg).run();
}

ProofTree build_proof(const ClosureResult& c, const Literal& atom) {
  return {build_node(c, atom)};
}

Answer answer(const Theory& t, const Literal& query, const ReasonerConfig& cfg) {
  return answer(t, closure(t, cfg), query, cfg);
}

Answer answer(const Theory& t, const ClosureResult& c, const Literal& query,
              const ReasonerConfig& cfg) {
  if (!is_ground(query, t.variables())) {
    throw Error(ErrorCode::InvalidLiteral, "query must be ground: " + to_string(query));
  }
  auto finish = [&](bool truth, ProofNode root, std::optional<UnificationRecord> rec) {
    Answer a{truth, ProofTree{std::move(root)}, std::move(rec), false};
    a.truncated = contains(c.truncated, positive_form(query)) || contains(c.truncated, query);
    if (a.query_unification && a.query_unification->matched == query) a.query_unification.reset();
    return a;
  };
  if (query.positive()) {
    if (auto m = lookup(c.derived, query, cfg.unifier)) {
      return finish(true, build_node(c, m->matched), m);
    }
    return finish(false, naf_node(negate(query)), std::nullopt);
  }
  if (auto m = lookup(c.explicit_negatives, query, cfg.unifier)) {
    return finish(true, build_node(c, m->matched), m);
  }
  if (auto m = lookup(c.derived, negate(query), cfg.unifier)) {
    return finish(false, build_node(c, m->matched), m);
  }
  return finish(true, naf_node(query), std::nullopt);
}

std::vector<Implication> enumerate_implications(const Theory& t, const ReasonerConfig& cfg) {
  auto c = closure(t, cfg);
  std::set<Literal> asserted;
  for (const auto& f : t.facts()) asserted.insert(f.literal);
  std::vector<Implication> out;
  for (const auto& [l, d] : c.derived) {
    if (!asserted.count(l)) out.push_back({l, d});
  }
  std::sort(out.begin(), out.end(), [](const Implication& x, const Implication& y) {
    return std::tie(x.depth, x.literal) < std::tie(y.depth, y.literal);
  });
  return out;
}

std::vector<std::pair<Literal, Literal>> detect_contradictions(const Theory& t,
                                                               const ReasonerConfig& cfg) {
  return closure(t, cfg).contradictions;
}

std::vector<std::vector<Literal>> abduce(const Theory& t, const Literal& query,
                                         std::size_t max_set_size, const ReasonerConfig& cfg) {
  if (max_set_size == 0) throw Error(ErrorCode::InvalidArgument, "max_set_size must be positive");
  auto base = closure(t, cfg);
  if (answer(t, base, query, cfg).truth) {
    throw Error(ErrorCode::AlreadyProvable, to_string(query) + " is already provable");
  }

  auto domain = entities(t);
  if (!t.variables().contains(query.a)) domain.insert(query.a);
  if (query.kind == LiteralKind::Relation && !t.variables().contains(query.b)) {
    domain.insert(query.b);
  }
  auto instances = ground_instances(t, domain);

  // Only antecedents in the backward dependency cone of the query can matter.
  std::set<Literal> cone{positive_form(query), negate(positive_form(query))};
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& inst : instances) {
      bool relevant = std::any_of(cone.begin(), cone.end(), [&](const Literal& goal) {
        return unify(goal, inst.rule.consequent, cfg.unifier).has_value();
      });
      if (!relevant) continue;
      for (const auto& l : inst.rule.antecedents) {
        for (const auto& x : {l, negate(l)}) grew |= cone.insert(x).second;
      }
    }
  }
  std::set<Literal> candidate_set;
  for (const auto& inst : instances) {
    for (const auto& l : inst.rule.antecedents) {
      if (l.positive() && cone.count(l) && !base.derived.count(l)) candidate_set.insert(l);
    }
  }
  std::vector<Literal> candidates(candidate_set.begin(), candidate_set.end());

  std::set<std::string> ids;
  for (const auto& f : t.facts()) ids.insert(f.id);
  for (const auto& r : t.rules()) ids.insert(r.id);
  auto fresh_id = [&](std::size_t k) {
    std::string id = "abduced." + std::to_string(k);
    while (ids.count(id)) id += "_";
    return id;
  };

  auto sufficient = [&](const std::vector<Literal>& extra) {
    std::vector<Fact> facts = t.facts();
    for (std::size_t k = 0; k < extra.size(); ++k) facts.push_back({fresh_id(k), extra[k]});
    Theory t2(std::move(facts), t.rules(), t.provenance(), t.variables());
    return answer(t2, query, cfg).truth;
  };

  std::vector<std::vector<Literal>> found;
  auto covers_found = [&](const std::vector<Literal>& s) {
    return std::any_of(found.begin(), found.end(), [&](const std::vector<Literal>& f) {
      return std::includes(s.begin(), s.end(), f.begin(), f.end());
    });
  };
  std::vector<std::size_t> pick;
  std::function<void(std::size_t, std::size_t)> visit = [&](std::size_t start, std::size_t size) {
    if (pick.size() == size) {
      std::vector<Literal> s;
      for (auto i : pick) s.push_back(candidates[i]);
      if (!covers_found(s) && sufficient(s)) found.push_back(std::move(s));
      return;
    }
    for (std::size_t i = start; i < candidates.size(); ++i) {
      pick.push_back(i);
      visit(i + 1, size);
      pick.pop_back();
    }
  };
  for (std::size_t size = 1; size <= std::min(max_set_size, candidates.size()); ++size) {
    visit(0, size);
  }
  return found;
}

Theory apply_edits(const Theory& t, const std::vector<Edit>& edits) {
  std::vector<Fact> facts = t.facts();
  std::vector<Rule> rules = t.rules();
  auto provenance = t.provenance();

  auto fact_at = [&](const std::string& id) {
    auto it = std::find_if(facts.begin(), facts.end(), [&](const Fact& f) { return f.id == id; });
    if (it == facts.end()) throw Error(ErrorCode::UnknownId, "unknown fact id " + id);
    return it;
  };
  auto rule_at = [&](const std::string& id) {
    auto it = std::find_if(rules.begin(), rules.end(), [&](const Rule& r) { return r.id == id; });
    if (it == rules.end()) throw Error(ErrorCode::UnknownId, "unknown rule id " + id);
    return it;
  };
  auto taken = [&](const std::string& id) {
    return std::any_of(facts.begin(), facts.end(), [&](const Fact& f) { return f.id == id; }) ||
           std::any_of(rules.begin(), rules.end(), [&](const Rule& r) { return r.id == id; });
  };

  for (const auto& edit : edits) {
    std::visit(
        [&](const auto& e) {
          using E = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<E, AddFact>) {
            if (taken(e.fact.id)) throw Error(ErrorCode::DuplicateId, "id " + e.fact.id + " already used");
            facts.push_back(e.fact);
            if (e.source) provenance[e.fact.id] = *e.source;
          } else if constexpr (std::is_same_v<E, RemoveFact>) {
            facts.erase(fact_at(e.id));
            provenance.erase(e.id);
          } else if constexpr (std::is_same_v<E, ReplaceFact>) {
            fact_at(e.id)->literal = e.literal;
          } else if constexpr (std::is_same_v<E, AddRule>) {
            if (taken(e.rule.id)) throw Error(ErrorCode::DuplicateId, "id " + e.rule.id + " already used");
            rules.push_back(e.rule);
            if (e.source) provenance[e.rule.id] = *e.source;
          } else if constexpr (std::is_same_v<E, RemoveRule>) {
            rules.erase(rule_at(e.id));
            provenance.erase(e.id);
          } else {
            auto it = rule_at(e.id);
            it->antecedents = e.antecedents;
            it->consequent = e.consequent;
          }
        },
        edit);
  }
  return Theory(std::move(facts), std::move(rules), std::move(provenance), t.variables());
}

Delta implication_delta(const std::vector<Implication>& before,
                        const std::vector<Implication>& after) {
  std::map<Literal, int> b, a;
  for (const auto& i : before) b.emplace(i.literal, i.depth);
  for (const auto& i : after) a.emplace(i.literal, i.depth);
  Delta d;
  for (const auto& i : after) {
    if (!b.count(i.literal)) d.added.push_back(i);
  }
  for (const auto& i : before) {
    if (!a.count(i.literal)) d.removed.push_back(i);
  }
  return d;
}

WhatIfResult what_if(const Theory& t, const std::vector<Edit>& edits, const Literal& query,
                     const ReasonerConfig& cfg) {
  Theory edited = apply_edits(t, edits);
  auto before = enumerate_implications(t, cfg);
  auto after = enumerate_implications(edited, cfg);
  return {answer(edited, query, cfg), implication_delta(before, after)};
}

}  // namespace rls
