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

#include "rls/eval.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <istream>
#include <ostream>
#include <regex>
#include <set>
#include <sstream>
#include <thread>

#include "rls/errors.hpp"

namespace rls {
namespace {

using nlohmann::json;

std::string percent(const DepthStats& s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", 100.0 * s.accuracy());
  return buf;
}

struct Outcome {
  bool correct = false;
  std::optional<EvalFailure> failure;
};

Outcome evaluate(const QAInstance& inst, const EvalConfig& cfg) {
  const std::string expected = inst.label ? "true" : "false";
  try {
    Theory t = theory_from_sentences(inst.sentences, cfg.source);
    Formula qf = resolve_formula(inst.query, cfg.source);
    auto* c = std::get_if<Conjunction>(&qf);
    if (!c || c->literals.size() != 1) {
      return {false, EvalFailure{inst.id, expected, "query is not a single literal"}};
    }
    bool truth = answer(t, c->literals.front(), cfg.reasoner).truth;
    if (truth == inst.label) return {true, std::nullopt};
    return {false, EvalFailure{inst.id, expected, truth ? "true" : "false"}};
  } catch (const UnresolvedSentence& e) {
    std::string got = "unresolved:";
    for (const auto& f : e.failures()) got += " " + f.id;
    return {false, EvalFailure{inst.id, expected, got}};
  } catch (const Error& e) {
    return {false, EvalFailure{inst.id, expected, std::string(to_string(e.code())) + ": " + e.what()}};
  } catch (const std::exception& e) {
    return {false, EvalFailure{inst.id, expected, e.what()}};
  }
}

DepthStats stats_from_json(const json& j) {
  DepthStats s;
  s.count = j.at("count").get<int>();
  s.correct = j.at("correct").get<int>();
  if (s.count < 0 || s.correct < 0 || s.correct > s.count) {
    throw Error(ErrorCode::InvalidArgument, "inconsistent counts in report");
  }
  return s;
}

json stats_to_json(const DepthStats& s) {
  return {{"count", s.count}, {"correct", s.correct}, {"accuracy", s.accuracy()}};
}

}  // namespace

DepthStats EvalReport::overall() const {
  DepthStats all;
  for (const auto& [d, s] : per_depth) {
    all.count += s.count;
    all.correct += s.correct;
  }
  return all;
}

EvalReport eval_em(const PredictionMap& predictions, const std::map<std::string, Formula>& golds) {
  EvalReport r;
  r.em = DepthStats{};
  for (const auto& [id, gold] : golds) {
    auto it = predictions.find(id);
    if (it == predictions.end()) {
      throw Error(ErrorCode::MissingPrediction, "no prediction for " + id);
    }
    ++r.em->count;
    const std::string want = encode(gold);
    if (const auto* bad = std::get_if<MalformedSequence>(&it->second)) {
      ++r.malformed_count;
      r.failures.push_back({id, want, std::string("malformed: ") + bad->what()});
      continue;
    }
    std::string got = encode(std::get<Formula>(it->second));
    if (got == want) {
      ++r.em->correct;
    } else {
      r.failures.push_back({id, want, got});
    }
  }
  return r;
}

EvalReport eval_extraction(const std::vector<SentenceRecord>& records,
                           const FormulaSource& source) {
  EvalReport r;
  r.em = DepthStats{};
  for (const auto& rec : records) {
    if (!rec.gold) continue;
    ++r.em->count;
    const std::string want = canonicalize(*rec.gold);
    try {
      std::string got = encode(resolve_formula(rec, source));
      if (got == want) {
        ++r.em->correct;
      } else {
        r.failures.push_back({rec.id, want, got});
      }
    } catch (const MalformedSequence& e) {
      ++r.malformed_count;
      r.failures.push_back({rec.id, want, std::string("malformed: ") + e.what()});
    } catch (const Error& e) {
      r.failures.push_back({rec.id, want, std::string(to_string(e.code())) + ": " + e.what()});
    }
  }
  return r;
}

EvalReport eval_answers(const std::vector<QAInstance>& dataset, const EvalConfig& config) {
  std::vector<Outcome> outcomes(dataset.size());
  unsigned workers = config.workers ? config.workers : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(dataset.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < dataset.size();) {
      outcomes[i] = evaluate(dataset[i], config);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  EvalReport r;
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    auto& s = r.per_depth[dataset[i].depth];
    ++s.count;
    if (outcomes[i].correct) ++s.correct;
    if (outcomes[i].failure) r.failures.push_back(*outcomes[i].failure);
  }
  if (config.source.kind == FormulaSource::Kind::Predictions && config.source.predictions) {
    std::set<std::string> seen;
    for (const auto& inst : dataset) {
      auto count = [&](const SentenceRecord& s) {
        if (!seen.insert(s.id).second) return;
        auto it = config.source.predictions->find(s.id);
        if (it != config.source.predictions->end() &&
            std::holds_alternative<MalformedSequence>(it->second)) {
          ++r.malformed_count;
        }
      };
      for (const auto& s : inst.sentences) count(s);
      count(inst.query);
    }
  }
  return r;
}

json to_json(const QAInstance& inst) {
  json sentences = json::array();
  for (const auto& s : inst.sentences) sentences.push_back(to_json(s));
  return {{"id", inst.id},
          {"sentences", std::move(sentences)},
          {"query", to_json(inst.query)},
          {"label", inst.label},
          {"depth", inst.depth}};
}

QAInstance instance_from_json(const json& j) {
  try {
    QAInstance inst;
    inst.id = j.at("id").get<std::string>();
    for (const auto& s : j.at("sentences")) inst.sentences.push_back(sentence_from_json(s));
    inst.query = sentence_from_json(j.at("query"));
    inst.label = j.at("label").get<bool>();
    inst.depth = j.at("depth").get<int>();
    if (inst.depth < 0) throw Error(ErrorCode::InvalidArgument, "negative depth");
    return inst;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("bad dataset record: ") + e.what());
  }
}

std::vector<QAInstance> read_dataset_jsonl(std::istream& in) {
  std::vector<QAInstance> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (collapse_whitespace(line).empty()) continue;
    try {
      out.push_back(instance_from_json(json::parse(line)));
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::InvalidArgument,
                  "dataset line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

void write_dataset_jsonl(std::ostream& out, const std::vector<QAInstance>& dataset) {
  for (const auto& inst : dataset) out << to_json(inst).dump() << '\n';
}

json to_json(const EvalReport& r) {
  json depths = json::array();
  for (const auto& [d, s] : r.per_depth) {
    json e = stats_to_json(s);
    e["depth"] = d;
    depths.push_back(std::move(e));
  }
  json failures = json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"id", f.id}, {"expected", f.expected}, {"got", f.got}});
  }
  json out = {{"schema", kReportSchema},
              {"per_depth", std::move(depths)},
              {"overall", stats_to_json(r.overall())},
              {"em", r.em ? stats_to_json(*r.em) : json(nullptr)},
              {"malformed_count", r.malformed_count},
              {"failures", std::move(failures)}};
  return out;
}

EvalReport report_from_json(const json& j) {
  try {
    if (!j.is_object() || j.value("schema", "") != kReportSchema) {
      throw Error(ErrorCode::InvalidArgument, "unsupported report schema");
    }
    EvalReport r;
    for (const auto& e : j.at("per_depth")) r.per_depth[e.at("depth").get<int>()] = stats_from_json(e);
    if (j.contains("em") && !j.at("em").is_null()) r.em = stats_from_json(j.at("em"));
    r.malformed_count = j.at("malformed_count").get<int>();
    for (const auto& f : j.at("failures")) {
      r.failures.push_back({f.at("id").get<std::string>(), f.at("expected").get<std::string>(),
                            f.at("got").get<std::string>()});
    }
    if (j.contains("overall") && !(stats_from_json(j.at("overall")) == r.overall())) {
      throw Error(ErrorCode::InvalidArgument, "overall counts disagree with per-depth rows");
    }
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("bad report: ") + e.what());
  }
}

std::string render_markdown(const EvalReport& r) {
  std::ostringstream os;
  os << "| D | #qns | #correct | Accuracy |\n";
  os << "|---|-----:|---------:|---------:|\n";
  int last = 5;
  if (!r.per_depth.empty()) last = std::max(last, r.per_depth.rbegin()->first);
  for (int d = 0; d <= last; ++d) {
    auto it = r.per_depth.find(d);
    DepthStats s = it == r.per_depth.end() ? DepthStats{} : it->second;
    os << "| " << d << " | " << s.count << " | " << s.correct << " | "
       << (s.count ? percent(s) : "-") << " |\n";
  }
  DepthStats all = r.overall();
  os << "| All | " << all.count << " | " << all.correct << " | " << (all.count ? percent(all) : "-")
     << " |\n";
  os << "\n";
  if (r.em) {
    os << "Exact match: " << r.em->correct << "/" << r.em->count << " (" << percent(*r.em) << "%)\n";
  }
  os << "Malformed predictions: " << r.malformed_count << "\n";
  if (!r.failures.empty()) {
    os << "\nFailures:\n\n";
    for (const auto& f : r.failures) {
      os << "- " << f.id << ": expected `" << f.expected << "`, got `" << f.got << "`\n";
    }
  }
  return os.str();
}

EvalReport report_from_markdown(std::string_view text) {
  EvalReport r;
  std::istringstream in{std::string(text)};
  std::string line;
  static const std::regex row(R"(^\| (\d+|All) \| (\d+) \| (\d+) \| ([-0-9.]+) \|$)");
  static const std::regex em(R"(^Exact match: (\d+)/(\d+) .*$)");
  static const std::regex malformed(R"(^Malformed predictions: (\d+)$)");
  static const std::regex failure(R"(^- (.+?): expected `(.*)`, got `(.*)`$)");
  std::smatch m;
  while (std::getline(in, line)) {
    if (std::regex_match(line, m, row)) {
      if (m[1] == "All") continue;
      DepthStats s{std::stoi(m[2]), std::stoi(m[3])};
      if (s.count > 0) r.per_depth[std::stoi(m[1])] = s;
    } else if (std::regex_match(line, m, em)) {
      r.em = DepthStats{std::stoi(m[2]), std::stoi(m[1])};
    } else if (std::regex_match(line, m, malformed)) {
      r.malformed_count = std::stoi(m[1]);
    } else if (std::regex_match(line, m, failure)) {
      r.failures.push_back({m[1], m[2], m[3]});
    }
  }
  return r;
}

}  // namespace rls
