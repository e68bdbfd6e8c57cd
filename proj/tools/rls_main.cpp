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

// rls: command-line front end.

#include <CLI11.hpp>

#include <csignal>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "http/http_server.hpp"
#include "rls/codec.hpp"
#include "rls/errors.hpp"
#include "rls/eval.hpp"
#include "rls/generator.hpp"
#include "rls/ingest.hpp"
#include "rls/reasoner.hpp"
#include "rls/service.hpp"
#include "rls/session.hpp"
#include "rls/theory_json.hpp"

namespace {

using nlohmann::json;
using namespace rls;

struct Common {
  std::string unifier = "exact";
  int max_depth = -1;
  std::string source = "gold";
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string theory_path;

  ReasonerConfig reasoner() const {
    ReasonerConfig cfg;
    cfg.unifier = UnifierChoice::parse(unifier);
    if (max_depth >= 0) cfg.max_depth = max_depth;
    return cfg;
  }
};

// Owns whatever a FormulaSource points at.
struct SourceHolder {
  PredictionMap predictions;
  FormulaSource source;

  explicit SourceHolder(const std::string& spec) {
    if (spec == "gold") {
      source = FormulaSource::gold();
    } else if (spec == "template") {
      source = FormulaSource::templates();
    } else if (spec.rfind("predictions:", 0) == 0) {
      std::string path = spec.substr(12);
      std::ifstream in(path);
      if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
      predictions = load_predictions(in);
      source = FormulaSource::from_predictions(predictions);
    } else {
      throw Error(ErrorCode::InvalidArgument,
                  "--source must be gold, template or predictions:<file>");
    }
  }
  SourceHolder(const SourceHolder&) = delete;
};

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  return in;
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// A theory file (.json) or a sentences file (.jsonl) read through --source.
Theory load_theory(const Common& c) {
  if (c.theory_path.empty()) throw Error(ErrorCode::InvalidArgument, "--theory is required");
  if (ends_with(c.theory_path, ".jsonl")) {
    auto in = open_in(c.theory_path);
    auto records = read_sentences_jsonl(in);
    SourceHolder src(c.source);
    return theory_from_sentences(records, src.source);
  }
  return load_theory_file(c.theory_path);
}

void add_common(CLI::App* app, Common& c, bool theory, bool format = true) {
  app->add_option("--unifier", c.unifier, "exact | normalized | token:<threshold>");
  app->add_option("--max-depth", c.max_depth, "Proof depth limit (default unlimited)");
  app->add_option("--source", c.source, "gold | template | predictions:<file>");
  app->add_option("--seed", c.seed, "Random seed");
  if (format) {
    app->add_option("--format", c.format, "json | markdown")->check(CLI::IsMember({"json", "markdown"}));
  }
  if (theory) app->add_option("--theory", c.theory_path, "Theory JSON or sentences JSONL");
}

void print(const Common& c, const json& j, const std::string& markdown) {
  if (c.format == "markdown") {
    std::cout << markdown;
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

std::string escape_cell(std::string s) {
  for (std::size_t p = s.find('|'); p != std::string::npos; p = s.find('|', p + 2)) s.replace(p, 1, "\\|");
  return s;
}

json literal_json(const Literal& l) {
  json j = to_json(l);
  j["encoded"] = encode(l);
  return j;
}

// --- subcommands -----------------------------------------------------------

int cmd_extract(const Common& c, const std::string& input, const std::vector<std::string>& texts) {
  std::vector<SentenceRecord> records;
  if (!input.empty()) {
    auto in = open_in(input);
    records = read_sentences_jsonl(in);
  }
  int k = 0;
  for (const auto& t : texts) records.push_back({"t" + std::to_string(++k), t, SentenceRole::Fact, std::nullopt});
  std::string spec = c.source == "gold" ? "template" : c.source;
  SourceHolder src(spec);
  int failed = 0;
  std::ostringstream md;
  md << "| id | sentence | encoded |\n|---|---|---|\n";
  for (const auto& r : records) {
    try {
      std::string enc = encode(resolve_formula(r, src.source));
      if (c.format == "json") {
        std::cout << json{{"id", r.id}, {"predicted", enc}}.dump() << "\n";
      }
      md << "| " << r.id << " | " << escape_cell(r.text) << " | " << escape_cell(enc) << " |\n";
    } catch (const Error& e) {
      ++failed;
      std::cerr << r.id << ": " << to_string(e.code()) << ": " << e.what() << "\n";
      md << "| " << r.id << " | " << escape_cell(r.text) << " | (" << to_string(e.code()) << ") |\n";
    }
  }
  if (c.format == "markdown") std::cout << md.str();
  return failed ? 1 : 0;
}

int cmd_reason(const Common& c, const std::string& query) {
  Theory t = load_theory(c);
  auto cfg = c.reasoner();
  if (!query.empty()) {
    Answer a = answer(t, decode_literal(query), cfg);
    std::string md = std::string(a.truth ? "true" : "false") +
                     (!a.truth && a.proof.root.kind == ProofKind::Naf ? " (CWA)" : "") + "\n\n```\n" +
                     render_proof(a.proof) + "```\n";
    json j = {{"truth", a.truth}, {"truncated", a.truncated}, {"proof", to_json(a.proof)}};
    if (a.query_unification) j["query_unification"] = to_json(*a.query_unification);
    print(c, j, md);
    return 0;
  }
  auto cl = closure(t, cfg);
  json derived = json::array();
  std::ostringstream md;
  md << "| literal | depth |\n|---|---:|\n";
  auto add = [&](const Literal& l, int d) {
    json e = literal_json(l);
    e["depth"] = d;
    derived.push_back(std::move(e));
    md << "| " << escape_cell(to_string(l)) << " | " << d << " |\n";
  };
  for (const auto& [l, d] : cl.derived) add(l, d);
  for (const auto& [l, d] : cl.explicit_negatives) add(l, d);
  json unifs = json::array();
  for (const auto& u : cl.unifications_used) unifs.push_back(to_json(u));
  json truncated = json::array();
  for (const auto& l : cl.truncated) truncated.push_back(literal_json(l));
  print(c, {{"derived", derived}, {"unifications", unifs}, {"truncated", truncated}, {"warnings", cl.warnings}},
        md.str());
  return 0;
}

int cmd_eval(const Common& c, const std::string& dataset_path, unsigned workers) {
  auto in = open_in(dataset_path);
  auto dataset = read_dataset_jsonl(in);
  SourceHolder src(c.source);
  EvalConfig cfg{src.source, c.reasoner(), workers};
  EvalReport report = eval_answers(dataset, cfg);
  if (src.source.kind != FormulaSource::Kind::Gold) {
    std::vector<SentenceRecord> all;
    for (const auto& inst : dataset) {
      all.insert(all.end(), inst.sentences.begin(), inst.sentences.end());
      all.push_back(inst.query);
    }
    auto em = eval_extraction(all, src.source);
    report.em = em.em;
    for (auto& f : em.failures) report.failures.push_back(std::move(f));
  }
  print(c, to_json(report), render_markdown(report));
  return 0;
}

int cmd_enumerate(const Common& c) {
  Theory t = load_theory(c);
  json list = json::array();
  std::ostringstream md;
  md << "| literal | depth |\n|---|---:|\n";
  for (const auto& i : enumerate_implications(t, c.reasoner())) {
    json e = literal_json(i.literal);
    e["depth"] = i.depth;
    list.push_back(std::move(e));
    md << "| " << escape_cell(to_string(i.literal)) << " | " << i.depth << " |\n";
  }
  print(c, {{"implications", list}}, md.str());
  return 0;
}

int cmd_abduce(const Common& c, const std::string& query, std::size_t max_size) {
  Theory t = load_theory(c);
  json sets = json::array();
  std::ostringstream md;
  for (const auto& set : abduce(t, decode_literal(query), max_size, c.reasoner())) {
    json s = json::array();
    std::string line;
    for (const auto& l : set) {
      s.push_back(literal_json(l));
      line += (line.empty() ? "" : " + ") + to_string(l);
    }
    sets.push_back(std::move(s));
    md << "- " << line << "\n";
  }
  print(c, {{"sets", sets}}, md.str());
  return 0;
}

int cmd_contradictions(const Common& c) {
  Theory t = load_theory(c);
  json list = json::array();
  std::ostringstream md;
  for (const auto& [p, n] : detect_contradictions(t, c.reasoner())) {
    list.push_back({{"positive", literal_json(p)}, {"negative", literal_json(n)}});
    md << "- " << to_string(p) << " vs " << to_string(n) << "\n";
  }
  print(c, {{"contradictions", list}}, md.str());
  return 0;
}

int cmd_gen(const Common& c, GenParams p, const std::vector<int>& depths, int count,
            const std::string& out_path, const std::string& sentences_out) {
  p.seed = c.seed;
  std::vector<QAInstance> dataset;
  for (int d : depths) {
    auto part = generate_instances(p, d, count);
    dataset.insert(dataset.end(), part.begin(), part.end());
  }
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw Error(ErrorCode::Io, "cannot write " + out_path);
    out = &file;
  }
  write_dataset_jsonl(*out, dataset);
  if (!sentences_out.empty()) {
    std::ofstream s(sentences_out);
    if (!s) throw Error(ErrorCode::Io, "cannot write " + sentences_out);
    for (const auto& inst : dataset) {
      write_sentences_jsonl(s, inst.sentences);
      write_sentences_jsonl(s, {inst.query});
    }
  }
  return 0;
}

int cmd_repl(const Common& c) {
  Session session(c.theory_path.empty() ? Theory{} : load_theory(c), c.reasoner());
  run_repl(session, std::cin, std::cout, true);
  return 0;
}

rls::HttpServer* g_server = nullptr;

int cmd_serve(const Common& c, ServeOptions opts) {
  Service service(c.theory_path.empty() ? Theory{} : load_theory(c), c.reasoner());
  HttpServer server(service, opts);
  g_server = &server;
  std::signal(SIGINT, [](int) { if (g_server) g_server->stop(); });
  std::signal(SIGTERM, [](int) { if (g_server) g_server->stop(); });
  std::cerr << "serving on http://" << opts.host << ":" << opts.port << "\n";
  server.run();
  g_server = nullptr;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Logical-structure extraction and reasoning"};
  app.require_subcommand(1);
  Common c;

  auto* extract = app.add_subcommand("extract", "Extract encoded formulas from sentences");
  add_common(extract, c, false);
  std::string input;
  std::vector<std::string> texts;
  extract->add_option("--input", input, "Sentences JSONL");
  extract->add_option("--text", texts, "Sentence to extract (repeatable)");

  auto* reason = app.add_subcommand("reason", "Closure, or answer one query with its proof");
  add_common(reason, c, true);
  std::string query;
  reason->add_option("--query", query, "Encoded query literal");

  auto* eval = app.add_subcommand("eval", "Accuracy per depth and extraction EM on a dataset");
  add_common(eval, c, false);
  std::string dataset;
  unsigned workers = 0;
  eval->add_option("--dataset", dataset, "Dataset JSONL (see gen)")->required();
  eval->add_option("--workers", workers, "Worker threads (0 = hardware)");

  auto* enumerate = app.add_subcommand("enumerate", "List derived, non-asserted atoms");
  add_common(enumerate, c, true);

  auto* abd = app.add_subcommand("abduce", "Minimal fact sets that make a query provable");
  add_common(abd, c, true);
  std::size_t max_size = 2;
  abd->add_option("--query", query, "Encoded query literal")->required();
  abd->add_option("--max-size", max_size, "Largest explanation size");

  auto* contra = app.add_subcommand("contradictions", "Atoms derived with both polarities");
  add_common(contra, c, true);

  auto* gen = app.add_subcommand("gen", "Generate an oracle-labeled dataset");
  add_common(gen, c, false, false);
  GenParams params;
  std::vector<int> depths = {0, 1, 2, 3, 4, 5};
  int count = 10;
  std::string out_path, sentences_out;
  gen->add_option("--depth", depths, "Query depths to generate (repeatable)");
  gen->add_option("--count", count, "Instances per depth");
  gen->add_option("--entities", params.entities);
  gen->add_option("--properties", params.properties);
  gen->add_option("--rules", params.rules);
  gen->add_option("--facts", params.facts);
  gen->add_option("--negation", params.negation_probability, "Negation probability");
  gen->add_option("--relations", params.relation_probability, "Relation literal probability");
  gen->add_option("--out", out_path, "Dataset JSONL (default stdout)");
  gen->add_option("--sentences-out", sentences_out, "Also write every sentence as JSONL");

  auto* repl = app.add_subcommand("repl", "Interactive rectification session");
  add_common(repl, c, true, false);

  auto* serve = app.add_subcommand("serve", "HTTP JSON API for the workbench");
  add_common(serve, c, true, false);
  ServeOptions opts;
  serve->add_option("--host", opts.host);
  serve->add_option("--port", opts.port);
  serve->add_option("--static-dir", opts.static_dir, "Directory served at /");
  serve->add_option("--threads", opts.threads);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*extract) return cmd_extract(c, input, texts);
    if (*reason) return cmd_reason(c, query);
    if (*eval) return cmd_eval(c, dataset, workers);
    if (*enumerate) return cmd_enumerate(c);
    if (*abd) return cmd_abduce(c, query, max_size);
    if (*contra) return cmd_contradictions(c);
    if (*gen) return cmd_gen(c, params, depths, count, out_path, sentences_out);
    if (*repl) return cmd_repl(c);
    if (*serve) return cmd_serve(c, opts);
  } catch (const MalformedSequence& e) {
    std::cerr << "error: MalformedSequence: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
