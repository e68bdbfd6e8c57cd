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
#include <istream>
#include <sstream>

#include "rls/errors.hpp"
#include "rls/ingest.hpp"
#include "rls_data.hpp"

namespace rls {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Non-comment, non-blank lines split on tabs.
std::vector<std::vector<std::string>> tsv_rows(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (collapse_whitespace(line).empty() || line.front() == '#') continue;
    std::vector<std::string> cells;
    std::size_t start = 0;
    for (;;) {
      auto tab = line.find('\t', start);
      cells.push_back(collapse_whitespace(line.substr(start, tab - start)));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    rows.push_back(std::move(cells));
  }
  return rows;
}

// --- quoted tuple annotations ----------------------------------------------

class AnnotationParser {
 public:
  explicit AnnotationParser(std::string_view text) : text_(text) {}

  Formula parse() {
    std::vector<Literal> lhs = parse_groups();
    skip_space();
    if (at_end()) {
      if (lhs.empty()) fail("empty annotation");
      return Conjunction{std::move(lhs)};
    }
    if (text_.substr(pos_, 2) != "->") fail("expected '->' or end of annotation");
    pos_ += 2;
    std::vector<Literal> rhs = parse_groups();
    skip_space();
    if (!at_end()) fail("trailing text after consequent");
    if (lhs.empty()) fail("rule without antecedents");
    if (rhs.size() != 1) fail("rule must have exactly one consequent tuple");
    return RuleFormula{std::move(lhs), rhs.front()};
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::BadAnnotation,
                why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  // Zero or more parenthesized groups, flattening nested tuple lists.
  std::vector<Literal> parse_groups() {
    std::vector<Literal> out;
    for (;;) {
      skip_space();
      if (at_end() || text_[pos_] != '(') return out;
      parse_group(out);
    }
  }

  void parse_group(std::vector<Literal>& out) {
    ++pos_;  // '('
    skip_space();
    if (!at_end() && text_[pos_] == '(') {
      while (true) {
        skip_space();
        if (at_end()) fail("unterminated group");
        if (text_[pos_] == ')') { ++pos_; return; }
        if (text_[pos_] != '(') fail("expected '('");
        parse_group(out);
      }
    }
    std::vector<std::string> fields;
    while (true) {
      skip_space();
      if (at_end()) fail("unterminated tuple");
      char c = text_[pos_];
      if (c == ')') { ++pos_; break; }
      if (c != '"' && c != '\'') fail("expected a quoted field");
      auto close = text_.find(c, pos_ + 1);
      if (close == std::string_view::npos) fail("unterminated quote");
      fields.emplace_back(text_.substr(pos_ + 1, close - pos_ - 1));
      pos_ = close + 1;
    }
    if (fields.size() != 4) {
      fail("tuple has " + std::to_string(fields.size()) + " fields, expected 4");
    }
    Polarity pol;
    if (fields[3] == "+") {
      pol = Polarity::Positive;
    } else if (fields[3] == "-") {
      pol = Polarity::Negative;
    } else {
      fail("missing polarity symbol, got '" + fields[3] + "'");
    }
    auto kind = collapse_whitespace(fields[1]) == "is" ? LiteralKind::Attribute
                                                        : LiteralKind::Relation;
    try {
      out.emplace_back(kind, Term(fields[0]), Term(fields[1]), Term(fields[2]), pol);
    } catch (const Error& e) {
      fail(e.what());
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// --- bracketed metadata cells ----------------------------------------------

// Quoted strings and bare words, in order; brackets and punctuation dropped.
std::vector<std::string> cell_words(std::string_view cell) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < cell.size()) {
    char c = cell[i];
    if (c == '"' || c == '\'') {
      auto close = cell.find(c, i + 1);
      if (close == std::string_view::npos) close = cell.size();
      out.emplace_back(cell.substr(i + 1, close - i - 1));
      i = close + 1;
      continue;
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-') {
      std::size_t start = i;
      while (i < cell.size() && (std::isalnum(static_cast<unsigned char>(cell[i])) ||
                                 cell[i] == '_' || cell[i] == '-')) {
        ++i;
      }
      out.emplace_back(cell.substr(start, i - start));
      continue;
    }
    ++i;
  }
  return out;
}

Gender parse_gender(const std::string& word) {
  std::string w;
  for (char c : word) w.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (w == "female" || w == "f") return Gender::Female;
  if (w == "male" || w == "m") return Gender::Male;
  throw Error(ErrorCode::BadAnnotation, "unknown gender '" + word + "'");
}

std::vector<std::string> csv_fields(std::istream& in, bool& ok) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false, any = false;
  char c;
  while (in.get(c)) {
    any = true;
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          field.push_back('"');
          in.get(c);
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      break;
    } else if (c != '\r') {
      field.push_back(c);
    }
  }
  ok = any;
  if (any) fields.push_back(std::move(field));
  return fields;
}

}  // namespace

Formula convert_ruletaker(std::string_view annotation) {
  return AnnotationParser(annotation).parse();
}

// --- kinship ---------------------------------------------------------------

InverseTable InverseTable::parse(std::string_view tsv) {
  InverseTable t;
  for (const auto& row : tsv_rows(tsv)) {
    if (row.size() != 3) {
      throw Error(ErrorCode::InvalidArgument, "inverse table rows need 3 columns");
    }
    t.entries_[row[0]] = {row[1], row[2]};
  }
  return t;
}

InverseTable InverseTable::load(const std::string& path) { return parse(read_file(path)); }

const InverseTable& InverseTable::builtin() {
  static const InverseTable table = parse(data::kInverseRelations);
  return table;
}

std::optional<std::string> InverseTable::inverse(const std::string& relation,
                                                 Gender gender) const {
  auto it = entries_.find(relation);
  if (it == entries_.end()) return std::nullopt;
  return gender == Gender::Female ? it->second.first : it->second.second;
}

Formula convert_clutrr(const std::vector<std::pair<std::string, std::string>>& edges,
                       const std::vector<std::string>& edge_types,
                       const std::map<std::string, Gender>& genders,
                       const InverseTable& table) {
  if (edges.size() != edge_types.size()) {
    throw Error(ErrorCode::BadAnnotation, "edges and edge_types differ in length");
  }
  if (edges.empty()) throw Error(ErrorCode::BadAnnotation, "no edges");
  Conjunction out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& [from, to] = edges[i];
    for (const auto* person : {&from, &to}) {
      if (!genders.count(*person)) {
        throw Error(ErrorCode::MissingGender, "no gender for " + *person);
      }
    }
    auto inv = table.inverse(edge_types[i], genders.at(from));
    if (!inv) throw Error(ErrorCode::UnknownRelation, "no inverse for relation " + edge_types[i]);
    out.literals.push_back(Literal::rel(from, edge_types[i], to));
    out.literals.push_back(Literal::rel(to, *inv, from));
  }
  return out;
}

std::vector<ClutrrRecord> load_clutrr_csv(std::istream& in) {
  bool ok = false;
  auto header = csv_fields(in, ok);
  if (!ok) throw Error(ErrorCode::BadAnnotation, "empty CLUTRR file");
  auto column = [&](std::initializer_list<std::string_view> names) -> std::size_t {
    for (std::size_t i = 0; i < header.size(); ++i) {
      for (auto n : names) {
        if (collapse_whitespace(header[i]) == n) return i;
      }
    }
    throw Error(ErrorCode::BadAnnotation,
                "CLUTRR header lacks column " + std::string(*names.begin()));
  };
  std::size_t id_col = column({"story_id", "id", ""});
  std::size_t edges_col = column({"edges"});
  std::size_t types_col = column({"edge_types"});
  std::size_t genders_col = column({"genders"});

  std::vector<ClutrrRecord> out;
  while (true) {
    auto row = csv_fields(in, ok);
    if (!ok) break;
    if (row.size() == 1 && collapse_whitespace(row[0]).empty()) continue;
    auto cell = [&](std::size_t i) -> const std::string& {
      if (i >= row.size()) throw Error(ErrorCode::BadAnnotation, "short CLUTRR row");
      return row[i];
    };
    ClutrrRecord r;
    r.story_id = collapse_whitespace(cell(id_col));
    auto names = cell_words(cell(edges_col));
    if (names.size() % 2 != 0) throw Error(ErrorCode::BadAnnotation, "odd edge endpoint list");
    for (std::size_t i = 0; i < names.size(); i += 2) r.edges.emplace_back(names[i], names[i + 1]);
    r.edge_types = cell_words(cell(types_col));
    auto g = cell_words(cell(genders_col));
    if (g.size() % 2 != 0) throw Error(ErrorCode::BadAnnotation, "odd gender list");
    for (std::size_t i = 0; i < g.size(); i += 2) r.genders[g[i]] = parse_gender(g[i + 1]);
    out.push_back(std::move(r));
  }
  return out;
}

// --- commonsense triples ---------------------------------------------------

PredicateMap PredicateMap::parse(std::string_view tsv) {
  PredicateMap m;
  for (const auto& row : tsv_rows(tsv)) {
    if (row.size() != 2) throw Error(ErrorCode::InvalidArgument, "predicate rows need 2 columns");
    m.entries_[row[0]] = row[1];
  }
  return m;
}

PredicateMap PredicateMap::load(const std::string& path) { return parse(read_file(path)); }

const PredicateMap& PredicateMap::builtin() {
  static const PredicateMap map = parse(data::kLotPredicates);
  return map;
}

std::string PredicateMap::phrase(std::string_view predicate) const {
  if (auto it = entries_.find(predicate); it != entries_.end()) return it->second;
  std::string_view name = predicate;
  if (name.starts_with("/r/")) name.remove_prefix(3);
  std::string out;
  for (std::size_t i = 0; i < name.size(); ++i) {
    char c = name[i];
    if (c == '_' || c == '/') {
      out.push_back(' ');
      continue;
    }
    bool upper = std::isupper(static_cast<unsigned char>(c));
    if (upper && i > 0 && !out.empty() && out.back() != ' ') out.push_back(' ');
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return collapse_whitespace(out);
}

Formula convert_lot(const nlohmann::json& record, const PredicateMap& predicates) {
  auto field = [&](const char* key) {
    if (!record.contains(key) || !record.at(key).is_string()) {
      throw Error(ErrorCode::BadAnnotation, std::string("record lacks '") + key + "'");
    }
    return record.at(key).get<std::string>();
  };
  auto validity = collapse_whitespace(field("validity"));
  Polarity pol;
  if (validity == "always true") {
    pol = Polarity::Positive;
  } else if (validity == "never true") {
    pol = Polarity::Negative;
  } else {
    throw Error(ErrorCode::UnknownValidity, "unknown validity '" + validity + "'");
  }
  return Conjunction{{Literal::attr(field("subject"), predicates.phrase(field("predicate")),
                                    field("object"), pol)}};
}

}  // namespace rls
