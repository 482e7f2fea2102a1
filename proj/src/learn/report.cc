// learn/report.cc

// Copyright 2026 The rrassess Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "rrassess/learn/report.h"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "rrassess/common/csv.h"
#include "rrassess/common/error.h"

namespace rrassess::learn {

namespace {

using nlohmann::json;

json CellToJson(const CellResult &c) {
  json j;
  j["accuracy"] = c.accuracy ? json(*c.accuracy) : json(nullptr);
  j["n_train"] = c.n_train;
  j["n_test"] = c.n_test;
  j["confusion"] = c.confusion;
  j["note"] = c.note;
  return j;
}

CellResult CellFromJson(const json &j) {
  CellResult c;
  if (!j.at("accuracy").is_null()) c.accuracy = j.at("accuracy").get<double>();
  c.n_train = j.at("n_train").get<std::size_t>();
  c.n_test = j.at("n_test").get<std::size_t>();
  c.confusion = j.at("confusion").get<std::array<std::array<int, 3>, 3>>();
  c.note = j.at("note").get<std::string>();
  return c;
}

std::string Cell(const CellResult &c) {
  if (!c.accuracy) return "-";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", *c.accuracy);
  return buf;
}

}  // namespace

std::string ReportToJson(const EvalReport &r) {
  json j;
  j["table"] = r.table;
  j["title"] = r.title;
  j["criterion"] = r.criterion;
  j["features"] = r.features;
  j["mode"] = r.mode;
  j["seed"] = r.seed;
  j["config_hash"] = r.config_hash;
  j["classifiers"] = r.classifiers;
  j["rows"] = json::array();
  for (const auto &row : r.rows) {
    json jr;
    jr["group"] = row.group;
    jr["case"] = row.case_name;
    jr["cells"] = json::array();
    for (const auto &c : row.cells) jr["cells"].push_back(CellToJson(c));
    j["rows"].push_back(jr);
  }
  j["notes"] = r.notes;
  return j.dump(2) + "\n";
}

EvalReport ReportFromJson(const std::string &text) {
  try {
    const json j = json::parse(text);
    EvalReport r;
    r.table = j.at("table").get<std::string>();
    r.title = j.at("title").get<std::string>();
    r.criterion = j.at("criterion").get<std::string>();
    r.features = j.at("features").get<std::string>();
    r.mode = j.at("mode").get<std::string>();
    r.seed = j.at("seed").get<uint64_t>();
    r.config_hash = j.at("config_hash").get<std::string>();
    r.classifiers = j.at("classifiers").get<std::vector<std::string>>();
    for (const auto &jr : j.at("rows")) {
      GridRow row;
      row.group = jr.at("group").get<std::string>();
      row.case_name = jr.at("case").get<std::string>();
      for (const auto &jc : jr.at("cells")) row.cells.push_back(CellFromJson(jc));
      r.rows.push_back(std::move(row));
    }
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
  } catch (const json::exception &e) {
    throw DataError(std::string("report: ") + e.what());
  }
}

std::string RenderReport(const EvalReport &r) {
  const bool grouped = std::any_of(r.rows.begin(), r.rows.end(),
                                   [](const GridRow &g) { return !g.group.empty(); });
  std::vector<std::vector<std::string>> lines;
  std::vector<std::string> header;
  if (grouped) header.push_back("Feature set");
  header.push_back(grouped ? "Day" : "Case");
  for (const auto &c : r.classifiers) header.push_back(ModelDisplayName(ModelKindFromName(c)));
  lines.push_back(header);
  for (const auto &row : r.rows) {
    std::vector<std::string> line;
    if (grouped) line.push_back(row.group);
    line.push_back(CaseDisplayName(row.case_name));
    for (const auto &c : row.cells) line.push_back(Cell(c));
    lines.push_back(line);
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto &l : lines)
    for (std::size_t i = 0; i < l.size(); ++i) width[i] = std::max(width[i], l[i].size());
  std::ostringstream out;
  out << r.title << "\n";
  out << "criterion: " << r.criterion << "  features: " << r.features
      << "  mode: " << r.mode << "  seed: " << r.seed
      << "  config: " << r.config_hash << "\n";
  for (std::size_t li = 0; li < lines.size(); ++li) {
    for (std::size_t i = 0; i < lines[li].size(); ++i) {
      if (i) out << "  ";
      std::string cell = lines[li][i];
      cell.resize(width[i], ' ');
      out << cell;
    }
    out << "\n";
    if (li == 0) {
      std::size_t total = 0;
      for (std::size_t w : width) total += w + 2;
      out << std::string(total - 2, '-') << "\n";
    }
  }
  for (const auto &n : r.notes) out << "note: " << n << "\n";
  return out.str();
}

std::string ConfusionCsv(const EvalReport &r) {
  CsvTable t;
  t.comments = {"table=" + r.table + " seed=" + std::to_string(r.seed) +
                " config=" + r.config_hash};
  t.header = {"group", "case", "classifier", "true_label", "basic", "average",
              "advance"};
  static const char *kNames[3] = {"basic", "average", "advance"};
  for (const auto &row : r.rows)
    for (std::size_t k = 0; k < row.cells.size(); ++k) {
      const auto &c = row.cells[k];
      if (!c.accuracy) continue;
      for (int i = 0; i < 3; ++i)
        t.rows.push_back({row.group.empty() ? "-" : row.group, row.case_name,
                          r.classifiers.at(k), kNames[i],
                          std::to_string(c.confusion[i][0]),
                          std::to_string(c.confusion[i][1]),
                          std::to_string(c.confusion[i][2])});
    }
  return t.Serialize();
}

}  // namespace rrassess::learn
