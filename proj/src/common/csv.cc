// common/csv.cc

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

#include "rrassess/common/csv.h"

#include <charconv>
#include <cmath>
#include <sstream>

#include "rrassess/common/error.h"

namespace rrassess {

namespace {

void AppendRow(std::string *out, const std::vector<std::string> &fields) {
  for (size_t i = 0; i < fields.size(); ++i) {
    if (fields[i].find_first_of(",\"\n\r") != std::string::npos)
      throw DataError("CSV field needs quoting: " + fields[i]);
    if (i) out->push_back(',');
    out->append(fields[i]);
  }
  out->push_back('\n');
}

std::vector<std::string> SplitFields(const std::string &line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace

std::string CsvTable::Serialize() const {
  std::string out;
  for (const auto &c : comments) out += "# " + c + "\n";
  AppendRow(&out, header);
  for (const auto &r : rows) {
    if (r.size() != header.size())
      throw DataError("CSV row width does not match header");
    AppendRow(&out, r);
  }
  return out;
}

CsvTable CsvTable::Parse(const std::string &text) {
  CsvTable t;
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      t.comments.push_back(line.size() > 2 ? line.substr(2) : "");
      continue;
    }
    auto fields = SplitFields(line);
    if (!have_header) {
      t.header = std::move(fields);
      have_header = true;
    } else {
      if (fields.size() != t.header.size())
        throw DataError("CSV row has " + std::to_string(fields.size()) +
                        " fields, header has " +
                        std::to_string(t.header.size()));
      t.rows.push_back(std::move(fields));
    }
  }
  return t;
}

int CsvTable::Column(const std::string &name) const {
  for (size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return static_cast<int>(i);
  return -1;
}

std::string FormatReal(std::optional<double> v) {
  if (!v) return "NA";
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), *v);
  return std::string(buf, res.ptr);
}

std::optional<double> ParseReal(const std::string &field) {
  if (field == "NA" || field.empty()) return std::nullopt;
  double v = 0.0;
  auto res = std::from_chars(field.data(), field.data() + field.size(), v);
  if (res.ec != std::errc() || res.ptr != field.data() + field.size())
    throw DataError("not a number: '" + field + "'");
  return v;
}

}  // namespace rrassess
