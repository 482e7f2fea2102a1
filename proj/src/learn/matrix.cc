// learn/matrix.cc

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

#include "rrassess/learn/matrix.h"

#include <algorithm>
#include <set>

#include "rrassess/common/error.h"

namespace rrassess::learn {

Dataset Dataset::Subset(const std::vector<std::size_t> &rows) const {
  Dataset out;
  out.x.reserve(rows.size());
  out.y.reserve(rows.size());
  for (std::size_t r : rows) {
    out.x.push_back(x.at(r));
    out.y.push_back(y.at(r));
  }
  return out;
}

void LabeledMatrix::AddRow(std::vector<double> features, corpus::Label label,
                           const corpus::SessionKey &key) {
  data.x.push_back(std::move(features));
  data.y.push_back(corpus::LabelIndex(label));
  keys.push_back(key);
}

void LabeledMatrix::Validate() const {
  if (data.y.size() != data.x.size() || keys.size() != data.x.size())
    throw DataError("labeled matrix: row bookkeeping mismatch");
  for (std::size_t i = 0; i < data.x.size(); ++i) {
    if (data.x[i].size() != columns.size())
      throw DataError("labeled matrix: row " + std::to_string(i) + " has " +
                      std::to_string(data.x[i].size()) + " values, expected " +
                      std::to_string(columns.size()));
    if (data.y[i] < 0 || data.y[i] > 2)
      throw DataError("labeled matrix: label out of range in row " +
                      std::to_string(i));
  }
}

LabeledMatrix LabeledMatrix::Subset(const std::vector<std::size_t> &rows) const {
  LabeledMatrix out;
  out.columns = columns;
  out.data = data.Subset(rows);
  for (std::size_t r : rows) out.keys.push_back(keys.at(r));
  return out;
}

std::vector<int> ClassesOf(const std::vector<int> &y) {
  std::set<int> s(y.begin(), y.end());
  return {s.begin(), s.end()};
}

}  // namespace rrassess::learn
