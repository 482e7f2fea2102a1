// learn/grid.cc

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

#include "rrassess/learn/grid.h"

#include "rrassess/common/error.h"
#include "rrassess/common/hash.h"
#include "rrassess/learn/fusion.h"

namespace rrassess::learn {

const std::array<std::string, 6> &CaseNames() {
  static const std::array<std::string, 6> names = {
      "all", "day-1", "day-2", "day-3", "article-1", "article-2"};
  return names;
}

std::string CaseDisplayName(std::string_view case_name) {
  static const std::array<std::string, 6> display = {
      "All", "Day-1", "Day-2", "Day-3", "Article-1", "Article-2"};
  for (std::size_t i = 0; i < CaseNames().size(); ++i)
    if (CaseNames()[i] == case_name) return display[i];
  throw UsageError("unknown evaluation case '" + std::string(case_name) + "'");
}

bool CaseIncludes(std::string_view case_name, const corpus::SessionKey &key) {
  if (case_name == "all") return true;
  for (int d = 1; d <= corpus::kNumDays; ++d)
    if (case_name == "day-" + std::to_string(d)) return key.day == d;
  for (int a = 1; a <= corpus::kNumArticles; ++a)
    if (case_name == "article-" + std::to_string(a)) return key.article == a;
  throw UsageError("unknown evaluation case '" + std::string(case_name) + "'");
}

uint64_t CellSplitSeed(uint64_t seed, std::string_view group,
                       std::string_view case_name) {
  Fnv1a64 h;
  h.Update(group);
  h.Update("/");
  h.Update(case_name);
  return MixSeed(seed, h.Digest());
}

uint64_t CellModelSeed(uint64_t split_seed, ModelKind kind) {
  return MixSeed(split_seed, static_cast<uint64_t>(kind) + 1);
}

GridRow NullRow(std::string group, std::string case_name, std::string note) {
  GridRow row{std::move(group), std::move(case_name), {}};
  for (std::size_t k = 0; k < kModelKinds.size(); ++k) {
    CellResult cell;
    cell.note = note;
    row.cells.push_back(cell);
  }
  return row;
}

GridRow EvaluateCase(const LabeledMatrix &m, std::string_view case_name,
                     const std::string &group, const GridOptions &opts,
                     std::vector<std::string> *warnings) {
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (CaseIncludes(case_name, m.keys[i])) rows.push_back(i);
  const std::string name(case_name);
  if (rows.empty()) return NullRow(group, name, "empty case subset");
  const Dataset subset = m.data.Subset(rows);
  if (ClassesOf(subset.y).size() < 2)
    return NullRow(group, name, "fewer than two classes in case subset");

  SplitSpec spec;
  spec.train_fraction = opts.train_fraction;
  spec.seed = CellSplitSeed(opts.seed, group, case_name);
  const SplitIndices split = Split(subset.y, spec);
  if (split.test.empty()) {
    GridRow row = NullRow(group, name, "empty test split");
    for (auto &c : row.cells) c.n_train = split.train.size();
    return row;
  }
  Dataset train = subset.Subset(split.train);
  Dataset test = subset.Subset(split.test);
  Standardizer scaler;
  scaler.Fit(train.x);
  scaler.TransformInPlace(&train.x);
  scaler.TransformInPlace(&test.x);

  GridRow row{group, name, {}};
  for (ModelKind kind : kModelKinds) {
    ModelSpec ms = opts.model;
    ms.kind = kind;
    ms.seed = CellModelSeed(spec.seed, kind);
    std::vector<std::string> local;
    auto model = Train(train, ms, &local);
    if (warnings)
      for (auto &w : local)
        warnings->push_back((group.empty() ? "" : group + " ") + name + ": " + w);
    CellResult cell;
    cell.n_train = train.size();
    cell.n_test = test.size();
    int correct = 0;
    for (std::size_t i = 0; i < test.size(); ++i) {
      const int pred = model->Predict(test.x[i]);
      ++cell.confusion[test.y[i]][pred];
      correct += pred == test.y[i];
    }
    cell.accuracy = 100.0 * correct / static_cast<double>(test.size());
    if (!local.empty()) cell.note = local.front();
    row.cells.push_back(cell);
  }
  return row;
}

}  // namespace rrassess::learn
