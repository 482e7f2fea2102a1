// learn/grid.h

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

#ifndef RRASSESS_LEARN_GRID_H_
#define RRASSESS_LEARN_GRID_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rrassess/corpus/types.h"
#include "rrassess/learn/matrix.h"
#include "rrassess/learn/model.h"
#include "rrassess/learn/split.h"

namespace rrassess::learn {

/// all, day-1, day-2, day-3, article-1, article-2
const std::array<std::string, 6> &CaseNames();
/// "All", "Day-1", ..., "Article-2"
std::string CaseDisplayName(std::string_view case_name);
/// Throws UsageError for an unknown case name.
bool CaseIncludes(std::string_view case_name, const corpus::SessionKey &key);

struct CellResult {
  std::optional<double> accuracy;  // percent
  std::size_t n_train = 0;
  std::size_t n_test = 0;
  // confusion[true][predicted] over basic, average, advance.
  std::array<std::array<int, 3>, 3> confusion{};
  std::string note;

  bool operator==(const CellResult &) const = default;
};

struct GridRow {
  std::string group;  // feature set for prosodic tables, empty otherwise
  std::string case_name;
  std::vector<CellResult> cells;  // one per kModelKinds entry

  bool operator==(const GridRow &) const = default;
};

struct GridOptions {
  uint64_t seed = 0;
  double train_fraction = 0.70;
  ModelSpec model;  // hyperparameters; kind and seed are set per cell
};

/// Split seed for a (group, case) cell and model seed for one classifier in
/// it; both derive from the global seed only.
uint64_t CellSplitSeed(uint64_t seed, std::string_view group,
                       std::string_view case_name);
uint64_t CellModelSeed(uint64_t split_seed, ModelKind kind);

/// A row whose cells are all null with the given note.
GridRow NullRow(std::string group, std::string case_name, std::string note);

/// Fits every classifier on the stratified train split of the case subset
/// (standardized with training-row statistics) and scores the test split.
/// Cells of a subset with no rows, fewer than two classes, or an empty test
/// split are null with a note. Model warnings are appended to `warnings`.
GridRow EvaluateCase(const LabeledMatrix &m, std::string_view case_name,
                     const std::string &group, const GridOptions &opts,
                     std::vector<std::string> *warnings = nullptr);

}  // namespace rrassess::learn

#endif  // RRASSESS_LEARN_GRID_H_
