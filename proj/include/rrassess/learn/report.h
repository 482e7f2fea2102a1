// learn/report.h

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

#ifndef RRASSESS_LEARN_REPORT_H_
#define RRASSESS_LEARN_REPORT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "rrassess/learn/grid.h"

namespace rrassess::learn {

/// One accuracy table. Prosodic tables have one row per (feature set, day);
/// the others one row per case.
struct EvalReport {
  std::string table;      // "table1" .. "table4"
  std::string title;
  std::string criterion;  // rating criterion used as label
  std::string features;   // prosody, lexical, syntactic, fused
  std::string mode;       // fragment or utterance
  uint64_t seed = 0;
  std::string config_hash;
  std::vector<std::string> classifiers;
  std::vector<GridRow> rows;
  std::vector<std::string> notes;

  bool operator==(const EvalReport &) const = default;
};

std::string ReportToJson(const EvalReport &r);
/// Throws DataError on malformed input.
EvalReport ReportFromJson(const std::string &text);

/// Fixed-width text table: accuracy with two decimals, "-" for null cells.
std::string RenderReport(const EvalReport &r);

/// group,case,classifier,true_label,basic,average,advance rows.
std::string ConfusionCsv(const EvalReport &r);

}  // namespace rrassess::learn

#endif  // RRASSESS_LEARN_REPORT_H_
