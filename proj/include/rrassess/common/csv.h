// common/csv.h

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

#ifndef RRASSESS_COMMON_CSV_H_
#define RRASSESS_COMMON_CSV_H_

#include <optional>
#include <string>
#include <vector>

namespace rrassess {

/// Minimal CSV table. Lines starting with '#' are comments; the writer emits
/// them before the header (used for provenance stamps). Fields never contain
/// commas or quotes in this project, so no quoting is done; the writer rejects
/// such fields.
struct CsvTable {
  std::vector<std::string> comments;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string Serialize() const;
  static CsvTable Parse(const std::string &text);

  /// Index of a header column, or -1.
  int Column(const std::string &name) const;
};

/// Shortest round-trip decimal form, "NA" for nullopt.
std::string FormatReal(std::optional<double> v);
/// Inverse of FormatReal.
std::optional<double> ParseReal(const std::string &field);

}  // namespace rrassess

#endif  // RRASSESS_COMMON_CSV_H_
