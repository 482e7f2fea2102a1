// learn/matrix.h

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

#ifndef RRASSESS_LEARN_MATRIX_H_
#define RRASSESS_LEARN_MATRIX_H_

#include <cstddef>
#include <string>
#include <vector>

#include "rrassess/corpus/types.h"

namespace rrassess::learn {

/// Dense feature rows with a class index per row (LabelIndex: 0 basic,
/// 1 average, 2 advance). Undefined feature values are NaN until the
/// standardizer imputes them.
struct Dataset {
  std::vector<std::vector<double>> x;
  std::vector<int> y;

  std::size_t size() const { return x.size(); }
  std::size_t dim() const { return x.empty() ? 0 : x.front().size(); }
  Dataset Subset(const std::vector<std::size_t> &rows) const;
};

/// Dataset plus column names and the session each row belongs to.
struct LabeledMatrix {
  std::vector<std::string> columns;
  Dataset data;
  std::vector<corpus::SessionKey> keys;

  std::size_t size() const { return data.size(); }
  void AddRow(std::vector<double> features, corpus::Label label,
              const corpus::SessionKey &key);
  /// Throws DataError if rows are ragged or labels are out of range.
  void Validate() const;
  LabeledMatrix Subset(const std::vector<std::size_t> &rows) const;
};

/// Distinct class indices in ascending order.
std::vector<int> ClassesOf(const std::vector<int> &y);

}  // namespace rrassess::learn

#endif  // RRASSESS_LEARN_MATRIX_H_
