// learn/split.h

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

#ifndef RRASSESS_LEARN_SPLIT_H_
#define RRASSESS_LEARN_SPLIT_H_

#include <cstdint>
#include <vector>

namespace rrassess::learn {

struct SplitSpec {
  double train_fraction = 0.70;
  bool stratified = true;
  uint64_t seed = 0;
};

struct SplitIndices {
  std::vector<std::size_t> train;  // ascending
  std::vector<std::size_t> test;   // ascending
};

/// Seeded 70/30 split. Under stratification each class in `classes` gets
/// floor(fraction * n_class + 0.5) training rows, drawn after a Fisher-Yates
/// shuffle (mt19937_64, j = rng() % (i + 1) from the top) of that class's
/// rows, classes visited in the order given. Throws DataError if a listed
/// class has no rows and UsageError for a fraction outside (0, 1).
SplitIndices Split(const std::vector<int> &labels,
                   const std::vector<int> &classes, const SplitSpec &spec);

/// Stratified over the classes present in `labels`.
SplitIndices Split(const std::vector<int> &labels, const SplitSpec &spec);

}  // namespace rrassess::learn

#endif  // RRASSESS_LEARN_SPLIT_H_
