// learn/split.cc

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

#include "rrassess/learn/split.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "rrassess/common/error.h"
#include "rrassess/learn/matrix.h"

namespace rrassess::learn {

namespace {

void Shuffle(std::vector<std::size_t> *v, std::mt19937_64 *rng) {
  for (std::size_t i = v->size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>((*rng)() % i);
    std::swap((*v)[i - 1], (*v)[j]);
  }
}

std::size_t TrainCount(double fraction, std::size_t n) {
  return static_cast<std::size_t>(std::floor(fraction * n + 0.5));
}

}  // namespace

SplitIndices Split(const std::vector<int> &labels,
                   const std::vector<int> &classes, const SplitSpec &spec) {
  if (!(spec.train_fraction > 0.0 && spec.train_fraction < 1.0))
    throw UsageError("split: train fraction must lie in (0, 1)");
  std::mt19937_64 rng(spec.seed);
  SplitIndices out;
  std::vector<std::vector<std::size_t>> groups;
  if (spec.stratified) {
    for (int c : classes) {
      std::vector<std::size_t> rows;
      for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == c) rows.push_back(i);
      if (rows.empty())
        throw DataError("split: class " + std::to_string(c) +
                        " has no instances");
      groups.push_back(std::move(rows));
    }
  } else {
    std::vector<std::size_t> rows(labels.size());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    groups.push_back(std::move(rows));
  }
  for (auto &rows : groups) {
    Shuffle(&rows, &rng);
    const std::size_t k = TrainCount(spec.train_fraction, rows.size());
    out.train.insert(out.train.end(), rows.begin(), rows.begin() + k);
    out.test.insert(out.test.end(), rows.begin() + k, rows.end());
  }
  std::sort(out.train.begin(), out.train.end());
  std::sort(out.test.begin(), out.test.end());
  return out;
}

SplitIndices Split(const std::vector<int> &labels, const SplitSpec &spec) {
  return Split(labels, ClassesOf(labels), spec);
}

}  // namespace rrassess::learn
