// learn/forest.cc

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

#include <cmath>

#include "rrassess/common/error.h"
#include "rrassess/common/hash.h"
#include "rrassess/learn/classifiers.h"

namespace rrassess::learn {

RandomForestClassifier::RandomForestClassifier(const Dataset &train,
                                               int num_trees, uint64_t seed) {
  if (num_trees < 1) throw UsageError("random forest: need at least one tree");
  const std::size_t n = train.size();
  DecisionTreeClassifier::Options opts;
  opts.max_features = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::sqrt(static_cast<double>(train.dim()))));
  trees_.reserve(static_cast<std::size_t>(num_trees));
  std::vector<std::size_t> rows(n);
  for (int t = 0; t < num_trees; ++t) {
    std::mt19937_64 rng(MixSeed(seed, static_cast<uint64_t>(t)));
    for (auto &r : rows) r = static_cast<std::size_t>(rng() % n);
    trees_.emplace_back(train, rows, opts, &rng);
  }
}

int RandomForestClassifier::Predict(std::span<const double> x) const {
  int votes[3] = {0, 0, 0};
  for (const auto &tree : trees_) ++votes[tree.Predict(x)];
  int best = 0;
  for (int k = 1; k < 3; ++k)
    if (votes[k] > votes[best]) best = k;
  return best;
}

}  // namespace rrassess::learn
