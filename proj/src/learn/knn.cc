// learn/knn.cc

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

#include <algorithm>
#include <numeric>

#include "rrassess/common/error.h"
#include "rrassess/learn/classifiers.h"
#include "rrassess/simd/kernels.h"

namespace rrassess::learn {

KnnClassifier::KnnClassifier(const Dataset &train, int k)
    : train_(train), k_(k) {
  if (k < 1) throw UsageError("nearest neighbors: k must be >= 1");
}

int KnnClassifier::Predict(std::span<const double> x) const {
  const std::size_t n = train_.size();
  std::vector<std::pair<double, std::size_t>> dist(n);
  for (std::size_t i = 0; i < n; ++i)
    dist[i] = {simd::SquaredDistance(train_.x[i], x), i};
  const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(k_), n);
  std::partial_sort(dist.begin(), dist.begin() + k, dist.end());
  int votes[3] = {0, 0, 0};
  for (std::size_t r = 0; r < k; ++r) ++votes[train_.y[dist[r].second]];
  const int top = *std::max_element(votes, votes + 3);
  for (std::size_t r = 0; r < k; ++r) {
    const int label = train_.y[dist[r].second];
    if (votes[label] == top) return label;
  }
  return train_.y[dist[0].second];
}

}  // namespace rrassess::learn
