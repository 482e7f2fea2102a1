// learn/tree.cc

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
#include <array>
#include <numeric>

#include "rrassess/learn/classifiers.h"

namespace rrassess::learn {

namespace {

using Counts = std::array<std::size_t, 3>;

double Gini(const Counts &c, std::size_t n) {
  if (n == 0) return 0.0;
  double s = 0.0;
  for (std::size_t v : c) {
    const double p = static_cast<double>(v) / static_cast<double>(n);
    s += p * p;
  }
  return 1.0 - s;
}

int Majority(const Counts &c) {
  int best = 0;
  for (int k = 1; k < 3; ++k)
    if (c[k] > c[best]) best = k;
  return best;
}

}  // namespace

DecisionTreeClassifier::DecisionTreeClassifier(const Dataset &train,
                                               const Options &opts,
                                               uint64_t seed) {
  std::vector<std::size_t> rows(train.size());
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  Build(train, std::move(rows), 0, opts, &rng);
}

DecisionTreeClassifier::DecisionTreeClassifier(
    const Dataset &train, const std::vector<std::size_t> &rows,
    const Options &opts, std::mt19937_64 *rng) {
  Build(train, rows, 0, opts, rng);
}

int DecisionTreeClassifier::Build(const Dataset &train,
                                  std::vector<std::size_t> rows, int depth,
                                  const Options &opts, std::mt19937_64 *rng) {
  const int id = static_cast<int>(nodes_.size());
  nodes_.emplace_back();
  Counts counts{};
  for (std::size_t r : rows) ++counts[train.y[r]];
  nodes_[id].label = Majority(counts);
  const std::size_t n = rows.size();
  const std::size_t min_leaf = static_cast<std::size_t>(std::max(1, opts.min_leaf));
  const bool pure = counts[nodes_[id].label] == n;
  if (pure || n < 2 * min_leaf || (opts.max_depth && depth >= *opts.max_depth))
    return id;

  const std::size_t d = train.dim();
  std::vector<std::size_t> features(d);
  std::iota(features.begin(), features.end(), std::size_t{0});
  std::size_t budget = d;
  if (opts.max_features > 0 && opts.max_features < d) {
    for (std::size_t i = d; i > 1; --i)
      std::swap(features[i - 1], features[(*rng)() % i]);
    budget = opts.max_features;
  }

  const double parent = Gini(counts, n);
  double best_impurity = parent;
  int best_feature = -1;
  double best_threshold = 0.0;
  std::size_t visited = 0;
  std::vector<std::pair<double, int>> column(n);
  for (std::size_t f : features) {
    if (visited == budget) break;
    for (std::size_t i = 0; i < n; ++i)
      column[i] = {train.x[rows[i]][f], train.y[rows[i]]};
    std::sort(column.begin(), column.end());
    if (column.front().first == column.back().first) continue;
    ++visited;
    Counts left{};
    for (std::size_t i = 0; i + 1 < n; ++i) {
      ++left[column[i].second];
      if (column[i].first == column[i + 1].first) continue;
      const std::size_t nl = i + 1, nr = n - nl;
      if (nl < min_leaf || nr < min_leaf) continue;
      Counts right;
      for (int k = 0; k < 3; ++k) right[k] = counts[k] - left[k];
      const double impurity = (static_cast<double>(nl) * Gini(left, nl) +
                               static_cast<double>(nr) * Gini(right, nr)) /
                              static_cast<double>(n);
      if (best_feature < 0 ? impurity <= best_impurity
                           : impurity < best_impurity) {
        best_impurity = impurity;
        best_feature = static_cast<int>(f);
        best_threshold = column[i].first +
                         (column[i + 1].first - column[i].first) / 2.0;
      }
    }
  }
  if (best_feature < 0) return id;

  std::vector<std::size_t> left_rows, right_rows;
  for (std::size_t r : rows)
    (train.x[r][best_feature] <= best_threshold ? left_rows : right_rows)
        .push_back(r);
  nodes_[id].feature = best_feature;
  nodes_[id].threshold = best_threshold;
  const int l = Build(train, std::move(left_rows), depth + 1, opts, rng);
  nodes_[id].left = l;
  const int r = Build(train, std::move(right_rows), depth + 1, opts, rng);
  nodes_[id].right = r;
  return id;
}

int DecisionTreeClassifier::Predict(std::span<const double> x) const {
  int id = 0;
  while (nodes_[id].feature >= 0)
    id = x[nodes_[id].feature] <= nodes_[id].threshold ? nodes_[id].left
                                                       : nodes_[id].right;
  return nodes_[id].label;
}

}  // namespace rrassess::learn
