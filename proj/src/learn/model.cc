// learn/model.cc

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

#include "rrassess/learn/model.h"

#include <cmath>

#include "rrassess/common/error.h"
#include "rrassess/learn/classifiers.h"

namespace rrassess::learn {

std::string ModelKindName(ModelKind k) {
  switch (k) {
    case ModelKind::kSvm: return "svm";
    case ModelKind::kLogisticRegression: return "logistic_regression";
    case ModelKind::kNearestNeighbors: return "nearest_neighbors";
    case ModelKind::kDecisionTree: return "decision_tree";
    case ModelKind::kRandomForest: return "random_forest";
  }
  return "";
}

std::string ModelDisplayName(ModelKind k) {
  switch (k) {
    case ModelKind::kSvm: return "SVM";
    case ModelKind::kLogisticRegression: return "Logistic Regression";
    case ModelKind::kNearestNeighbors: return "Nearest Neighbors";
    case ModelKind::kDecisionTree: return "Decision Tree";
    case ModelKind::kRandomForest: return "Random Forest";
  }
  return "";
}

ModelKind ModelKindFromName(std::string_view name) {
  for (ModelKind k : kModelKinds)
    if (ModelKindName(k) == name) return k;
  throw UsageError("unknown classifier '" + std::string(name) + "'");
}

std::vector<int> Classifier::PredictAll(
    const std::vector<std::vector<double>> &x) const {
  std::vector<int> out;
  out.reserve(x.size());
  for (const auto &row : x) out.push_back(Predict(row));
  return out;
}

int MajorityLabel(const std::vector<int> &y) {
  int counts[3] = {0, 0, 0};
  for (int v : y) ++counts[v];
  int best = 0;
  for (int k = 1; k < 3; ++k)
    if (counts[k] > counts[best]) best = k;
  return best;
}

std::unique_ptr<Classifier> Train(const Dataset &train, const ModelSpec &spec,
                                  std::vector<std::string> *warnings) {
  if (train.size() == 0) throw DataError("train: empty training set");
  if (train.y.size() != train.x.size())
    throw DataError("train: label count does not match row count");
  const std::size_t d = train.dim();
  for (std::size_t i = 0; i < train.size(); ++i) {
    if (train.x[i].size() != d) throw DataError("train: ragged feature rows");
    if (train.y[i] < 0 || train.y[i] > 2)
      throw DataError("train: label out of range");
    for (double v : train.x[i])
      if (!std::isfinite(v)) throw DataError("train: non-finite feature value");
  }
  if (ClassesOf(train.y).size() < 2)
    throw DataError("train: training set has a single class");

  bool degenerate = true;
  for (std::size_t j = 0; j < d && degenerate; ++j)
    for (std::size_t i = 1; i < train.size(); ++i)
      if (train.x[i][j] != train.x[0][j]) {
        degenerate = false;
        break;
      }
  if (degenerate) {
    if (warnings)
      warnings->push_back(ModelKindName(spec.kind) +
                          ": all features constant; predicting majority class");
    return std::make_unique<ConstantClassifier>(MajorityLabel(train.y));
  }

  switch (spec.kind) {
    case ModelKind::kSvm:
      return std::make_unique<SvmClassifier>(
          train, spec.svm_c, spec.svm_gamma.value_or(1.0 / static_cast<double>(d)));
    case ModelKind::kLogisticRegression:
      return std::make_unique<LogisticClassifier>(train, spec.logistic_c);
    case ModelKind::kNearestNeighbors:
      return std::make_unique<KnnClassifier>(train, spec.knn_k);
    case ModelKind::kDecisionTree: {
      DecisionTreeClassifier::Options opts;
      opts.max_depth = spec.tree_max_depth;
      opts.min_leaf = spec.tree_min_leaf;
      return std::make_unique<DecisionTreeClassifier>(train, opts, spec.seed);
    }
    case ModelKind::kRandomForest:
      return std::make_unique<RandomForestClassifier>(train, spec.forest_trees,
                                                      spec.seed);
  }
  throw UsageError("train: unknown classifier kind");
}

}  // namespace rrassess::learn
