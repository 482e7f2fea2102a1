// learn/model.h

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

#ifndef RRASSESS_LEARN_MODEL_H_
#define RRASSESS_LEARN_MODEL_H_

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rrassess/learn/matrix.h"

namespace rrassess::learn {

enum class ModelKind {
  kSvm,
  kLogisticRegression,
  kNearestNeighbors,
  kDecisionTree,
  kRandomForest,
};

inline constexpr std::array<ModelKind, 5> kModelKinds = {
    ModelKind::kSvm, ModelKind::kLogisticRegression,
    ModelKind::kNearestNeighbors, ModelKind::kDecisionTree,
    ModelKind::kRandomForest};

/// svm, logistic_regression, nearest_neighbors, decision_tree, random_forest
std::string ModelKindName(ModelKind k);
/// Column heading used in rendered tables ("SVM", "Logistic Regression", ...).
std::string ModelDisplayName(ModelKind k);
ModelKind ModelKindFromName(std::string_view name);

struct ModelSpec {
  ModelKind kind = ModelKind::kSvm;
  double svm_c = 1.0;
  std::optional<double> svm_gamma;  // default 1 / d
  double logistic_c = 1.0;
  int knn_k = 5;
  std::optional<int> tree_max_depth;
  int tree_min_leaf = 1;
  int forest_trees = 100;
  uint64_t seed = 0;
};

/// Fitted multi-class predictor; immutable after training.
class Classifier {
 public:
  virtual ~Classifier() = default;
  virtual int Predict(std::span<const double> x) const = 0;
  std::vector<int> PredictAll(const std::vector<std::vector<double>> &x) const;
};

/// Predicts one fixed class.
class ConstantClassifier : public Classifier {
 public:
  explicit ConstantClassifier(int label) : label_(label) {}
  int Predict(std::span<const double>) const override { return label_; }

 private:
  int label_;
};

/// Most frequent label; ties go to the smallest class index.
int MajorityLabel(const std::vector<int> &y);

/// Trains the requested family. Throws DataError for an empty or
/// single-class training set or non-finite features. When every feature
/// column is constant the result is a ConstantClassifier for the majority
/// class and a warning is appended to `warnings`.
std::unique_ptr<Classifier> Train(const Dataset &train, const ModelSpec &spec,
                                  std::vector<std::string> *warnings = nullptr);

}  // namespace rrassess::learn

#endif  // RRASSESS_LEARN_MODEL_H_
