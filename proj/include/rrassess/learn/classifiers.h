// learn/classifiers.h

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

#ifndef RRASSESS_LEARN_CLASSIFIERS_H_
#define RRASSESS_LEARN_CLASSIFIERS_H_

#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <vector>

#include "rrassess/learn/model.h"

namespace rrassess::learn {

/// One-vs-rest RBF C-SVC trained by SMO with second-order working set
/// selection; the class with the largest decision value wins.
class SvmClassifier : public Classifier {
 public:
  SvmClassifier(const Dataset &train, double c, double gamma);
  int Predict(std::span<const double> x) const override;
  /// Decision value of the binary machine for `classes()[k]`.
  double Decision(std::size_t k, std::span<const double> x) const;
  const std::vector<int> &classes() const { return classes_; }

 private:
  struct Machine {
    std::vector<std::size_t> support;
    std::vector<double> coef;  // alpha_i * y_i
    double rho = 0.0;
  };
  double Kernel(std::span<const double> a, std::span<const double> b) const;

  std::vector<std::vector<double>> x_;
  double gamma_;
  std::vector<int> classes_;
  std::vector<Machine> machines_;
};

/// One-vs-rest L2-regularized logistic regression fitted by Newton steps;
/// the intercept is not penalized.
class LogisticClassifier : public Classifier {
 public:
  LogisticClassifier(const Dataset &train, double c);
  int Predict(std::span<const double> x) const override;

 private:
  std::vector<int> classes_;
  std::vector<std::vector<double>> weights_;  // last entry is the intercept
};

/// Euclidean k-nearest neighbours. Equal distances are ordered by training
/// row index; a tied vote goes to the tied class of the nearest neighbour.
class KnnClassifier : public Classifier {
 public:
  KnnClassifier(const Dataset &train, int k);
  int Predict(std::span<const double> x) const override;

 private:
  Dataset train_;
  int k_;
};

/// CART with Gini impurity and midpoint thresholds (x <= t goes left).
class DecisionTreeClassifier : public Classifier {
 public:
  struct Options {
    std::optional<int> max_depth;
    int min_leaf = 1;
    // Features examined per split; 0 examines all.
    std::size_t max_features = 0;
  };
  DecisionTreeClassifier(const Dataset &train, const Options &opts,
                         uint64_t seed = 0);
  DecisionTreeClassifier(const Dataset &train,
                         const std::vector<std::size_t> &rows,
                         const Options &opts, std::mt19937_64 *rng);
  int Predict(std::span<const double> x) const override;
  std::size_t num_nodes() const { return nodes_.size(); }

 private:
  struct Node {
    int feature = -1;  // -1 marks a leaf
    double threshold = 0.0;
    int left = -1, right = -1;
    int label = 0;
  };
  int Build(const Dataset &train, std::vector<std::size_t> rows, int depth,
            const Options &opts, std::mt19937_64 *rng);

  std::vector<Node> nodes_;
};

/// Bagged CART ensemble with sqrt(d) features per split; tree t draws its
/// bootstrap and feature order from mt19937_64(MixSeed(seed, t)). Majority
/// vote, ties to the smallest class index.
class RandomForestClassifier : public Classifier {
 public:
  RandomForestClassifier(const Dataset &train, int num_trees, uint64_t seed);
  int Predict(std::span<const double> x) const override;
  const std::vector<DecisionTreeClassifier> &trees() const { return trees_; }

 private:
  std::vector<DecisionTreeClassifier> trees_;
};

}  // namespace rrassess::learn

#endif  // RRASSESS_LEARN_CLASSIFIERS_H_
