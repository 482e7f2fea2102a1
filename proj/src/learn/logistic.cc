// learn/logistic.cc

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

#include <Eigen/Dense>
#include <cmath>
#include <limits>

#include "rrassess/common/error.h"
#include "rrassess/learn/classifiers.h"
#include "rrassess/simd/kernels.h"

namespace rrassess::learn {

namespace {

constexpr int kMaxNewtonSteps = 100;
constexpr double kStepTolerance = 1e-10;

// Minimizes 0.5 |w|^2 + c * sum log(1 + exp(-y (w.x + b))) over (w, b).
Eigen::VectorXd FitBinary(const Eigen::MatrixXd &xa, const Eigen::VectorXd &y,
                          double c) {
  const Eigen::Index n = xa.rows(), d = xa.cols();
  Eigen::VectorXd w = Eigen::VectorXd::Zero(d);
  Eigen::VectorXd penalty = Eigen::VectorXd::Ones(d);
  penalty(d - 1) = 0.0;
  auto objective = [&](const Eigen::VectorXd &v) {
    const Eigen::VectorXd m = (xa * v).cwiseProduct(y);
    double loss = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
      loss += m(i) > 0 ? std::log1p(std::exp(-m(i)))
                       : -m(i) + std::log1p(std::exp(m(i)));
    return 0.5 * v.cwiseProduct(penalty).squaredNorm() + c * loss;
  };
  double f = objective(w);
  for (int step = 0; step < kMaxNewtonSteps; ++step) {
    const Eigen::VectorXd m = (xa * w).cwiseProduct(y);
    Eigen::VectorXd r(n), d2(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const double p = 1.0 / (1.0 + std::exp(m(i)));  // sigma(-m)
      r(i) = -y(i) * p;
      d2(i) = p * (1.0 - p);
    }
    const Eigen::VectorXd grad = w.cwiseProduct(penalty) + c * xa.transpose() * r;
    Eigen::MatrixXd hess = c * xa.transpose() * d2.asDiagonal() * xa;
    hess.diagonal() += penalty;
    hess(d - 1, d - 1) += 1e-10;
    const Eigen::VectorXd dir = hess.ldlt().solve(-grad);
    double t = 1.0, f_new = f;
    Eigen::VectorXd w_new = w;
    for (int ls = 0; ls < 50; ++ls) {
      w_new = w + t * dir;
      f_new = objective(w_new);
      if (f_new <= f + 1e-4 * t * grad.dot(dir)) break;
      t *= 0.5;
    }
    const double moved = (w_new - w).norm();
    w = w_new;
    f = f_new;
    if (moved < kStepTolerance * (1.0 + w.norm())) break;
  }
  return w;
}

}  // namespace

LogisticClassifier::LogisticClassifier(const Dataset &train, double c)
    : classes_(ClassesOf(train.y)) {
  if (!(c > 0)) throw UsageError("logistic regression: C must be > 0");
  const Eigen::Index n = static_cast<Eigen::Index>(train.size());
  const Eigen::Index d = static_cast<Eigen::Index>(train.dim());
  Eigen::MatrixXd xa(n, d + 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) xa(i, j) = train.x[i][j];
    xa(i, d) = 1.0;
  }
  for (int cls : classes_) {
    Eigen::VectorXd y(n);
    for (Eigen::Index i = 0; i < n; ++i) y(i) = train.y[i] == cls ? 1.0 : -1.0;
    const Eigen::VectorXd w = FitBinary(xa, y, c);
    weights_.emplace_back(w.data(), w.data() + w.size());
  }
}

int LogisticClassifier::Predict(std::span<const double> x) const {
  std::size_t best = 0;
  double best_f = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < weights_.size(); ++k) {
    const auto &w = weights_[k];
    const double f = simd::Dot(x, std::span<const double>(w.data(), x.size())) +
                     w.back();
    if (f > best_f) best_f = f, best = k;
  }
  return classes_[best];
}

}  // namespace rrassess::learn
