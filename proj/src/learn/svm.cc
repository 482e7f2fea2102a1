// learn/svm.cc

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
#include <cmath>
#include <limits>

#include "rrassess/common/error.h"
#include "rrassess/learn/classifiers.h"
#include "rrassess/simd/kernels.h"

namespace rrassess::learn {

namespace {

constexpr double kTau = 1e-12;
constexpr double kEps = 1e-3;

struct BinaryResult {
  std::vector<double> alpha;
  double rho;
};

// Dual C-SVC solver; q(i, j) = y_i y_j K_ij over a precomputed kernel.
BinaryResult SolveBinary(const std::vector<std::vector<double>> &kernel,
                         const std::vector<double> &y, double c) {
  const std::size_t n = y.size();
  std::vector<double> alpha(n, 0.0), grad(n, -1.0);
  auto q = [&](std::size_t i, std::size_t j) {
    return y[i] * y[j] * kernel[i][j];
  };
  const std::size_t max_iter = std::max<std::size_t>(10000000, 100 * n);
  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    double gmax = -std::numeric_limits<double>::infinity();
    long i = -1;
    for (std::size_t t = 0; t < n; ++t) {
      if (y[t] > 0) {
        if (alpha[t] < c && -grad[t] >= gmax) gmax = -grad[t], i = long(t);
      } else {
        if (alpha[t] > 0 && grad[t] >= gmax) gmax = grad[t], i = long(t);
      }
    }
    double gmax2 = -std::numeric_limits<double>::infinity();
    double obj_min = std::numeric_limits<double>::infinity();
    long j = -1;
    for (std::size_t t = 0; t < n && i >= 0; ++t) {
      const double kit = kernel[std::size_t(i)][t];
      const double kii = kernel[std::size_t(i)][std::size_t(i)];
      if (y[t] > 0) {
        if (alpha[t] <= 0) continue;
        const double diff = gmax + grad[t];
        gmax2 = std::max(gmax2, grad[t]);
        if (diff > 0) {
          double a = kii + kernel[t][t] - 2.0 * y[std::size_t(i)] * kit;
          const double obj = -(diff * diff) / (a > 0 ? a : kTau);
          if (obj <= obj_min) obj_min = obj, j = long(t);
        }
      } else {
        if (alpha[t] >= c) continue;
        const double diff = gmax - grad[t];
        gmax2 = std::max(gmax2, -grad[t]);
        if (diff > 0) {
          double a = kii + kernel[t][t] + 2.0 * y[std::size_t(i)] * kit;
          const double obj = -(diff * diff) / (a > 0 ? a : kTau);
          if (obj <= obj_min) obj_min = obj, j = long(t);
        }
      }
    }
    if (i < 0 || j < 0 || gmax + gmax2 < kEps) break;

    const std::size_t a = std::size_t(i), b = std::size_t(j);
    const double old_a = alpha[a], old_b = alpha[b];
    if (y[a] != y[b]) {
      double quad = kernel[a][a] + kernel[b][b] + 2.0 * kernel[a][b];
      if (quad <= 0) quad = kTau;
      const double delta = (-grad[a] - grad[b]) / quad;
      const double diff = alpha[a] - alpha[b];
      alpha[a] += delta;
      alpha[b] += delta;
      if (diff > 0) {
        if (alpha[b] < 0) alpha[b] = 0, alpha[a] = diff;
      } else {
        if (alpha[a] < 0) alpha[a] = 0, alpha[b] = -diff;
      }
      if (diff > 0) {
        if (alpha[a] > c) alpha[a] = c, alpha[b] = c - diff;
      } else {
        if (alpha[b] > c) alpha[b] = c, alpha[a] = c + diff;
      }
    } else {
      double quad = kernel[a][a] + kernel[b][b] - 2.0 * kernel[a][b];
      if (quad <= 0) quad = kTau;
      const double delta = (grad[a] - grad[b]) / quad;
      const double sum = alpha[a] + alpha[b];
      alpha[a] -= delta;
      alpha[b] += delta;
      if (sum > c) {
        if (alpha[a] > c) alpha[a] = c, alpha[b] = sum - c;
      } else {
        if (alpha[b] < 0) alpha[b] = 0, alpha[a] = sum;
      }
      if (sum > c) {
        if (alpha[b] > c) alpha[b] = c, alpha[a] = sum - c;
      } else {
        if (alpha[a] < 0) alpha[a] = 0, alpha[b] = sum;
      }
    }
    const double da = alpha[a] - old_a, db = alpha[b] - old_b;
    for (std::size_t t = 0; t < n; ++t)
      grad[t] += q(a, t) * da + q(b, t) * db;
  }

  double ub = std::numeric_limits<double>::infinity(), lb = -ub, sum_free = 0;
  std::size_t n_free = 0;
  for (std::size_t t = 0; t < n; ++t) {
    const double yg = y[t] * grad[t];
    if (alpha[t] >= c) {
      if (y[t] < 0) ub = std::min(ub, yg); else lb = std::max(lb, yg);
    } else if (alpha[t] <= 0) {
      if (y[t] > 0) ub = std::min(ub, yg); else lb = std::max(lb, yg);
    } else {
      ++n_free;
      sum_free += yg;
    }
  }
  const double rho = n_free > 0 ? sum_free / double(n_free) : (ub + lb) / 2;
  return {std::move(alpha), rho};
}

}  // namespace

SvmClassifier::SvmClassifier(const Dataset &train, double c, double gamma)
    : x_(train.x), gamma_(gamma), classes_(ClassesOf(train.y)) {
  if (!(c > 0) || !(gamma > 0)) throw UsageError("svm: C and gamma must be > 0");
  const std::size_t n = x_.size();
  std::vector<std::vector<double>> kernel(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      kernel[i][j] = kernel[j][i] = Kernel(x_[i], x_[j]);
  for (int cls : classes_) {
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = train.y[i] == cls ? 1.0 : -1.0;
    BinaryResult r = SolveBinary(kernel, y, c);
    Machine m;
    m.rho = r.rho;
    for (std::size_t i = 0; i < n; ++i)
      if (r.alpha[i] > 0) {
        m.support.push_back(i);
        m.coef.push_back(r.alpha[i] * y[i]);
      }
    machines_.push_back(std::move(m));
  }
}

double SvmClassifier::Kernel(std::span<const double> a,
                             std::span<const double> b) const {
  return std::exp(-gamma_ * simd::SquaredDistance(a, b));
}

double SvmClassifier::Decision(std::size_t k, std::span<const double> x) const {
  const Machine &m = machines_.at(k);
  double f = -m.rho;
  for (std::size_t s = 0; s < m.support.size(); ++s)
    f += m.coef[s] * Kernel(x_[m.support[s]], x);
  return f;
}

int SvmClassifier::Predict(std::span<const double> x) const {
  std::size_t best = 0;
  double best_f = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < machines_.size(); ++k) {
    const double f = Decision(k, x);
    if (f > best_f) best_f = f, best = k;
  }
  return classes_[best];
}

}  // namespace rrassess::learn
