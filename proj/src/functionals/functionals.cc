// functionals/functionals.cc

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

#include "rrassess/functionals/functionals.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include "rrassess/common/error.h"

namespace rrassess::functionals {

namespace {

constexpr std::array<const char *, 12> kNames = {
    "mean",  "stddev", "min",    "max",       "range",    "minPos",
    "maxPos", "slope", "offset", "linregerr", "skewness", "kurtosis"};

}  // namespace

std::string FunctionalName(Functional f) {
  return kNames[static_cast<std::size_t>(f)];
}

Functional FunctionalFromName(const std::string &name) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (name == kNames[i]) return static_cast<Functional>(i);
  throw UsageError("unknown functional: " + name);
}

FunctionalSet::FunctionalSet(std::vector<Functional> items)
    : items_(std::move(items)) {
  if (items_.empty()) throw UsageError("functional set is empty");
  std::set<Functional> seen(items_.begin(), items_.end());
  if (seen.size() != items_.size())
    throw UsageError("functional set contains duplicates");
}

FunctionalSet FunctionalSet::All() {
  std::vector<Functional> all;
  for (std::size_t i = 0; i < kNames.size(); ++i)
    all.push_back(static_cast<Functional>(i));
  return FunctionalSet(std::move(all));
}

std::vector<double> ComputeFunctionals(std::span<const double> x,
                                       const FunctionalSet &fs) {
  const std::size_t n = x.size();
  if (n < 2)
    throw DataError("functionals need at least 2 frames, got " +
                    std::to_string(n));
  for (double v : x)
    if (!std::isfinite(v)) throw DataError("non-finite value in LLD contour");

  const double nd = static_cast<double>(n);
  double sum = 0.0;
  for (double v : x) sum += v;
  const double mean = sum / nd;
  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double v : x) {
    double d = v - mean;
    double d2 = d * d;
    m2 += d2;
    m3 += d2 * d;
    m4 += d2 * d2;
  }
  m2 /= nd;
  m3 /= nd;
  m4 /= nd;
  auto [min_it, max_it] = std::minmax_element(x.begin(), x.end());
  // minmax_element returns the last maximum; we want the first.
  auto first_max = std::max_element(x.begin(), x.end());

  // Least-squares line over t = 0..n-1.
  const double t_mean = (nd - 1.0) / 2.0;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t t = 0; t < n; ++t) {
    double dt = static_cast<double>(t) - t_mean;
    sxy += dt * (x[t] - mean);
    sxx += dt * dt;
  }
  const double slope = sxy / sxx;
  const double offset = mean - slope * t_mean;

  std::vector<double> out;
  out.reserve(fs.size());
  for (Functional f : fs.items()) {
    switch (f) {
      case Functional::kMean:
        out.push_back(mean);
        break;
      case Functional::kStddev:
        out.push_back(m2 > 0.0 ? std::sqrt(m2) : 0.0);
        break;
      case Functional::kMin:
        out.push_back(*min_it);
        break;
      case Functional::kMax:
        out.push_back(*max_it);
        break;
      case Functional::kRange:
        out.push_back(*max_it - *min_it);
        break;
      case Functional::kMinPos:
        out.push_back(static_cast<double>(min_it - x.begin()) / (nd - 1.0));
        break;
      case Functional::kMaxPos:
        out.push_back(static_cast<double>(first_max - x.begin()) / (nd - 1.0));
        break;
      case Functional::kSlope:
        out.push_back(slope);
        break;
      case Functional::kOffset:
        out.push_back(offset);
        break;
      case Functional::kLinRegErr: {
        double err = 0.0;
        for (std::size_t t = 0; t < n; ++t) {
          double r = x[t] - (offset + slope * static_cast<double>(t));
          err += r * r;
        }
        out.push_back(err / nd);
        break;
      }
      case Functional::kSkewness:
        out.push_back(m2 > 0.0 ? m3 / (m2 * std::sqrt(m2)) : 0.0);
        break;
      case Functional::kKurtosis:
        out.push_back(m2 > 0.0 ? m4 / (m2 * m2) : 0.0);
        break;
    }
  }
  return out;
}

FeatureVector ApplyFunctionals(const dsp::LldMatrix &m,
                               const FunctionalSet &fs) {
  FeatureVector v;
  v.values.reserve(m.num_columns() * fs.size());
  for (std::size_t c = 0; c < m.num_columns(); ++c) {
    auto vals = ComputeFunctionals(m.Column(c), fs);
    v.values.insert(v.values.end(), vals.begin(), vals.end());
  }
  return v;
}

}  // namespace rrassess::functionals
