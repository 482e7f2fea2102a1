// learn/fusion.cc

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

#include "rrassess/learn/fusion.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rrassess/common/error.h"

namespace rrassess::learn {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double Median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

std::vector<double> Fuse(const lexrich::LexMetricVector &lex,
                         const synco::SynMetricVector &syn,
                         const functionals::FeatureVector &prosody) {
  if (prosody.values.size() != kProsodyFusionDim)
    throw DataError("fusion: prosody vector has " +
                    std::to_string(prosody.values.size()) +
                    " values, expected " + std::to_string(kProsodyFusionDim));
  std::vector<double> out;
  out.reserve(kFusedDim);
  for (const auto &v : lex.values) out.push_back(v.value_or(kNaN));
  for (const auto &v : syn.values) out.push_back(v.value_or(kNaN));
  out.insert(out.end(), prosody.values.begin(), prosody.values.end());
  return out;
}

std::vector<std::string> FusedColumnNames(
    const std::vector<std::string> &prosody_names) {
  std::vector<std::string> out;
  for (const auto &n : lexrich::LexMetricNames()) out.push_back("lex:" + n);
  for (const auto &n : synco::SynMetricNames()) out.push_back("syn:" + n);
  for (const auto &n : prosody_names) out.push_back("pro:" + n);
  return out;
}

void Standardizer::Fit(const std::vector<std::vector<double>> &rows) {
  if (rows.empty()) throw DataError("standardizer: no training rows");
  const std::size_t d = rows.front().size();
  medians_.assign(d, 0.0);
  means_.assign(d, 0.0);
  scales_.assign(d, 0.0);
  std::vector<double> col;
  for (std::size_t j = 0; j < d; ++j) {
    col.clear();
    for (const auto &r : rows)
      if (!std::isnan(r[j])) col.push_back(r[j]);
    medians_[j] = col.empty() ? 0.0 : Median(col);
    double sum = 0.0;
    for (const auto &r : rows) sum += std::isnan(r[j]) ? medians_[j] : r[j];
    means_[j] = sum / static_cast<double>(rows.size());
    double lo = std::numeric_limits<double>::infinity(), hi = -lo, ss = 0.0;
    for (const auto &r : rows) {
      lo = std::min(lo, std::isnan(r[j]) ? medians_[j] : r[j]);
      hi = std::max(hi, std::isnan(r[j]) ? medians_[j] : r[j]);
      const double dv = (std::isnan(r[j]) ? medians_[j] : r[j]) - means_[j];
      ss += dv * dv;
    }
    scales_[j] = lo == hi ? 0.0 : std::sqrt(ss / static_cast<double>(rows.size()));
  }
}

std::vector<double> Standardizer::Transform(const std::vector<double> &row) const {
  if (row.size() != means_.size())
    throw DataError("standardizer: row width does not match fitted width");
  std::vector<double> out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) {
    const double v = std::isnan(row[j]) ? medians_[j] : row[j];
    out[j] = scales_[j] > 0.0 ? (v - means_[j]) / scales_[j] : 0.0;
  }
  return out;
}

void Standardizer::TransformInPlace(std::vector<std::vector<double>> *rows) const {
  for (auto &r : *rows) r = Transform(r);
}

}  // namespace rrassess::learn
