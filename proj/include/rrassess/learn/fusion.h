// learn/fusion.h

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

#ifndef RRASSESS_LEARN_FUSION_H_
#define RRASSESS_LEARN_FUSION_H_

#include <string>
#include <vector>

#include "rrassess/functionals/functionals.h"
#include "rrassess/learn/matrix.h"
#include "rrassess/lexrich/metrics.h"
#include "rrassess/synco/metrics.h"

namespace rrassess::learn {

inline constexpr std::size_t kProsodyFusionDim = 88;
inline constexpr std::size_t kFusedDim =
    lexrich::kNumLexMetrics + synco::kNumSynMetrics + kProsodyFusionDim;

/// Early fusion lex || syn || prosody. Undefined metrics become NaN. The
/// prosody vector must be the 88-value whole-utterance vector; other sizes
/// throw DataError.
std::vector<double> Fuse(const lexrich::LexMetricVector &lex,
                         const synco::SynMetricVector &syn,
                         const functionals::FeatureVector &prosody);

/// "lex:<name>", "syn:<name>" and "pro:<prosody name>" column names.
std::vector<std::string> FusedColumnNames(
    const std::vector<std::string> &prosody_names);

/// Column-wise median imputation followed by z-scoring, with statistics
/// taken from the rows given to Fit only. A column with zero variance maps
/// to 0; a column with no defined training value imputes 0.
class Standardizer {
 public:
  void Fit(const std::vector<std::vector<double>> &rows);
  std::vector<double> Transform(const std::vector<double> &row) const;
  void TransformInPlace(std::vector<std::vector<double>> *rows) const;

  const std::vector<double> &medians() const { return medians_; }
  const std::vector<double> &means() const { return means_; }
  const std::vector<double> &scales() const { return scales_; }

 private:
  std::vector<double> medians_, means_, scales_;
};

}  // namespace rrassess::learn

#endif  // RRASSESS_LEARN_FUSION_H_
