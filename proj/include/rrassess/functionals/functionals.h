// functionals/functionals.h

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

#ifndef RRASSESS_FUNCTIONALS_FUNCTIONALS_H_
#define RRASSESS_FUNCTIONALS_FUNCTIONALS_H_

#include <span>
#include <string>
#include <vector>

#include "rrassess/dsp/lld.h"

namespace rrassess::functionals {

/// Statistics reducing one LLD contour to one number. Moments are population
/// moments; position functionals are frame index / (frames - 1) of the first
/// extremum; slope/offset are the least-squares line over frame index and
/// linregerr its mean squared residual. Skewness and kurtosis (non-excess)
/// are 0 for a zero-variance contour.
enum class Functional {
  kMean,
  kStddev,
  kMin,
  kMax,
  kRange,
  kMinPos,
  kMaxPos,
  kSlope,
  kOffset,
  kLinRegErr,
  kSkewness,
  kKurtosis,
};

std::string FunctionalName(Functional f);
/// Throws UsageError on an unknown name.
Functional FunctionalFromName(const std::string &name);

/// Ordered, duplicate-free list of functionals; the order fixes the vector
/// layout.
class FunctionalSet {
 public:
  /// Throws UsageError if empty or containing duplicates.
  explicit FunctionalSet(std::vector<Functional> items);

  const std::vector<Functional> &items() const { return items_; }
  std::size_t size() const { return items_.size(); }

  /// The twelve functionals in enum order.
  static FunctionalSet All();

 private:
  std::vector<Functional> items_;
};

/// Fixed-length numeric vector with its provenance.
struct FeatureVector {
  std::string preset;
  std::vector<double> values;
  std::string provenance;  // "frag-<index>" or "whole-utterance"
};

/// Values of fs over one contour, in fs order. Throws DataError for fewer
/// than 2 frames or non-finite input.
std::vector<double> ComputeFunctionals(std::span<const double> contour,
                                       const FunctionalSet &fs);

/// Functionals per column, concatenated column by column
/// (col0:f0, col0:f1, ..., col1:f0, ...). Length = columns x |fs|.
FeatureVector ApplyFunctionals(const dsp::LldMatrix &m,
                               const FunctionalSet &fs);

}  // namespace rrassess::functionals

#endif  // RRASSESS_FUNCTIONALS_FUNCTIONALS_H_
