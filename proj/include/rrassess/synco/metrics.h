// synco/metrics.h

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

#ifndef RRASSESS_SYNCO_METRICS_H_
#define RRASSESS_SYNCO_METRICS_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "rrassess/synco/units.h"

namespace rrassess::synco {

inline constexpr std::size_t kNumSynMetrics = 14;

const std::array<std::string, kNumSynMetrics> &SynMetricNames();

/// MLC MLS MLT C/S C/T CT/T DC/C DC/T CP/C CP/T T/S CN/C CN/T VP/T; nullopt
/// where the denominator is zero.
struct SynMetricVector {
  std::array<std::optional<double>, kNumSynMetrics> values;

  std::optional<double> Get(std::string_view name) const;
};

/// Throws DataError when W = 0.
SynMetricVector ComputeSynMetrics(const ProductionCounts &pc);

}  // namespace rrassess::synco

#endif  // RRASSESS_SYNCO_METRICS_H_
