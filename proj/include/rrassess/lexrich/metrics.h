// lexrich/metrics.h

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

#ifndef RRASSESS_LEXRICH_METRICS_H_
#define RRASSESS_LEXRICH_METRICS_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "rrassess/lexrich/profile.h"

namespace rrassess::lexrich {

inline constexpr std::size_t kNumLexMetrics = 25;
inline constexpr std::size_t kSampleSize = 50;
inline constexpr std::size_t kNumSamples = 10;
inline constexpr uint64_t kDefaultLexSeed = 0x5eed;

const std::array<std::string, kNumLexMetrics> &LexMetricNames();

/// Metric values in LexMetricNames() order; nullopt marks a metric whose
/// denominator is zero or whose text is too short (NDW-50, NDW-ER50,
/// NDW-ES50 and MSTTR-50 need at least 50 words).
struct LexMetricVector {
  std::array<std::optional<double>, kNumLexMetrics> values;

  std::optional<double> Get(std::string_view name) const;
};

/// NDW-ER50 draws each of its 10 samples with a fresh identity permutation
/// and a partial Fisher-Yates shuffle (j = i + rng() % (N - i)) from an
/// mt19937_64 seeded with `seed`. NDW-ES50 uses its own mt19937_64 seeded
/// with `seed` and takes 50 consecutive words from start rng() % (N - 49).
LexMetricVector ComputeLexMetrics(const LexicalProfile &p,
                                  uint64_t seed = kDefaultLexSeed);

}  // namespace rrassess::lexrich

#endif  // RRASSESS_LEXRICH_METRICS_H_
