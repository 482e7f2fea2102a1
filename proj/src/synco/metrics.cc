// synco/metrics.cc

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

#include "rrassess/synco/metrics.h"

#include "rrassess/common/error.h"

namespace rrassess::synco {

const std::array<std::string, kNumSynMetrics> &SynMetricNames() {
  static const std::array<std::string, kNumSynMetrics> names = {
      "MLC",  "MLS",  "MLT",  "C/S",  "C/T", "CT/T", "DC/C",
      "DC/T", "CP/C", "CP/T", "T/S",  "CN/C", "CN/T", "VP/T"};
  return names;
}

std::optional<double> SynMetricVector::Get(std::string_view name) const {
  const auto &names = SynMetricNames();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return values[i];
  throw UsageError("unknown syntactic metric '" + std::string(name) + "'");
}

SynMetricVector ComputeSynMetrics(const ProductionCounts &pc) {
  if (pc.w == 0) throw DataError("syntactic metrics: no words");
  auto ratio = [](std::size_t num, std::size_t den) -> std::optional<double> {
    if (den == 0) return std::nullopt;
    return static_cast<double>(num) / static_cast<double>(den);
  };
  SynMetricVector m;
  m.values = {ratio(pc.w, pc.c),   ratio(pc.w, pc.s),   ratio(pc.w, pc.t),
              ratio(pc.c, pc.s),   ratio(pc.c, pc.t),   ratio(pc.ct, pc.t),
              ratio(pc.dc, pc.c),  ratio(pc.dc, pc.t),  ratio(pc.cp, pc.c),
              ratio(pc.cp, pc.t),  ratio(pc.t, pc.s),   ratio(pc.cn, pc.c),
              ratio(pc.cn, pc.t),  ratio(pc.vp, pc.t)};
  return m;
}

}  // namespace rrassess::synco
