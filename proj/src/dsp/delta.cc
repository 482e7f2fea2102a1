// dsp/delta.cc

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

#include "rrassess/common/error.h"
#include "rrassess/dsp/lld.h"

namespace rrassess::dsp {

LldMatrix Delta(const LldMatrix &m) {
  const std::size_t n = m.num_frames();
  if (n < 3)
    throw DataError("delta needs at least 3 frames, got " + std::to_string(n));
  std::vector<std::string> names;
  for (const auto &name : m.names()) names.push_back(name + "_de");
  LldMatrix out(m.frame_len(), m.frame_hop(), names, n);
  const auto last = static_cast<std::ptrdiff_t>(n) - 1;
  for (std::size_t c = 0; c < m.num_columns(); ++c) {
    auto in = m.Column(c);
    auto &d = out.MutableColumn(c);
    auto at = [&](std::ptrdiff_t i) {
      return in[static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(i, 0, last))];
    };
    for (std::ptrdiff_t t = 0; t <= last; ++t)
      d[static_cast<std::size_t>(t)] =
          ((at(t + 1) - at(t - 1)) + 2.0 * (at(t + 2) - at(t - 2))) / 10.0;
  }
  return out;
}

}  // namespace rrassess::dsp
