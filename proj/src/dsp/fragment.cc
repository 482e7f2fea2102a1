// dsp/fragment.cc

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

#include "rrassess/dsp/fragment.h"

#include <algorithm>
#include <cmath>

#include "rrassess/common/error.h"
#include "rrassess/simd/kernels.h"

namespace rrassess::dsp {

std::size_t FragmentLength(int sample_rate) {
  return static_cast<std::size_t>(sample_rate + 1) / 2;
}

std::vector<Fragment> Fragmentize(const AudioSignal &signal) {
  std::vector<Fragment> out;
  if (signal.sample_rate <= 0) return out;
  const std::size_t len = FragmentLength(signal.sample_rate);
  for (std::size_t off = 0; off + len <= signal.samples.size(); off += len) {
    Fragment f;
    f.offset = off;
    f.sample_rate = signal.sample_rate;
    f.samples.assign(signal.samples.begin() + static_cast<std::ptrdiff_t>(off),
                     signal.samples.begin() +
                         static_cast<std::ptrdiff_t>(off + len));
    out.push_back(std::move(f));
  }
  return out;
}

double Rms(const std::vector<double> &samples) {
  if (samples.empty()) return 0.0;
  return std::sqrt(simd::SumSquares(samples) /
                   static_cast<double>(samples.size()));
}

double PeakFragmentRms(const std::vector<Fragment> &fragments) {
  double peak = 0.0;
  for (const auto &f : fragments) peak = std::max(peak, Rms(f.samples));
  return peak;
}

bool IsSilent(const Fragment &fragment, double reference_rms,
              double floor_db) {
  if (!(floor_db < 0.0))
    throw UsageError("silence floor must be negative dB, got " +
                     std::to_string(floor_db));
  double rms = Rms(fragment.samples);
  if (rms <= 0.0 || reference_rms <= 0.0) return true;
  return 20.0 * std::log10(rms / reference_rms) < floor_db;
}

std::vector<bool> SilenceMask(const std::vector<Fragment> &fragments,
                              double floor_db) {
  const double peak = PeakFragmentRms(fragments);
  std::vector<bool> mask;
  mask.reserve(fragments.size());
  for (const auto &f : fragments) mask.push_back(IsSilent(f, peak, floor_db));
  return mask;
}

double SilenceSpeechRatio(const AudioSignal &signal, double floor_db) {
  auto mask = SilenceMask(Fragmentize(signal), floor_db);
  auto silent = static_cast<double>(std::count(mask.begin(), mask.end(), true));
  double speech = static_cast<double>(mask.size()) - silent;
  if (speech == 0.0)
    throw DataError("silence/speech ratio undefined: no non-silent fragment");
  return (silent * kFragmentSeconds) / (speech * kFragmentSeconds);
}

}  // namespace rrassess::dsp
