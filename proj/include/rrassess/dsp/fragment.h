// dsp/fragment.h

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

#ifndef RRASSESS_DSP_FRAGMENT_H_
#define RRASSESS_DSP_FRAGMENT_H_

#include <cstddef>
#include <vector>

#include "rrassess/dsp/wav.h"

namespace rrassess::dsp {

constexpr double kFragmentSeconds = 0.5;
constexpr double kDefaultSilenceFloorDb = -40.0;

/// A fixed 0.5 s window of a parent signal.
struct Fragment {
  std::size_t offset = 0;  // first sample index in the parent
  std::vector<double> samples;
  int sample_rate = 0;
};

/// round(0.5 * sample_rate), rounding half up.
std::size_t FragmentLength(int sample_rate);

/// Consecutive non-overlapping 0.5 s windows; a trailing remainder shorter
/// than one window is dropped.
std::vector<Fragment> Fragmentize(const AudioSignal &signal);

double Rms(const std::vector<double> &samples);

/// Largest fragment RMS; 0 for no fragments.
double PeakFragmentRms(const std::vector<Fragment> &fragments);

/// True iff the fragment's RMS, in dB relative to reference_rms (the parent
/// utterance's peak fragment RMS), is below floor_db. A zero-energy fragment
/// or a zero reference is silent. floor_db must be negative (UsageError).
bool IsSilent(const Fragment &fragment, double reference_rms, double floor_db);

/// Per-fragment silence verdicts for a whole utterance.
std::vector<bool> SilenceMask(const std::vector<Fragment> &fragments,
                              double floor_db);

/// Total silent duration over total speech duration, both counted in 0.5 s
/// fragments. Throws DataError when no fragment is non-silent.
double SilenceSpeechRatio(const AudioSignal &signal, double floor_db);

}  // namespace rrassess::dsp

#endif  // RRASSESS_DSP_FRAGMENT_H_
