// dsp/wav.h

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

#ifndef RRASSESS_DSP_WAV_H_
#define RRASSESS_DSP_WAV_H_

#include <string>
#include <string_view>
#include <vector>

namespace rrassess::dsp {

/// Mono audio with samples normalized to [-1, 1].
struct AudioSignal {
  std::vector<double> samples;
  int sample_rate = 0;

  double Duration() const {
    return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate
                           : 0.0;
  }
};

constexpr int kMinSampleRate = 8000;

/// Reads 16-bit PCM WAV (mono, or stereo averaged to mono). Throws DataError
/// for other encodings, truncated data, or sample rates below 8 kHz.
AudioSignal LoadWav(const std::string &path);
AudioSignal ParseWav(std::string_view bytes, const std::string &name = "wav");

/// 16-bit mono PCM; samples are clipped to [-1, 1] and rounded.
std::string EncodeWav16(const AudioSignal &signal);
void SaveWav(const std::string &path, const AudioSignal &signal);

}  // namespace rrassess::dsp

#endif  // RRASSESS_DSP_WAV_H_
