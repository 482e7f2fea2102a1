// dsp/lld.h

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

#ifndef RRASSESS_DSP_LLD_H_
#define RRASSESS_DSP_LLD_H_

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "rrassess/dsp/fragment.h"
#include "rrassess/dsp/wav.h"

namespace rrassess::dsp {

/// Frame-level low-level descriptor contours, stored column-major: one
/// contour per descriptor, all of the same length.
class LldMatrix {
 public:
  LldMatrix() = default;
  LldMatrix(double frame_len, double frame_hop, std::vector<std::string> names,
            std::size_t num_frames);

  double frame_len() const { return frame_len_; }
  double frame_hop() const { return frame_hop_; }
  std::size_t num_frames() const { return num_frames_; }
  std::size_t num_columns() const { return names_.size(); }
  const std::vector<std::string> &names() const { return names_; }

  /// Throws UsageError for an unknown descriptor name.
  std::size_t ColumnIndex(const std::string &name) const;
  std::span<const double> Column(std::size_t c) const { return columns_[c]; }
  std::span<const double> Column(const std::string &name) const {
    return columns_[ColumnIndex(name)];
  }
  std::vector<double> &MutableColumn(std::size_t c) { return columns_[c]; }

  /// Sub-matrix with the named columns in the given order.
  LldMatrix Select(const std::vector<std::string> &names) const;
  /// Columns of this followed by the columns of other (same frame count).
  LldMatrix Concat(const LldMatrix &other) const;

  /// Header row of descriptor names, one row per frame.
  std::string ToCsv() const;

 private:
  double frame_len_ = 0.0;
  double frame_hop_ = 0.0;
  std::size_t num_frames_ = 0;
  std::vector<std::string> names_;
  std::vector<std::vector<double>> columns_;
};

struct LldOptions {
  double frame_length_s = 0.025;
  double frame_shift_s = 0.010;
  double f0_min_hz = 50.0;
  double f0_max_hz = 600.0;
  // Voicing requires a normalized autocorrelation peak at least this high.
  double voicing_threshold = 0.45;
  int num_mel_bands = 26;
  int num_ceps = 13;
  double rolloff_fraction = 0.85;
  double hnr_min_db = -10.0;
  double hnr_max_db = 40.0;
};

/// Descriptor names produced by LldExtractor, in column order:
/// f0, voicing, rms, zcr, mfcc1..mfcc13, jitter, shimmer, hnr,
/// spectral_centroid, spectral_rolloff, spectral_flux. mfcc1 is c0.
std::vector<std::string> LldColumnNames(const LldOptions &opts = {});

/// Per-frame acoustic descriptors: autocorrelation pitch with voicing, RMS
/// energy, zero-crossing rate (crossings per second), MFCCs, jitter and
/// shimmer from pitch-period marks, HNR, and spectral centroid / rolloff /
/// flux. Immutable after construction; Extract may be called concurrently.
class LldExtractor {
 public:
  LldExtractor(int sample_rate, const LldOptions &opts = {});
  ~LldExtractor();

  int sample_rate() const { return sample_rate_; }
  std::size_t frame_length() const { return frame_len_; }
  std::size_t frame_shift() const { return frame_shift_; }
  const LldOptions &options() const { return opts_; }

  /// Number of complete frames in n samples.
  std::size_t NumFrames(std::size_t n) const;

  /// Throws DataError if samples are shorter than one frame.
  LldMatrix Extract(std::span<const double> samples) const;

 private:
  struct PitchResult {
    double f0 = 0.0;
    double peak = 0.0;  // normalized autocorrelation at the chosen lag
  };
  PitchResult EstimatePitch(std::span<const double> frame) const;
  void VoiceQuality(std::span<const double> samples,
                    const std::vector<double> &f0,
                    std::vector<double> *jitter,
                    std::vector<double> *shimmer) const;

  int sample_rate_;
  LldOptions opts_;
  std::size_t frame_len_;
  std::size_t frame_shift_;
  std::size_t min_lag_;
  std::size_t max_lag_;
  std::vector<double> window_;
  std::vector<std::vector<double>> mel_bank_;  // [band][bin]
  std::vector<std::vector<double>> dct_;       // [ceps][band]
  std::unique_ptr<class RealFft> fft_;
};

/// Convenience wrappers using a per-call extractor with default options.
LldMatrix ExtractLld(const Fragment &fragment);
LldMatrix ExtractLld(const AudioSignal &signal);

/// First-order regression deltas over a +/-2 frame window with edge
/// replication: d_t = sum_{n=1..2} n (c_{t+n} - c_{t-n}) / 10. Column names
/// get a "_de" suffix. Throws DataError for fewer than 3 frames.
LldMatrix Delta(const LldMatrix &m);

}  // namespace rrassess::dsp

#endif  // RRASSESS_DSP_LLD_H_
