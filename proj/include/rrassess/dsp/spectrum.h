// dsp/spectrum.h

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

#ifndef RRASSESS_DSP_SPECTRUM_H_
#define RRASSESS_DSP_SPECTRUM_H_

#include <cstddef>
#include <span>
#include <vector>

namespace rrassess::dsp {

/// Real-input DFT of a fixed size backed by an FFTW plan. Execution is
/// thread-safe; the plan is created once under a global lock.
class RealFft {
 public:
  explicit RealFft(std::size_t n);
  ~RealFft();
  RealFft(const RealFft &) = delete;
  RealFft &operator=(const RealFft &) = delete;

  std::size_t size() const { return n_; }
  std::size_t num_bins() const { return n_ / 2 + 1; }

  /// |X_k|^2 for k = 0..n/2. input.size() may be <= n (zero padded).
  void PowerSpectrum(std::span<const double> input,
                     std::vector<double> *power) const;

 private:
  std::size_t n_;
  void *plan_;
};

std::size_t NextPowerOfTwo(std::size_t n);

}  // namespace rrassess::dsp

#endif  // RRASSESS_DSP_SPECTRUM_H_
