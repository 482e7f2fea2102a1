// dsp/spectrum.cc

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

#include "rrassess/dsp/spectrum.h"

#include <fftw3.h>

#include <algorithm>
#include <complex>
#include <mutex>

#include "rrassess/common/error.h"

namespace rrassess::dsp {

namespace {
std::mutex &PlannerMutex() {
  static std::mutex m;
  return m;
}
}  // namespace

std::size_t NextPowerOfTwo(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

RealFft::RealFft(std::size_t n) : n_(n), plan_(nullptr) {
  if (n < 2) throw UsageError("FFT size must be >= 2");
  std::vector<double> in(n);
  std::vector<std::complex<double>> out(n / 2 + 1);
  std::lock_guard<std::mutex> lock(PlannerMutex());
  plan_ = fftw_plan_dft_r2c_1d(
      static_cast<int>(n), in.data(),
      reinterpret_cast<fftw_complex *>(out.data()),
      FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (!plan_) throw UsageError("FFTW planning failed");
}

RealFft::~RealFft() {
  std::lock_guard<std::mutex> lock(PlannerMutex());
  fftw_destroy_plan(static_cast<fftw_plan>(plan_));
}

void RealFft::PowerSpectrum(std::span<const double> input,
                            std::vector<double> *power) const {
  std::vector<double> in(n_, 0.0);
  std::copy_n(input.begin(), std::min(input.size(), n_), in.begin());
  std::vector<std::complex<double>> out(num_bins());
  fftw_execute_dft_r2c(static_cast<fftw_plan>(plan_), in.data(),
                       reinterpret_cast<fftw_complex *>(out.data()));
  power->resize(num_bins());
  for (std::size_t k = 0; k < out.size(); ++k) (*power)[k] = std::norm(out[k]);
}

}  // namespace rrassess::dsp
