// simd/kernels.h

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

#ifndef RRASSESS_SIMD_KERNELS_H_
#define RRASSESS_SIMD_KERNELS_H_

#include <cstddef>
#include <span>
#include <string_view>

namespace rrassess::simd {

// Data-parallel inner loops shared by the DSP and learning code. Every kernel
// has a scalar reference implementation; vectorized variants (AVX2+FMA on
// x86-64, NEON on aarch64) are selected once at runtime and must agree with
// the reference up to floating-point reassociation.
struct KernelTable {
  std::string_view name;
  double (*dot)(const double *a, const double *b, std::size_t n);
  double (*sum_squares)(const double *a, std::size_t n);
  double (*squared_distance)(const double *a, const double *b, std::size_t n);
  // out[i] = a[i] * b[i]; out may alias a.
  void (*multiply)(const double *a, const double *b, double *out,
                   std::size_t n);
};

const KernelTable &ScalarKernels();

/// Vectorized table for this build, or nullptr when the build or CPU lacks it.
const KernelTable *VectorKernels();

/// Table used by the library. Chosen on first use: the vector table when the
/// CPU supports it, unless RRASSESS_SIMD=scalar is set in the environment.
const KernelTable &ActiveKernels();

inline double Dot(std::span<const double> a, std::span<const double> b) {
  return ActiveKernels().dot(a.data(), b.data(), a.size());
}

inline double SumSquares(std::span<const double> a) {
  return ActiveKernels().sum_squares(a.data(), a.size());
}

inline double SquaredDistance(std::span<const double> a,
                              std::span<const double> b) {
  return ActiveKernels().squared_distance(a.data(), b.data(), a.size());
}

inline void Multiply(std::span<const double> a, std::span<const double> b,
                     std::span<double> out) {
  ActiveKernels().multiply(a.data(), b.data(), out.data(), a.size());
}

}  // namespace rrassess::simd

#endif  // RRASSESS_SIMD_KERNELS_H_
