// simd/kernels.cc

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

#include "rrassess/simd/kernels.h"

#include <cstdlib>
#include <cstring>

namespace rrassess::simd {

#if defined(RRASSESS_HAVE_AVX2)
const KernelTable &Avx2Kernels();
#endif
#if defined(RRASSESS_HAVE_NEON)
const KernelTable &NeonKernels();
#endif

const KernelTable *VectorKernels() {
#if defined(RRASSESS_HAVE_AVX2)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
    return &Avx2Kernels();
  return nullptr;
#elif defined(RRASSESS_HAVE_NEON)
  return &NeonKernels();  // mandatory on aarch64
#else
  return nullptr;
#endif
}

const KernelTable &ActiveKernels() {
  static const KernelTable &active = []() -> const KernelTable & {
    const char *env = std::getenv("RRASSESS_SIMD");
    if (env && std::strcmp(env, "scalar") == 0) return ScalarKernels();
    const KernelTable *vec = VectorKernels();
    return vec ? *vec : ScalarKernels();
  }();
  return active;
}

}  // namespace rrassess::simd
