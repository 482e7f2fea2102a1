// tests/unit/test_simd.cc

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

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "rrassess/simd/kernels.h"

using rrassess::simd::KernelTable;

TEST_SUITE("simd") {

TEST_CASE("vector kernels agree with the scalar reference") {
  const KernelTable &ref = rrassess::simd::ScalarKernels();
  const KernelTable *vec = rrassess::simd::VectorKernels();
  if (vec == nullptr) {
    MESSAGE("no vector kernels on this machine");
    return;
  }
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (std::size_t n = 0; n < 70; ++n) {
    std::vector<double> a(n), b(n), o1(n), o2(n);
    for (auto &v : a) v = u(rng);
    for (auto &v : b) v = u(rng);
    const double scale = 1.0 + static_cast<double>(n);
    CHECK(vec->dot(a.data(), b.data(), n) ==
          doctest::Approx(ref.dot(a.data(), b.data(), n)).epsilon(1e-12 * scale));
    CHECK(vec->sum_squares(a.data(), n) ==
          doctest::Approx(ref.sum_squares(a.data(), n)).epsilon(1e-12 * scale));
    CHECK(vec->squared_distance(a.data(), b.data(), n) ==
          doctest::Approx(ref.squared_distance(a.data(), b.data(), n))
              .epsilon(1e-12 * scale));
    ref.multiply(a.data(), b.data(), o1.data(), n);
    vec->multiply(a.data(), b.data(), o2.data(), n);
    CHECK(o1 == o2);
  }
}

TEST_CASE("scalar kernels compute the textbook sums") {
  const KernelTable &k = rrassess::simd::ScalarKernels();
  const double a[] = {1, 2, 3}, b[] = {4, -5, 6};
  CHECK(k.dot(a, b, 3) == 12.0);
  CHECK(k.sum_squares(a, 3) == 14.0);
  CHECK(k.squared_distance(a, b, 3) == 9.0 + 49.0 + 9.0);
  CHECK(k.dot(a, b, 0) == 0.0);
}

TEST_CASE("active table is one of the known tables") {
  const auto &active = rrassess::simd::ActiveKernels();
  const auto *vec = rrassess::simd::VectorKernels();
  CHECK((&active == &rrassess::simd::ScalarKernels() || &active == vec));
}

}
