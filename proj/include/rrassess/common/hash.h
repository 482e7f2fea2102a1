// common/hash.h

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

#ifndef RRASSESS_COMMON_HASH_H_
#define RRASSESS_COMMON_HASH_H_

#include <cstdint>
#include <string>
#include <string_view>

namespace rrassess {

// 64-bit FNV-1a, incremental.
class Fnv1a64 {
 public:
  void Update(std::string_view bytes);
  uint64_t Digest() const { return state_; }
  std::string HexDigest() const;

 private:
  uint64_t state_ = 0xcbf29ce484222325ULL;
};

// splitmix64 finalizer; used to derive independent seeds from a global seed.
uint64_t MixSeed(uint64_t a, uint64_t b);

}  // namespace rrassess

#endif  // RRASSESS_COMMON_HASH_H_
