// common/error.h

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

#ifndef RRASSESS_COMMON_ERROR_H_
#define RRASSESS_COMMON_ERROR_H_

#include <stdexcept>
#include <string>

namespace rrassess {

/// Input data that violates a format or invariant. The CLI maps this to exit
/// status 1.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string &what) : std::runtime_error(what) {}
};

/// Bad arguments or an operation requested outside its contract (exit 2).
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string &what) : std::runtime_error(what) {}
};

/// Reads a whole file; throws DataError naming the path when it can't.
std::string ReadFileBytes(const std::string &path);

void WriteFileBytes(const std::string &path, const std::string &bytes);

}  // namespace rrassess

#endif  // RRASSESS_COMMON_ERROR_H_
