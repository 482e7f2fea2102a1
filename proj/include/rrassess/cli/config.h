// cli/config.h

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

#ifndef RRASSESS_CLI_CONFIG_H_
#define RRASSESS_CLI_CONFIG_H_

#include <cstdint>
#include <string>
#include <vector>

#include "rrassess/corpus/corpus.h"
#include "rrassess/functionals/presets.h"

namespace rrassess::cli {

inline constexpr uint64_t kDefaultSeed = 0x5eed;

struct RunConfig {
  std::string manifest;
  std::vector<std::string> presets;  // empty selects both analogs
  std::string wordlist;
  double silence_floor_db = -40.0;
  uint64_t seed = kDefaultSeed;
  functionals::ExtractionMode mode = functionals::ExtractionMode::kFragment;
  std::string out;

  /// Analog preset names for the requested presets, deduplicated in request
  /// order. Throws UsageError for unknown or metadata-only names.
  std::vector<std::string> ComputablePresets() const;

  /// Canonical JSON of the settings that affect artifact bytes (the output
  /// directory is excluded).
  std::string CanonicalJson() const;
};

std::string ModeName(functionals::ExtractionMode mode);
/// Throws UsageError for anything but "fragment" or "utterance".
functionals::ExtractionMode ModeFromName(const std::string &name);

/// FNV-1a over CanonicalJson() and the bytes of the manifest, every asset it
/// references, and the word list when set.
std::string ConfigHash(const RunConfig &config, const corpus::Corpus &corpus);

}  // namespace rrassess::cli

#endif  // RRASSESS_CLI_CONFIG_H_
