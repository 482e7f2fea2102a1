// cli/config.cc

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

#include "rrassess/cli/config.h"

#include <algorithm>

#include "json.hpp"
#include "rrassess/common/error.h"
#include "rrassess/common/hash.h"

namespace rrassess::cli {

std::vector<std::string> RunConfig::ComputablePresets() const {
  std::vector<std::string> requested = presets;
  if (requested.empty()) requested = {"is09-analog", "egemaps-analog"};
  std::vector<std::string> out;
  for (const auto &name : requested) {
    const std::string analog = functionals::BuiltinPreset(name).name;
    if (std::find(out.begin(), out.end(), analog) == out.end())
      out.push_back(analog);
  }
  return out;
}

std::string RunConfig::CanonicalJson() const {
  nlohmann::ordered_json j;
  j["manifest"] = manifest;
  j["presets"] = ComputablePresets();
  j["wordlist"] = wordlist;
  j["silence_floor_db"] = silence_floor_db;
  j["seed"] = seed;
  j["mode"] = ModeName(mode);
  return j.dump();
}

std::string ModeName(functionals::ExtractionMode mode) {
  return mode == functionals::ExtractionMode::kFragment ? "fragment"
                                                        : "utterance";
}

functionals::ExtractionMode ModeFromName(const std::string &name) {
  if (name == "fragment") return functionals::ExtractionMode::kFragment;
  if (name == "utterance") return functionals::ExtractionMode::kUtterance;
  throw UsageError("--mode must be fragment or utterance, got '" + name + "'");
}

std::string ConfigHash(const RunConfig &config, const corpus::Corpus &corpus) {
  Fnv1a64 h;
  h.Update(config.CanonicalJson());
  for (const auto &path : corpus.AssetPaths()) {
    h.Update(path);
    h.Update(ReadFileBytes(path));
  }
  if (!config.wordlist.empty()) h.Update(ReadFileBytes(config.wordlist));
  return h.HexDigest();
}

}  // namespace rrassess::cli
