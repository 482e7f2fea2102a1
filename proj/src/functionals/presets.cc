// functionals/presets.cc

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

#include "rrassess/functionals/presets.h"

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "rrassess/common/error.h"
#include "rrassess/dsp/fragment.h"
#include "rrassess/dsp/lld.h"

namespace rrassess::functionals {

std::size_t FeatureSetPreset::ComputedDim() const {
  return lld_columns.size() * (include_deltas ? 2 : 1) * functionals.size();
}

void FeatureSetPreset::Validate() const {
  if (lld_columns.empty())
    throw UsageError("preset " + name + " has no LLD columns");
  const auto known = dsp::LldColumnNames();
  for (const auto &c : lld_columns)
    if (std::find(known.begin(), known.end(), c) == known.end())
      throw UsageError("preset " + name + ": unknown LLD column " + c);
  if (declared_dim != ComputedDim())
    throw UsageError("preset " + name + ": declared dimension " +
                     std::to_string(declared_dim) + " != computed " +
                     std::to_string(ComputedDim()));
}

std::vector<std::string> FeatureSetPreset::FeatureNames() const {
  std::vector<std::string> names;
  auto emit = [&](const std::string &col) {
    for (Functional f : functionals.items())
      names.push_back(col + "_" + FunctionalName(f));
  };
  for (const auto &c : lld_columns) emit(c);
  if (include_deltas)
    for (const auto &c : lld_columns) emit(c + "_de");
  return names;
}

FeatureSetPreset Is09Analog() {
  FeatureSetPreset p;
  p.name = "is09-analog";
  p.lld_columns = {"rms", "zcr", "hnr", "f0"};
  for (int i = 2; i <= 13; ++i) p.lld_columns.push_back("mfcc" + std::to_string(i));
  p.include_deltas = true;
  p.functionals = FunctionalSet::All();
  p.declared_dim = 384;
  return p;
}

FeatureSetPreset EgemapsAnalog() {
  FeatureSetPreset p;
  p.name = "egemaps-analog";
  p.lld_columns = {"f0",    "rms",   "jitter", "shimmer",
                   "hnr",   "spectral_centroid", "spectral_flux",
                   "mfcc2", "mfcc3", "mfcc4",  "mfcc5"};
  p.include_deltas = false;
  p.functionals = FunctionalSet({Functional::kMean, Functional::kStddev,
                                 Functional::kMin, Functional::kMax,
                                 Functional::kRange, Functional::kSlope,
                                 Functional::kSkewness, Functional::kKurtosis});
  p.declared_dim = 88;
  return p;
}

FeatureSetPreset PresetFromJson(const std::string &json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception &e) {
    throw UsageError(std::string("preset JSON: ") + e.what());
  }
  try {
    FeatureSetPreset p;
    p.name = j.at("name").get<std::string>();
    p.lld_columns = j.at("lld_columns").get<std::vector<std::string>>();
    p.include_deltas = j.value("include_deltas", false);
    std::vector<Functional> fs;
    for (const auto &n : j.at("functionals")) fs.push_back(FunctionalFromName(n.get<std::string>()));
    p.functionals = FunctionalSet(std::move(fs));
    p.declared_dim = j.contains("declared_dim")
                         ? j.at("declared_dim").get<std::size_t>()
                         : p.ComputedDim();
    p.Validate();
    return p;
  } catch (const nlohmann::json::exception &e) {
    throw UsageError(std::string("preset JSON: ") + e.what());
  }
}

const std::vector<RegistryEntry> &PresetRegistry() {
  static const std::vector<RegistryEntry> registry = {
      {"Avec2013", 2268, false, ""},
      {"ComParE2016", 6373, false, ""},
      {"eGeMAPS", 88, true, "egemaps-analog"},
      {"IS09 emotion", 384, true, "is09-analog"},
      {"IS10 paraling", 1582, false, ""},
      {"IS11 speaker state", 4368, false, ""},
      {"IS12 speaker trait", 5757, false, ""},
      {"IS13 ComParE", 6373, false, ""},
  };
  return registry;
}

std::optional<RegistryEntry> LookupPreset(const std::string &name) {
  for (const auto &e : PresetRegistry())
    if (e.name == name || (!e.analog.empty() && e.analog == name)) return e;
  return std::nullopt;
}

FeatureSetPreset BuiltinPreset(const std::string &name) {
  auto entry = LookupPreset(name);
  if (!entry) throw UsageError("unknown feature set: " + name);
  if (!entry->computable)
    throw UsageError("feature set " + entry->name +
                     " is registry metadata only and cannot be computed");
  if (entry->analog == "is09-analog") return Is09Analog();
  return EgemapsAnalog();
}

FeatureVector ComputePreset(const dsp::LldMatrix &full,
                            const FeatureSetPreset &preset) {
  dsp::LldMatrix m = full.Select(preset.lld_columns);
  if (preset.include_deltas) m = m.Concat(dsp::Delta(m));
  FeatureVector v = ApplyFunctionals(m, preset.functionals);
  v.preset = preset.name;
  if (v.values.size() != preset.declared_dim)
    throw DataError("preset " + preset.name + " produced " +
                    std::to_string(v.values.size()) + " values, expected " +
                    std::to_string(preset.declared_dim));
  for (double x : v.values)
    if (!std::isfinite(x))
      throw DataError("preset " + preset.name + " produced a non-finite value");
  return v;
}

std::vector<FeatureVector> AssemblePreset(const dsp::AudioSignal &signal,
                                          const FeatureSetPreset &preset,
                                          ExtractionMode mode,
                                          double silence_floor_db) {
  preset.Validate();
  std::vector<FeatureVector> out;
  dsp::LldExtractor extractor(signal.sample_rate);
  if (mode == ExtractionMode::kUtterance) {
    FeatureVector v = ComputePreset(extractor.Extract(signal.samples), preset);
    v.provenance = "whole-utterance";
    out.push_back(std::move(v));
    return out;
  }
  auto fragments = dsp::Fragmentize(signal);
  auto silent = dsp::SilenceMask(fragments, silence_floor_db);
  for (std::size_t i = 0; i < fragments.size(); ++i) {
    if (silent[i]) continue;
    FeatureVector v =
        ComputePreset(extractor.Extract(fragments[i].samples), preset);
    v.provenance = "frag-" + std::to_string(i);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace rrassess::functionals
