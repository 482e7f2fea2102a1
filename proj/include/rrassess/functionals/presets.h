// functionals/presets.h

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

#ifndef RRASSESS_FUNCTIONALS_PRESETS_H_
#define RRASSESS_FUNCTIONALS_PRESETS_H_

#include <optional>
#include <string>
#include <vector>

#include "rrassess/dsp/wav.h"
#include "rrassess/functionals/functionals.h"

namespace rrassess::functionals {

/// A computable feature set: LLD columns (optionally with their deltas)
/// reduced by a functional set.
struct FeatureSetPreset {
  std::string name;
  std::vector<std::string> lld_columns;
  bool include_deltas = false;
  FunctionalSet functionals = FunctionalSet::All();
  std::size_t declared_dim = 0;

  /// columns x (deltas ? 2 : 1) x functionals.
  std::size_t ComputedDim() const;
  /// Throws UsageError if declared_dim disagrees with ComputedDim() or a
  /// column is not an LLD name.
  void Validate() const;
  /// "<lld>_<functional>", delta columns as "<lld>_de_<functional>".
  std::vector<std::string> FeatureNames() const;
};

/// 16 LLDs with deltas x 12 functionals = 384.
FeatureSetPreset Is09Analog();
/// 11 LLDs x 8 functionals = 88.
FeatureSetPreset EgemapsAnalog();

/// Parses {"name", "lld_columns", "include_deltas", "functionals",
/// optional "declared_dim"}.
FeatureSetPreset PresetFromJson(const std::string &json_text);

struct RegistryEntry {
  std::string name;      // published feature-set name
  std::size_t dim;       // published dimensionality
  bool computable;
  std::string analog;    // computable analog preset name, empty if none
};

/// The eight published feature sets in table order. Two map to computable
/// analogs; the rest are metadata only.
const std::vector<RegistryEntry> &PresetRegistry();

/// Looks up by published name or analog name.
std::optional<RegistryEntry> LookupPreset(const std::string &name);

/// Computable preset for a registry or analog name. Throws UsageError for
/// metadata-only or unknown names.
FeatureSetPreset BuiltinPreset(const std::string &name);

enum class ExtractionMode { kFragment, kUtterance };

/// Feature vectors for one recording: one per non-silent 0.5 s fragment in
/// fragment mode, a single whole-signal vector in utterance mode. Every
/// vector has preset.declared_dim values.
std::vector<FeatureVector> AssemblePreset(const dsp::AudioSignal &signal,
                                          const FeatureSetPreset &preset,
                                          ExtractionMode mode,
                                          double silence_floor_db);

/// Vector for one precomputed LLD matrix.
FeatureVector ComputePreset(const dsp::LldMatrix &full,
                            const FeatureSetPreset &preset);

}  // namespace rrassess::functionals

#endif  // RRASSESS_FUNCTIONALS_PRESETS_H_
