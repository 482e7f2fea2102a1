// synco/units.h

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

#ifndef RRASSESS_SYNCO_UNITS_H_
#define RRASSESS_SYNCO_UNITS_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "rrassess/synco/tree.h"

namespace rrassess::synco {

struct ProductionCounts {
  std::size_t w = 0;   // words
  std::size_t s = 0;   // sentences
  std::size_t c = 0;   // clauses
  std::size_t t = 0;   // T-units
  std::size_t ct = 0;  // complex T-units
  std::size_t dc = 0;  // dependent clauses
  std::size_t cp = 0;  // coordinate phrases
  std::size_t cn = 0;  // complex nominals
  std::size_t vp = 0;  // verb phrases

  ProductionCounts &operator+=(const ProductionCounts &o);
  bool operator==(const ProductionCounts &) const = default;
};

ProductionCounts operator+(ProductionCounts a, const ProductionCounts &b);

/// Label without function tags or indices: "NP-SBJ-1" -> "NP".
std::string_view BaseLabel(std::string_view label);

/// Collins-style head child index for VP, S, SQ, SINV and SBAR; the first
/// child for other categories.
std::size_t HeadChild(const ParseTree &node);

/// Unit counts over one tree per sentence. Each tree is analysed under a
/// ROOT node (added if missing). Pattern list:
///
///   clause  S|SINV|SQ that is an imperative under ROOT (first child VP
///           headed by VB), is headed by MD|VBZ|VBP|VBD, or has a VP child
///           headed by a finite tag or coordinating such VPs; also FRAG
///           under ROOT with no clause inside.
///   T-unit  S|SBARQ|SINV|SQ under ROOT, or preceded by such a sister and
///           not inside SBAR or VP; also FRAG under ROOT with no T-unit
///           inside.
///   DC      SBAR with a clause child.
///   CT      T-unit dominating a DC.
///   CP      ADJP|ADVP|NP|VP with a CC child and at least two other
///           non-punctuation children.
///   CN      NP not directly under NP dominating JJ|POS|PP|S|VBG or an NP
///           with a later NP sister not immediately followed by CC;
///           SBAR headed by WHNP, by "that"/"for", or starting with S, that
///           is followed by a VP sister or is a child of VP;
///           S with a VP child headed by VBG|TO, followed by a VP sister.
///   VP      VP directly under S|SINV|SQ; MD|VBZ|VBP|VBD under an SQ with no
///           VP child.
///   W       leaves other than punctuation and -NONE-.
ProductionCounts CountUnits(const std::vector<ParseTree> &trees);

}  // namespace rrassess::synco

#endif  // RRASSESS_SYNCO_UNITS_H_
