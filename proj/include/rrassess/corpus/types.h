// corpus/types.h

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

#ifndef RRASSESS_CORPUS_TYPES_H_
#define RRASSESS_CORPUS_TYPES_H_

#include <array>
#include <compare>
#include <string>
#include <vector>

namespace rrassess::corpus {

/// Three-point proficiency scale; the numeric value is the rater score.
enum class Label { kBasic = 1, kAverage = 2, kAdvance = 3 };

constexpr std::array<Label, 3> kLabels = {Label::kBasic, Label::kAverage,
                                          Label::kAdvance};

std::string LabelName(Label l);
/// Accepts "basic"/"average"/"advance"; throws DataError otherwise.
Label LabelFromName(const std::string &name);
/// 0, 1, 2 for basic, average, advance.
inline int LabelIndex(Label l) { return static_cast<int>(l) - 1; }
inline Label LabelAt(int index) { return static_cast<Label>(index + 1); }

enum class Criterion {
  kOralFluency,
  kLexicalRichness,
  kSyntacticMaturity,
  kOverall
};

constexpr std::array<Criterion, 4> kCriteria = {
    Criterion::kOralFluency, Criterion::kLexicalRichness,
    Criterion::kSyntacticMaturity, Criterion::kOverall};

std::string CriterionName(Criterion c);
/// Accepts the snake_case names; throws UsageError otherwise.
Criterion CriterionFromName(const std::string &name);

/// Identifies one recording: participant x day {1,2,3} x article {1,2}.
struct SessionKey {
  std::string participant;
  int day = 0;
  int article = 0;

  auto operator<=>(const SessionKey &) const = default;
  bool operator==(const SessionKey &) const = default;
  std::string ToString() const;
};

constexpr int kNumDays = 3;
constexpr int kNumArticles = 2;

struct RaterScoreSet {
  std::string rater_id;
  std::array<Label, 4> scores{};  // indexed by Criterion

  Label Score(Criterion c) const { return scores[static_cast<int>(c)]; }
};

enum class DisfluencyCategory {
  kMispronunciation,
  kHesitation,
  kRepetition,
  kRepair,
  kDeletion,
  kSubstitution,
  kInsertion,
  kIncomplete,
  kIncomprehensible,
};

std::string DisfluencyCategoryName(DisfluencyCategory c);
/// Throws DataError for a name outside the nine categories.
DisfluencyCategory DisfluencyCategoryFromName(const std::string &name);

struct DisfluencyEvent {
  DisfluencyCategory category;
  std::size_t sentence = 0;  // sentence index
  std::size_t token = 0;     // word offset in the pre-removal stream
  std::string surface;
};

/// Disfluencies are kept beside the transcript, never inside it.
struct DisfluencyLog {
  std::vector<DisfluencyEvent> events;
};

struct LabelAssignment {
  SessionKey key;
  Criterion criterion;
  Label label;
};

}  // namespace rrassess::corpus

#endif  // RRASSESS_CORPUS_TYPES_H_
