// corpus/ratings.h

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

#ifndef RRASSESS_CORPUS_RATINGS_H_
#define RRASSESS_CORPUS_RATINGS_H_

#include <string>
#include <vector>

#include "rrassess/corpus/types.h"

namespace rrassess::corpus {

/// Mean of the numeric rater scores, rounded half up, mapped back onto the
/// three-point scale. Throws DataError for an empty rater list.
Label DeriveLabel(const std::vector<RaterScoreSet> &raters, Criterion c);

/// {"raters": [{"rater": id, "scores": {criterion: 1..3 or label name}}]}.
/// All four criteria are required for every rater.
std::vector<RaterScoreSet> ParseRatingsJson(const std::string &text,
                                            const std::string &source);
std::string RatingsToJson(const std::vector<RaterScoreSet> &raters);

/// {"events": [{"category", "sentence", "token", "surface"}]}.
DisfluencyLog ParseDisfluencyJson(const std::string &text,
                                  const std::string &source);
std::string DisfluencyToJson(const DisfluencyLog &log);

}  // namespace rrassess::corpus

#endif  // RRASSESS_CORPUS_RATINGS_H_
