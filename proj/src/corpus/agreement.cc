// corpus/agreement.cc

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

#include "rrassess/common/error.h"
#include "rrassess/corpus/corpus.h"

namespace rrassess::corpus {

double InterRaterAgreement(
    const std::vector<std::vector<RaterScoreSet>> &sessions,
    Criterion criterion) {
  if (sessions.empty()) throw DataError("agreement: no sessions");
  long pairs = 0, agreeing = 0;
  for (std::size_t s = 0; s < sessions.size(); ++s) {
    const auto &raters = sessions[s];
    if (raters.size() < 2)
      throw DataError("agreement: session " + std::to_string(s) +
                      " has fewer than two raters");
    for (std::size_t i = 0; i < raters.size(); ++i)
      for (std::size_t j = i + 1; j < raters.size(); ++j) {
        ++pairs;
        if (raters[i].Score(criterion) == raters[j].Score(criterion))
          ++agreeing;
      }
  }
  return static_cast<double>(agreeing) / static_cast<double>(pairs);
}

double InterRaterAgreement(const Corpus &corpus, Criterion criterion) {
  std::vector<std::vector<RaterScoreSet>> sessions;
  for (const auto &s : corpus.sessions) {
    if (s.ratings.size() < 2)
      throw DataError("agreement: session " + s.key.ToString() +
                      " has fewer than two raters");
    sessions.push_back(s.ratings);
  }
  return InterRaterAgreement(sessions, criterion);
}

}  // namespace rrassess::corpus
