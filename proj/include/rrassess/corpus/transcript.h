// corpus/transcript.h

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

#ifndef RRASSESS_CORPUS_TRANSCRIPT_H_
#define RRASSESS_CORPUS_TRANSCRIPT_H_

#include <string>
#include <string_view>
#include <vector>

#include "rrassess/corpus/types.h"

namespace rrassess::corpus {

/// Cleaned transcript, one sentence per line. Brief pauses are commas; a long
/// pause is a full stop, which ends the sentence. Punctuation marks are
/// separate tokens.
struct Transcript {
  std::vector<std::vector<std::string>> sentences;
  std::string raw_text;

  std::size_t NumTokens() const;
};

/// Splits lines into sentences and tokens (whitespace, with punctuation
/// split off). Blank lines are kept as empty sentences so validation can
/// report them.
Transcript ParseTranscript(std::string_view text);

/// One sentence per line, punctuation attached to the preceding word.
std::string SerializeTranscript(const Transcript &t);

bool IsPauseOrPunct(std::string_view token);

struct Violation {
  std::size_t sentence;
  std::string message;
};

/// Convention checks: every sentence is non-empty, ends in a full stop, has
/// no inner full stop and no punctuation other than commas and full stops;
/// no logged disfluency surface survives near its logged position. Event
/// offsets count words of the pre-removal stream, so the expected cleaned
/// position is shifted by the words of earlier events in the same sentence,
/// and the check covers that position +/- 1 (repetitions only look forward
/// because the retained original precedes them).
std::vector<Violation> ValidateTranscript(const Transcript &t,
                                          const DisfluencyLog &log);

}  // namespace rrassess::corpus

#endif  // RRASSESS_CORPUS_TRANSCRIPT_H_
