// lexrich/tagger.h

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

#ifndef RRASSESS_LEXRICH_TAGGER_H_
#define RRASSESS_LEXRICH_TAGGER_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rrassess/corpus/transcript.h"

namespace rrassess::lexrich {

struct TaggedToken {
  std::string surface;
  std::string lemma;  // lowercase
  std::string pos;    // Penn Treebank tag
};

/// Penn Treebank tags plus punctuation tags accepted in gold tag files.
bool IsKnownTag(std::string_view tag);

/// Lowercase lemma from suffix rules plus an irregular-form table.
std::string Lemmatize(std::string_view surface, std::string_view pos);

/// Tags a transcript. With gold tags (one line per sentence, whitespace
/// separated, aligned with the transcript tokens including punctuation) the
/// gold tags are adopted; otherwise a deterministic closed-class lexicon and
/// suffix-rule tagger is used. Throws DataError when the gold tag count does
/// not match the token count or a tag is unknown.
std::vector<TaggedToken> TagTokens(
    const corpus::Transcript &transcript,
    const std::optional<std::string> &gold_tags = std::nullopt);

}  // namespace rrassess::lexrich

#endif  // RRASSESS_LEXRICH_TAGGER_H_
