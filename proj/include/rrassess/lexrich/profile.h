// lexrich/profile.h

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

#ifndef RRASSESS_LEXRICH_PROFILE_H_
#define RRASSESS_LEXRICH_PROFILE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rrassess/lexrich/tagger.h"

namespace rrassess::lexrich {

inline constexpr std::size_t kDefaultSophisticationRank = 2000;

/// Frequency-ranked lemma list; rank is the 1-based line number. Blank lines
/// and lines starting with '#' are skipped and do not consume a rank.
class WordList {
 public:
  WordList() = default;
  static WordList FromText(std::string_view text);
  static WordList Load(const std::string &path);

  std::optional<std::size_t> Rank(std::string_view lemma) const;
  std::size_t size() const { return ranks_.size(); }

 private:
  std::unordered_map<std::string, std::size_t> ranks_;
};

/// Word class of a lexical token; kNone for function words, auxiliaries,
/// modals and adverbs without an adjectival base.
enum class LexClass { kNone, kNoun, kVerb, kAdjective, kAdverb };

/// Punctuation tokens are not words and are skipped by the profile.
bool IsWordToken(const TaggedToken &t);
LexClass ClassifyLexical(const TaggedToken &t);

struct LexicalProfile {
  std::size_t n = 0, t = 0;
  std::size_t n_lex = 0, t_lex = 0;
  std::size_t n_verb = 0, t_verb = 0;
  std::size_t n_noun = 0, t_noun = 0;
  std::size_t n_adj = 0, t_adj = 0;
  std::size_t n_adv = 0, t_adv = 0;
  std::size_t n_soph = 0, t_soph = 0;
  std::size_t n_soph_lex = 0;
  std::size_t t_sverb = 0;
  // Lemma sequence of word tokens, used by the position-dependent measures.
  std::vector<std::string> lemmas;
};

/// Throws DataError when there are no word tokens.
LexicalProfile BuildProfile(const std::vector<TaggedToken> &tokens,
                            const WordList &wordlist,
                            std::size_t sophistication_rank =
                                kDefaultSophisticationRank);

}  // namespace rrassess::lexrich

#endif  // RRASSESS_LEXRICH_PROFILE_H_
