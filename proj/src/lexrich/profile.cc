// lexrich/profile.cc

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

#include "rrassess/lexrich/profile.h"

#include <cctype>
#include <set>
#include <sstream>

#include "rrassess/common/error.h"
#include "rrassess/synco/tree.h"

namespace rrassess::lexrich {

namespace {

bool StartsWith(std::string_view s, std::string_view p) {
  return s.substr(0, p.size()) == p;
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (auto &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

WordList WordList::FromText(std::string_view text) {
  WordList wl;
  std::istringstream in{std::string(text)};
  std::size_t rank = 0;
  for (std::string line; std::getline(in, line);) {
    std::istringstream fields(line);
    std::string word;
    if (!(fields >> word) || word[0] == '#') continue;
    ++rank;
    wl.ranks_.emplace(Lower(word), rank);
  }
  return wl;
}

WordList WordList::Load(const std::string &path) {
  return FromText(ReadFileBytes(path));
}

std::optional<std::size_t> WordList::Rank(std::string_view lemma) const {
  auto it = ranks_.find(Lower(lemma));
  if (it == ranks_.end()) return std::nullopt;
  return it->second;
}

bool IsWordToken(const TaggedToken &t) {
  return !synco::IsPunctuationTag(t.pos) && t.pos != "#" && t.pos != "$" &&
         t.pos != "SYM";
}

LexClass ClassifyLexical(const TaggedToken &t) {
  const std::string_view pos = t.pos;
  if (StartsWith(pos, "NN")) return LexClass::kNoun;
  if (StartsWith(pos, "JJ")) return LexClass::kAdjective;
  if (StartsWith(pos, "VB")) {
    if (t.lemma == "be" || t.lemma == "have" || t.lemma == "do")
      return LexClass::kNone;
    return LexClass::kVerb;
  }
  if (StartsWith(pos, "RB")) {
    const std::string w = Lower(t.surface);
    if (w.size() >= 5 && w.compare(w.size() - 2, 2, "ly") == 0)
      return LexClass::kAdverb;
  }
  return LexClass::kNone;
}

LexicalProfile BuildProfile(const std::vector<TaggedToken> &tokens,
                            const WordList &wordlist,
                            std::size_t sophistication_rank) {
  LexicalProfile p;
  std::set<std::string> all, lex, verb, noun, adj, adv, soph, sverb;
  auto sophisticated = [&](const std::string &lemma) {
    auto r = wordlist.Rank(lemma);
    return !r || *r > sophistication_rank;
  };
  for (const auto &tok : tokens) {
    if (!IsWordToken(tok)) continue;
    const std::string lemma = Lower(tok.lemma);
    p.lemmas.push_back(lemma);
    ++p.n;
    all.insert(lemma);
    const bool is_soph = sophisticated(lemma);
    if (is_soph) {
      ++p.n_soph;
      soph.insert(lemma);
    }
    const LexClass cls = ClassifyLexical(tok);
    if (cls == LexClass::kNone) continue;
    ++p.n_lex;
    lex.insert(lemma);
    if (is_soph) ++p.n_soph_lex;
    switch (cls) {
      case LexClass::kNoun: ++p.n_noun; noun.insert(lemma); break;
      case LexClass::kAdjective: ++p.n_adj; adj.insert(lemma); break;
      case LexClass::kAdverb: ++p.n_adv; adv.insert(lemma); break;
      case LexClass::kVerb:
        ++p.n_verb;
        verb.insert(lemma);
        if (is_soph) sverb.insert(lemma);
        break;
      case LexClass::kNone: break;
    }
  }
  if (p.n == 0) throw DataError("lexical profile: no word tokens");
  p.t = all.size();
  p.t_lex = lex.size();
  p.t_verb = verb.size();
  p.t_noun = noun.size();
  p.t_adj = adj.size();
  p.t_adv = adv.size();
  p.t_soph = soph.size();
  p.t_sverb = sverb.size();
  return p;
}

}  // namespace rrassess::lexrich
