// lexrich/tagger.cc

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

#include "rrassess/lexrich/tagger.h"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "rrassess/common/error.h"

namespace rrassess::lexrich {

namespace {

std::string Lower(std::string_view s) {
  std::string out(s);
  for (auto &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

bool IsVowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

const std::unordered_set<std::string> &TagSet() {
  static const std::unordered_set<std::string> tags = {
      "CC",  "CD",  "DT",   "EX",  "FW",  "IN",  "JJ",  "JJR", "JJS",
      "LS",  "MD",  "NN",   "NNS", "NNP", "NNPS", "PDT", "POS", "PRP",
      "PRP$", "RB", "RBR",  "RBS", "RP",  "SYM", "TO",  "UH",  "VB",
      "VBD", "VBG", "VBN",  "VBP", "VBZ", "WDT", "WP",  "WP$", "WRB",
      ".",   ",",   ":",    "``",  "''",  "-LRB-", "-RRB-", "#", "$",
      "HYPH", "NFP"};
  return tags;
}

// Closed-class words and frequent irregular verb forms.
const std::unordered_map<std::string, std::string> &Lexicon() {
  static const std::unordered_map<std::string, std::string> lex = {
      {"the", "DT"}, {"a", "DT"}, {"an", "DT"}, {"this", "DT"},
      {"that", "IN"}, {"these", "DT"}, {"those", "DT"}, {"every", "DT"},
      {"each", "DT"}, {"some", "DT"}, {"any", "DT"}, {"no", "DT"},
      {"all", "DT"}, {"both", "DT"}, {"another", "DT"}, {"either", "DT"},
      {"neither", "DT"},
      {"of", "IN"}, {"in", "IN"}, {"on", "IN"}, {"at", "IN"}, {"by", "IN"},
      {"for", "IN"}, {"with", "IN"}, {"from", "IN"}, {"about", "IN"},
      {"into", "IN"}, {"over", "IN"}, {"under", "IN"}, {"after", "IN"},
      {"before", "IN"}, {"through", "IN"}, {"during", "IN"},
      {"without", "IN"}, {"within", "IN"}, {"between", "IN"},
      {"among", "IN"}, {"against", "IN"}, {"since", "IN"}, {"until", "IN"},
      {"than", "IN"}, {"as", "IN"}, {"because", "IN"}, {"if", "IN"},
      {"while", "IN"}, {"although", "IN"}, {"though", "IN"},
      {"whether", "IN"}, {"upon", "IN"}, {"across", "IN"}, {"around", "IN"},
      {"behind", "IN"}, {"like", "IN"}, {"near", "IN"}, {"towards", "IN"},
      {"to", "TO"},
      {"and", "CC"}, {"or", "CC"}, {"but", "CC"}, {"nor", "CC"},
      {"yet", "CC"}, {"so", "RB"},
      {"i", "PRP"}, {"you", "PRP"}, {"he", "PRP"}, {"she", "PRP"},
      {"it", "PRP"}, {"we", "PRP"}, {"they", "PRP"}, {"me", "PRP"},
      {"him", "PRP"}, {"us", "PRP"}, {"them", "PRP"}, {"himself", "PRP"},
      {"herself", "PRP"}, {"itself", "PRP"}, {"themselves", "PRP"},
      {"my", "PRP$"}, {"your", "PRP$"}, {"his", "PRP$"}, {"her", "PRP$"},
      {"its", "PRP$"}, {"our", "PRP$"}, {"their", "PRP$"},
      {"who", "WP"}, {"whom", "WP"}, {"what", "WP"}, {"whose", "WP$"},
      {"which", "WDT"}, {"when", "WRB"}, {"where", "WRB"}, {"why", "WRB"},
      {"how", "WRB"},
      {"can", "MD"}, {"could", "MD"}, {"may", "MD"}, {"might", "MD"},
      {"must", "MD"}, {"shall", "MD"}, {"should", "MD"}, {"will", "MD"},
      {"would", "MD"},
      {"is", "VBZ"}, {"are", "VBP"}, {"am", "VBP"}, {"was", "VBD"},
      {"were", "VBD"}, {"be", "VB"}, {"been", "VBN"}, {"being", "VBG"},
      {"has", "VBZ"}, {"have", "VBP"}, {"had", "VBD"}, {"having", "VBG"},
      {"does", "VBZ"}, {"do", "VBP"}, {"did", "VBD"},
      {"went", "VBD"}, {"came", "VBD"}, {"saw", "VBD"}, {"got", "VBD"},
      {"made", "VBD"}, {"said", "VBD"}, {"took", "VBD"}, {"gave", "VBD"},
      {"knew", "VBD"}, {"thought", "VBD"}, {"found", "VBD"}, {"told", "VBD"},
      {"became", "VBD"}, {"left", "VBD"}, {"felt", "VBD"}, {"brought", "VBD"},
      {"began", "VBD"}, {"kept", "VBD"}, {"held", "VBD"}, {"wrote", "VBD"},
      {"stood", "VBD"}, {"heard", "VBD"}, {"meant", "VBD"}, {"met", "VBD"},
      {"ran", "VBD"}, {"sat", "VBD"}, {"spoke", "VBD"}, {"grew", "VBD"},
      {"lost", "VBD"}, {"fell", "VBD"}, {"sent", "VBD"}, {"built", "VBD"},
      {"ate", "VBD"}, {"drank", "VBD"}, {"won", "VBD"}, {"led", "VBD"},
      {"not", "RB"}, {"very", "RB"}, {"also", "RB"}, {"then", "RB"},
      {"just", "RB"}, {"only", "RB"}, {"too", "RB"}, {"never", "RB"},
      {"always", "RB"}, {"often", "RB"}, {"here", "RB"}, {"now", "RB"},
      {"again", "RB"}, {"there", "EX"}, {"still", "RB"}, {"even", "RB"},
      {"soon", "RB"}, {"already", "RB"}, {"much", "RB"}, {"more", "RBR"},
      {"most", "RBS"}, {"well", "RB"},
      {"one", "CD"}, {"two", "CD"}, {"three", "CD"}, {"four", "CD"},
      {"five", "CD"}, {"six", "CD"}, {"seven", "CD"}, {"eight", "CD"},
      {"nine", "CD"}, {"ten", "CD"}, {"hundred", "CD"}, {"thousand", "CD"},
      {"uh", "UH"}, {"um", "UH"}, {"oh", "UH"}, {"yes", "UH"},
  };
  return lex;
}

const std::unordered_map<std::string, std::string> &Irregulars() {
  static const std::unordered_map<std::string, std::string> irr = {
      {"is", "be"}, {"are", "be"}, {"am", "be"}, {"was", "be"},
      {"were", "be"}, {"been", "be"}, {"being", "be"},
      {"has", "have"}, {"had", "have"}, {"having", "have"},
      {"does", "do"}, {"did", "do"}, {"done", "do"},
      {"went", "go"}, {"gone", "go"}, {"came", "come"}, {"saw", "see"},
      {"seen", "see"}, {"got", "get"}, {"gotten", "get"}, {"made", "make"},
      {"said", "say"}, {"took", "take"}, {"taken", "take"}, {"gave", "give"},
      {"given", "give"}, {"knew", "know"}, {"known", "know"},
      {"thought", "think"}, {"found", "find"}, {"told", "tell"},
      {"became", "become"}, {"left", "leave"}, {"felt", "feel"},
      {"brought", "bring"}, {"began", "begin"}, {"begun", "begin"},
      {"kept", "keep"}, {"held", "hold"}, {"wrote", "write"},
      {"written", "write"}, {"stood", "stand"}, {"heard", "hear"},
      {"meant", "mean"}, {"met", "meet"}, {"ran", "run"}, {"sat", "sit"},
      {"spoke", "speak"}, {"spoken", "speak"}, {"grew", "grow"},
      {"grown", "grow"}, {"lost", "lose"}, {"fell", "fall"},
      {"fallen", "fall"}, {"sent", "send"}, {"built", "build"},
      {"ate", "eat"}, {"eaten", "eat"}, {"drank", "drink"}, {"won", "win"},
      {"led", "lead"}, {"understood", "understand"}, {"paid", "pay"},
      {"children", "child"}, {"men", "man"}, {"women", "woman"},
      {"feet", "foot"}, {"teeth", "tooth"}, {"mice", "mouse"},
      {"better", "good"}, {"best", "good"}, {"worse", "bad"},
      {"worst", "bad"},
  };
  return irr;
}

std::string StripVerbSuffix(const std::string &w, std::size_t n) {
  std::string stem = w.substr(0, w.size() - n);
  // stopped -> stop, running -> run
  if (stem.size() >= 3 && stem[stem.size() - 1] == stem[stem.size() - 2] &&
      !IsVowel(stem.back()) && stem.back() != 'l' && stem.back() != 's')
    stem.pop_back();
  return stem;
}

std::string GuessTag(const std::string &w, const std::string &prev_tag) {
  if (std::all_of(w.begin(), w.end(), [](unsigned char c) {
        return std::isdigit(c) || c == '.' || c == ',';
      }))
    return "CD";
  if (prev_tag == "TO" || prev_tag == "MD") return "VB";
  if (EndsWith(w, "ly") && w.size() > 4) return "RB";
  if (EndsWith(w, "ing") && w.size() > 4) return "VBG";
  if (EndsWith(w, "ed") && w.size() > 3) return "VBD";
  if (EndsWith(w, "ous") || EndsWith(w, "ful") || EndsWith(w, "ive") ||
      EndsWith(w, "able") || EndsWith(w, "ible") || EndsWith(w, "al") ||
      EndsWith(w, "ic") || EndsWith(w, "less") || EndsWith(w, "ish"))
    return "JJ";
  if (EndsWith(w, "s") && !EndsWith(w, "ss") && w.size() > 3)
    return prev_tag == "PRP" || prev_tag == "NN" || prev_tag == "NNP"
               ? "VBZ"
               : "NNS";
  if (prev_tag == "PRP") return "VBP";
  return "NN";
}

}  // namespace

bool IsKnownTag(std::string_view tag) {
  return TagSet().count(std::string(tag)) > 0;
}

std::string Lemmatize(std::string_view surface, std::string_view pos) {
  std::string w = Lower(surface);
  auto irr = Irregulars().find(w);
  if (irr != Irregulars().end()) return irr->second;
  if (pos == "NNS" || pos == "NNPS" || pos == "VBZ") {
    if (EndsWith(w, "ies") && w.size() > 4) return w.substr(0, w.size() - 3) + "y";
    if (EndsWith(w, "sses") || EndsWith(w, "xes") || EndsWith(w, "ches") ||
        EndsWith(w, "shes") || EndsWith(w, "zes"))
      return w.substr(0, w.size() - 2);
    if (EndsWith(w, "s") && !EndsWith(w, "ss") && w.size() > 2)
      return w.substr(0, w.size() - 1);
    return w;
  }
  if (pos == "VBD" || pos == "VBN") {
    if (EndsWith(w, "ied") && w.size() > 4) return w.substr(0, w.size() - 3) + "y";
    if (EndsWith(w, "ed") && w.size() > 3) return StripVerbSuffix(w, 2);
    return w;
  }
  if (pos == "VBG") {
    if (EndsWith(w, "ing") && w.size() > 4) return StripVerbSuffix(w, 3);
    return w;
  }
  if (pos == "JJR" || pos == "RBR") {
    if (EndsWith(w, "ier") && w.size() > 4) return w.substr(0, w.size() - 3) + "y";
    if (EndsWith(w, "er") && w.size() > 3) return w.substr(0, w.size() - 2);
    return w;
  }
  if (pos == "JJS" || pos == "RBS") {
    if (EndsWith(w, "iest") && w.size() > 5) return w.substr(0, w.size() - 4) + "y";
    if (EndsWith(w, "est") && w.size() > 4) return w.substr(0, w.size() - 3);
    return w;
  }
  return w;
}

std::vector<TaggedToken> TagTokens(const corpus::Transcript &transcript,
                                   const std::optional<std::string> &gold_tags) {
  std::vector<TaggedToken> out;
  if (gold_tags) {
    std::vector<std::string> tags;
    std::istringstream in(*gold_tags);
    for (std::string t; in >> t;) {
      if (!IsKnownTag(t)) throw DataError("gold tags: unknown tag '" + t + "'");
      tags.push_back(t);
    }
    if (tags.size() != transcript.NumTokens())
      throw DataError("gold tags: " + std::to_string(tags.size()) +
                      " tags for " + std::to_string(transcript.NumTokens()) +
                      " transcript tokens");
    std::size_t i = 0;
    for (const auto &sent : transcript.sentences)
      for (const auto &tok : sent) {
        out.push_back({tok, Lemmatize(tok, tags[i]), tags[i]});
        ++i;
      }
    return out;
  }
  for (const auto &sent : transcript.sentences) {
    std::string prev = ".";
    for (const auto &tok : sent) {
      std::string tag;
      if (corpus::IsPauseOrPunct(tok)) {
        tag = tok == "," ? "," : (tok == "." || tok == "?" || tok == "!") ? "." : ":";
      } else {
        const std::string w = Lower(tok);
        auto it = Lexicon().find(w);
        tag = it != Lexicon().end() ? it->second : GuessTag(w, prev);
      }
      out.push_back({tok, Lemmatize(tok, tag), tag});
      prev = tag;
    }
  }
  return out;
}

}  // namespace rrassess::lexrich
