// corpus/transcript.cc

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

#include "rrassess/corpus/transcript.h"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace rrassess::corpus {

namespace {

bool IsPunctChar(char c) {
  return c == ',' || c == '.' || c == '?' || c == '!' || c == ';' || c == ':';
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (auto &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::vector<std::string> Tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) tokens.push_back(std::move(cur));
    cur.clear();
  };
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else if (IsPunctChar(c)) {
      flush();
      tokens.emplace_back(1, c);
    } else {
      cur.push_back(c);
    }
  }
  flush();
  return tokens;
}

}  // namespace

std::size_t Transcript::NumTokens() const {
  std::size_t n = 0;
  for (const auto &s : sentences) n += s.size();
  return n;
}

bool IsPauseOrPunct(std::string_view token) {
  return token.size() == 1 && IsPunctChar(token[0]);
}

Transcript ParseTranscript(std::string_view text) {
  Transcript t;
  t.raw_text = std::string(text);
  std::istringstream in(t.raw_text);
  std::string line;
  std::vector<std::vector<std::string>> lines;
  while (std::getline(in, line)) lines.push_back(Tokenize(line));
  // Trailing blank lines are file formatting, not empty sentences.
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  t.sentences = std::move(lines);
  return t;
}

std::string SerializeTranscript(const Transcript &t) {
  std::string out;
  for (const auto &sentence : t.sentences) {
    bool first = true;
    for (const auto &tok : sentence) {
      if (!first && !IsPauseOrPunct(tok)) out.push_back(' ');
      out += tok;
      first = false;
    }
    out.push_back('\n');
  }
  return out;
}

std::vector<Violation> ValidateTranscript(const Transcript &t,
                                          const DisfluencyLog &log) {
  std::vector<Violation> v;
  for (std::size_t s = 0; s < t.sentences.size(); ++s) {
    const auto &sent = t.sentences[s];
    std::size_t words = std::count_if(sent.begin(), sent.end(), [](const auto &tok) {
      return !IsPauseOrPunct(tok);
    });
    if (words == 0) {
      v.push_back({s, "empty sentence"});
      continue;
    }
    if (sent.back() != ".")
      v.push_back({s, "sentence does not end with a full stop"});
    for (std::size_t i = 0; i + 1 < sent.size(); ++i)
      if (sent[i] == ".")
        v.push_back({s, "full stop inside a sentence (long pause must end the line)"});
    for (const auto &tok : sent)
      if (IsPauseOrPunct(tok) && tok != "," && tok != ".")
        v.push_back({s, "unexpected punctuation '" + tok + "'"});
  }

  // Expected cleaned offset of each event = logged offset minus words removed
  // by earlier events in the same sentence.
  std::vector<const DisfluencyEvent *> events;
  for (const auto &e : log.events) events.push_back(&e);
  std::stable_sort(events.begin(), events.end(), [](auto *a, auto *b) {
    return a->sentence != b->sentence ? a->sentence < b->sentence
                                      : a->token < b->token;
  });
  std::size_t removed = 0, current_sentence = static_cast<std::size_t>(-1);
  for (const auto *e : events) {
    if (e->sentence != current_sentence) {
      current_sentence = e->sentence;
      removed = 0;
    }
    std::istringstream ss(e->surface);
    std::vector<std::string> surface;
    for (std::string w; ss >> w;) surface.push_back(Lower(w));
    if (e->sentence >= t.sentences.size()) {
      v.push_back({e->sentence, "disfluency '" + e->surface +
                                    "' logged outside the transcript"});
      continue;
    }
    std::vector<std::string> words;
    for (const auto &tok : t.sentences[e->sentence])
      if (!IsPauseOrPunct(tok)) words.push_back(Lower(tok));
    const auto expected = static_cast<std::ptrdiff_t>(e->token) -
                          static_cast<std::ptrdiff_t>(removed);
    removed += surface.size();
    if (surface.empty()) continue;
    const std::ptrdiff_t lo =
        e->category == DisfluencyCategory::kRepetition ? expected : expected - 1;
    bool found = false;
    for (std::ptrdiff_t start = lo; start <= expected + 1 && !found; ++start) {
      if (start < 0 ||
          start + static_cast<std::ptrdiff_t>(surface.size()) >
              static_cast<std::ptrdiff_t>(words.size()))
        continue;
      found = std::equal(surface.begin(), surface.end(), words.begin() + start);
    }
    if (found)
      v.push_back({e->sentence, DisfluencyCategoryName(e->category) + " '" +
                                    e->surface +
                                    "' still present in the transcript"});
  }
  return v;
}

}  // namespace rrassess::corpus
