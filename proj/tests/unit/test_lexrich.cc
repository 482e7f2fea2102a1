// tests/unit/test_lexrich.cc

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

#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "rrassess/common/error.h"
#include "rrassess/corpus/transcript.h"
#include "rrassess/lexrich/metrics.h"
#include "rrassess/lexrich/profile.h"
#include "rrassess/lexrich/tagger.h"
#include "support/oracles.h"

using namespace rrassess;
using namespace rrassess::lexrich;

namespace {

WordList ToyList() {
  std::string text = "# toy frequency list\n\n";
  for (const auto &w : oracle::ToyWordList()) text += w + "\n";
  return WordList::FromText(text);
}

LexMetricVector Metrics(const std::vector<TaggedToken> &toks, std::size_t k = 12) {
  return ComputeLexMetrics(BuildProfile(toks, ToyList(), k));
}

}  // namespace

TEST_SUITE("lexrich") {

TEST_CASE("word list ranks by line and skips comments") {
  WordList wl = ToyList();
  CHECK(wl.size() == oracle::ToyWordList().size());
  CHECK(wl.Rank("the") == 1u);
  CHECK(wl.Rank("BE") == 2u);
  CHECK_FALSE(wl.Rank("nebula").has_value());
}

TEST_CASE("metrics agree with the brute-force oracle") {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 20 + rng() % 281;
    auto toks = oracle::RandomTaggedText(rng, n);
    const std::size_t k = 1 + rng() % 24;
    const uint64_t seed = rng();
    auto got = ComputeLexMetrics(BuildProfile(toks, ToyList(), k), seed);
    auto want = oracle::BruteLexMetrics(toks, oracle::ToyWordList(), k, seed);
    for (std::size_t i = 0; i < kNumLexMetrics; ++i) {
      INFO(LexMetricNames()[i]);
      REQUIRE(got.values[i].has_value() == want[i].has_value());
      if (want[i]) CHECK(std::abs(*got.values[i] - *want[i]) <= 1e-9);
    }
  }
}

TEST_CASE("worked example: ten tokens seven types") {
  std::vector<TaggedToken> toks;
  for (const char *w : {"a", "b", "c", "d", "e", "f", "g", "a", "b", "c"})
    toks.push_back({w, w, "NN"});
  auto m = Metrics(toks);
  CHECK(*m.Get("TTR") == doctest::Approx(0.7));
  CHECK(*m.Get("RTTR") == doctest::Approx(7.0 / std::sqrt(10.0)));
  CHECK(*m.Get("NDW") == 7.0);
  CHECK_FALSE(m.Get("MSTTR-50").has_value());
  CHECK_FALSE(m.Get("NDW-ER50").has_value());
  CHECK_FALSE(m.Get("VV1").has_value());
  CHECK_THROWS_AS(m.Get("XYZ"), UsageError);
}

TEST_CASE("one repeated word") {
  std::vector<TaggedToken> toks(100, TaggedToken{"cat", "cat", "NN"});
  auto m = Metrics(toks);
  CHECK(*m.Get("TTR") == 0.01);
  CHECK(*m.Get("NDW") == 1.0);
  CHECK(*m.Get("LogTTR") == 0.0);
  CHECK(*m.Get("NDW-ER50") == 1.0);
  CHECK(*m.Get("MSTTR-50") == 0.02);
}

TEST_CASE("self-concatenation identities") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    auto toks = oracle::RandomTaggedText(rng, 20 + rng() % 200);
    auto twice = toks;
    twice.insert(twice.end(), toks.begin(), toks.end());
    auto a = Metrics(toks), b = Metrics(twice);
    CHECK(*b.Get("NDW") == *a.Get("NDW"));
    CHECK(*b.Get("TTR") == *a.Get("TTR") / 2.0);
    CHECK(*b.Get("RTTR") == doctest::Approx(*a.Get("RTTR") / std::sqrt(2.0)).epsilon(1e-14));
  }
}

TEST_CASE("sampled NDW stays within bounds and is seed-stable") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    auto toks = oracle::RandomTaggedText(rng, 60 + rng() % 200);
    auto p = BuildProfile(toks, ToyList());
    auto m = ComputeLexMetrics(p, 77);
    const double er = *m.Get("NDW-ER50");
    CHECK(er >= 1.0);
    CHECK(er <= 50.0);
    CHECK(er <= *m.Get("NDW"));
    CHECK(ComputeLexMetrics(p, 77).values == m.values);
  }
}

TEST_CASE("sentence order does not move order-free metrics") {
  std::mt19937_64 rng(12);
  auto a = oracle::RandomTaggedText(rng, 80);
  auto b = oracle::RandomTaggedText(rng, 90);
  auto ab = a, ba = b;
  ab.insert(ab.end(), b.begin(), b.end());
  ba.insert(ba.end(), a.begin(), a.end());
  auto m1 = Metrics(ab), m2 = Metrics(ba);
  for (std::size_t i = 0; i < kNumLexMetrics; ++i) {
    const std::string &name = LexMetricNames()[i];
    if (name == "NDW-50" || name == "NDW-ES50" || name == "MSTTR-50" ||
        name == "NDW-ER50")
      continue;
    INFO(name);
    CHECK(m1.values[i] == m2.values[i]);
  }
}

TEST_CASE("lexical classes") {
  CHECK(ClassifyLexical({"dogs", "dog", "NNS"}) == LexClass::kNoun);
  CHECK(ClassifyLexical({"is", "be", "VBZ"}) == LexClass::kNone);
  CHECK(ClassifyLexical({"had", "have", "VBD"}) == LexClass::kNone);
  CHECK(ClassifyLexical({"ran", "run", "VBD"}) == LexClass::kVerb);
  CHECK(ClassifyLexical({"quickly", "quickly", "RB"}) == LexClass::kAdverb);
  CHECK(ClassifyLexical({"only", "only", "RB"}) == LexClass::kNone);
  CHECK(ClassifyLexical({"fly", "fly", "RB"}) == LexClass::kNone);
  CHECK(ClassifyLexical({"happier", "happy", "JJR"}) == LexClass::kAdjective);
  CHECK_FALSE(IsWordToken({",", ",", ","}));
  CHECK(IsWordToken({"3", "3", "CD"}));
}

TEST_CASE("punctuation-only text has no profile") {
  std::vector<TaggedToken> toks = {{".", ".", "."}, {",", ",", ","}};
  CHECK_THROWS_AS(BuildProfile(toks, ToyList()), DataError);
}

TEST_CASE("gold tags align with the transcript") {
  auto t = corpus::ParseTranscript("The dogs ran quickly.\nHe was happy.\n");
  auto toks = TagTokens(t, std::string("DT NNS VBD RB .\nPRP VBD JJ .\n"));
  REQUIRE(toks.size() == 9);
  CHECK(toks[1].lemma == "dog");
  CHECK(toks[2].lemma == "run");
  CHECK(toks[6].lemma == "be");
  CHECK(toks[4].pos == ".");
  CHECK_THROWS_AS(TagTokens(t, std::string("DT NNS VBD RB .\n")), DataError);
  CHECK_THROWS_AS(TagTokens(t, std::string("DT NNS VBD RB .\nPRP VBD QQ .\n")),
                  DataError);
}

TEST_CASE("fallback tagger gives every token a known tag") {
  auto t = corpus::ParseTranscript("The children were playing happily, and she smiled.\n");
  auto toks = TagTokens(t);
  REQUIRE(toks.size() == t.NumTokens());
  for (const auto &tok : toks) CHECK(IsKnownTag(tok.pos));
  CHECK(toks[0].pos == "DT");
  CHECK(toks.back().pos == ".");
  CHECK(toks[5].pos == ",");
}

TEST_CASE("lemmatizer handles common inflections") {
  CHECK(Lemmatize("went", "VBD") == "go");
  CHECK(Lemmatize("Dogs", "NNS") == "dog");
  CHECK(Lemmatize("parties", "NNS") == "party");
  CHECK(Lemmatize("walked", "VBD") == "walk");
  CHECK(Lemmatize("running", "VBG") == "run");
  CHECK(Lemmatize("children", "NNS") == "child");
  CHECK(Lemmatize("was", "VBD") == "be");
}

}
