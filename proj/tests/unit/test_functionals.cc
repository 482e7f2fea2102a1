// tests/unit/test_functionals.cc

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

#include <cmath>
#include <random>

#include "doctest.h"
#include "rrassess/common/error.h"
#include "rrassess/functionals/functionals.h"
#include "rrassess/functionals/presets.h"
#include "support/oracles.h"

using namespace rrassess;
using namespace rrassess::functionals;

TEST_SUITE("functionals") {

TEST_CASE("functionals match the two-pass oracle") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g(1.0, 3.0);
  const FunctionalSet all = FunctionalSet::All();
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<double> x(2 + rng() % 200);
    for (auto &v : x) v = g(rng);
    auto got = ComputeFunctionals(x, all);
    auto want = oracle::NaiveFunctionals(x);
    REQUIRE(got.size() == 12);
    for (std::size_t i = 0; i < got.size(); ++i) {
      const std::string name = FunctionalName(all.items()[i]);
      CHECK_MESSAGE(got[i] == doctest::Approx(want.at(name)).epsilon(1e-9), name);
    }
  }
}

TEST_CASE("constant contour has zero spread and zero shape moments") {
  std::vector<double> x(10, 2.5);
  auto v = ComputeFunctionals(x, FunctionalSet::All());
  CHECK(v[0] == 2.5);
  CHECK(v[1] == 0.0);
  CHECK(v[4] == 0.0);
  CHECK(v[7] == 0.0);
  CHECK(v[10] == 0.0);
  CHECK(v[11] == 0.0);
}

TEST_CASE("ramp has unit slope and zero fit error") {
  std::vector<double> x = {3, 4, 5, 6, 7};
  auto v = ComputeFunctionals(x, FunctionalSet::All());
  CHECK(v[7] == doctest::Approx(1.0));
  CHECK(v[8] == doctest::Approx(3.0));
  CHECK(v[9] == doctest::Approx(0.0));
  CHECK(v[5] == 0.0);
  CHECK(v[6] == 1.0);
}

TEST_CASE("bad inputs are rejected") {
  CHECK_THROWS_AS(ComputeFunctionals(std::vector<double>{1.0}, FunctionalSet::All()),
                  DataError);
  CHECK_THROWS_AS(ComputeFunctionals(std::vector<double>{1.0, NAN}, FunctionalSet::All()),
                  DataError);
  CHECK_THROWS_AS(FunctionalSet({}), UsageError);
  CHECK_THROWS_AS(FunctionalSet({Functional::kMean, Functional::kMean}), UsageError);
  CHECK_THROWS_AS(FunctionalFromName("median"), UsageError);
}

TEST_CASE("analog presets have the published dimensionality") {
  CHECK(Is09Analog().ComputedDim() == 384);
  CHECK(EgemapsAnalog().ComputedDim() == 88);
  CHECK(Is09Analog().FeatureNames().size() == 384);
  CHECK(EgemapsAnalog().FeatureNames().size() == 88);
  auto sig = oracle::Sine(180.0, 16000, 2.0);
  for (const auto &p : {Is09Analog(), EgemapsAnalog()}) {
    auto frag = AssemblePreset(sig, p, ExtractionMode::kFragment, -40.0);
    auto utt = AssemblePreset(sig, p, ExtractionMode::kUtterance, -40.0);
    REQUIRE(frag.size() == 4);
    REQUIRE(utt.size() == 1);
    CHECK(frag[0].values.size() == p.declared_dim);
    CHECK(utt[0].values.size() == p.declared_dim);
    CHECK(frag[2].provenance == "frag-2");
    CHECK(utt[0].provenance == "whole-utterance");
  }
}

TEST_CASE("registry lists the eight published sets") {
  const auto &reg = PresetRegistry();
  REQUIRE(reg.size() == 8);
  std::size_t computable = 0;
  for (const auto &e : reg) computable += e.computable;
  CHECK(computable == 2);
  CHECK(LookupPreset("IS09 emotion")->dim == 384);
  CHECK(LookupPreset("eGeMAPS")->dim == 88);
  CHECK(LookupPreset("IS13 ComParE")->dim == 6373);
  CHECK_FALSE(LookupPreset("nonexistent").has_value());
  CHECK_THROWS(BuiltinPreset("IS13 ComParE"));
}

TEST_CASE("zero audio yields no fragment vectors") {
  dsp::AudioSignal z;
  z.sample_rate = 16000;
  z.samples.assign(32000, 0.0);
  CHECK(AssemblePreset(z, EgemapsAnalog(), ExtractionMode::kFragment, -40.0).empty());
}

TEST_CASE("preset json validates its declared dimension") {
  const std::string ok = R"({"name":"tiny","lld_columns":["rms","f0"],
    "include_deltas":false,"functionals":["mean","max"],"declared_dim":4})";
  auto p = PresetFromJson(ok);
  CHECK(p.ComputedDim() == 4);
  std::string bad = ok;
  bad.replace(bad.find("\"declared_dim\":4"), 16, "\"declared_dim\":5");
  CHECK_THROWS(PresetFromJson(bad));
}

}
