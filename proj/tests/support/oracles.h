// tests/support/oracles.h

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

#ifndef RRASSESS_TESTS_SUPPORT_ORACLES_H_
#define RRASSESS_TESTS_SUPPORT_ORACLES_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rrassess/dsp/wav.h"
#include "rrassess/learn/matrix.h"
#include "rrassess/lexrich/tagger.h"
#include "rrassess/synco/tree.h"

namespace oracle {

/// amp * sin(2 pi f t) sampled at sr.
rrassess::dsp::AudioSignal Sine(double freq, int sr, double seconds,
                                double amp = 0.5);

double Median(std::vector<double> v);

/// Two-pass textbook statistics keyed by functional name.
std::map<std::string, double> NaiveFunctionals(const std::vector<double> &x);

/// Brute-force count of the 25 lexical metrics in catalog order, working
/// straight from tagged tokens and a ranked word list.
std::array<std::optional<double>, 25> BruteLexMetrics(
    const std::vector<rrassess::lexrich::TaggedToken> &tokens,
    const std::vector<std::string> &ranked_words, std::size_t k,
    uint64_t seed);

/// Random tagged toy text with n word tokens plus scattered punctuation.
std::vector<rrassess::lexrich::TaggedToken> RandomTaggedText(
    std::mt19937_64 &rng, std::size_t n);

/// Small ranked word list used with RandomTaggedText.
std::vector<std::string> ToyWordList();

/// Counts W S C T CT DC CP CN VP for a generated tree.
struct TreeCounts {
  std::array<std::size_t, 9> counts{};
};

/// Random well-formed finite-clause sentence tree with known counts: main
/// clauses optionally coordinated, objects optionally carrying a "that"
/// complement clause, adjectives, and coordinated noun phrases.
rrassess::synco::ParseTree RandomSentenceTree(std::mt19937_64 &rng,
                                              TreeCounts *expected);

/// Three isotropic Gaussian clusters with centres `separation` sigmas apart.
rrassess::learn::Dataset GaussianBlobs(std::size_t per_class,
                                       double separation, std::size_t dim,
                                       uint64_t seed);

}  // namespace oracle

#endif  // RRASSESS_TESTS_SUPPORT_ORACLES_H_
