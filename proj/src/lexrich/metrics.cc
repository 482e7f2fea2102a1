// lexrich/metrics.cc

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

#include "rrassess/lexrich/metrics.h"

#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "rrassess/common/error.h"

namespace rrassess::lexrich {

namespace {

using Opt = std::optional<double>;

Opt Ratio(double num, double den) {
  if (den == 0.0) return std::nullopt;
  return num / den;
}

std::size_t DistinctIn(const std::vector<std::string> &lemmas,
                       std::size_t begin, std::size_t end) {
  std::set<std::string> seen(lemmas.begin() + begin, lemmas.begin() + end);
  return seen.size();
}

Opt RandomSampleTypes(const std::vector<std::string> &lemmas, uint64_t seed) {
  const std::size_t n = lemmas.size();
  if (n < kSampleSize) return std::nullopt;
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> idx(n);
  double total = 0.0;
  for (std::size_t s = 0; s < kNumSamples; ++s) {
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::set<std::string> seen;
    for (std::size_t i = 0; i < kSampleSize; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng() % (n - i));
      std::swap(idx[i], idx[j]);
      seen.insert(lemmas[idx[i]]);
    }
    total += static_cast<double>(seen.size());
  }
  return total / kNumSamples;
}

Opt SequentialSampleTypes(const std::vector<std::string> &lemmas,
                          uint64_t seed) {
  const std::size_t n = lemmas.size();
  if (n < kSampleSize) return std::nullopt;
  std::mt19937_64 rng(seed);
  double total = 0.0;
  for (std::size_t s = 0; s < kNumSamples; ++s) {
    const std::size_t start =
        static_cast<std::size_t>(rng() % (n - kSampleSize + 1));
    total += static_cast<double>(DistinctIn(lemmas, start, start + kSampleSize));
  }
  return total / kNumSamples;
}

Opt MeanSegmentalTtr(const std::vector<std::string> &lemmas) {
  const std::size_t segments = lemmas.size() / kSampleSize;
  if (segments == 0) return std::nullopt;
  double total = 0.0;
  for (std::size_t s = 0; s < segments; ++s)
    total += static_cast<double>(
                 DistinctIn(lemmas, s * kSampleSize, (s + 1) * kSampleSize)) /
             kSampleSize;
  return total / static_cast<double>(segments);
}

}  // namespace

const std::array<std::string, kNumLexMetrics> &LexMetricNames() {
  static const std::array<std::string, kNumLexMetrics> names = {
      "LD",   "LS1",      "LS2",      "VS1",      "VS2",  "CVS1",  "NDW",
      "NDW-50", "NDW-ER50", "NDW-ES50", "TTR",    "MSTTR-50", "CTTR", "RTTR",
      "LogTTR", "Uber",   "LV",       "VV1",      "SVV1", "CVV1",  "VV2",
      "NV",   "AdjV",     "AdvV",     "ModV"};
  return names;
}

std::optional<double> LexMetricVector::Get(std::string_view name) const {
  const auto &names = LexMetricNames();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return values[i];
  throw UsageError("unknown lexical metric '" + std::string(name) + "'");
}

LexMetricVector ComputeLexMetrics(const LexicalProfile &p, uint64_t seed) {
  if (p.n == 0) throw DataError("lexical metrics: empty text");
  const double n = static_cast<double>(p.n), t = static_cast<double>(p.t);
  const double n_lex = static_cast<double>(p.n_lex);
  const double n_verb = static_cast<double>(p.n_verb);
  const double t_verb = static_cast<double>(p.t_verb);
  const double t_sverb = static_cast<double>(p.t_sverb);

  LexMetricVector m;
  auto &v = m.values;
  v[0] = n_lex / n;
  v[1] = Ratio(static_cast<double>(p.n_soph_lex), n_lex);
  v[2] = static_cast<double>(p.t_soph) / t;
  v[3] = Ratio(t_sverb, n_verb);
  v[4] = Ratio(t_sverb * t_sverb, n_verb);
  v[5] = Ratio(t_sverb, std::sqrt(2.0 * n_verb));
  v[6] = t;
  if (p.lemmas.size() >= kSampleSize)
    v[7] = static_cast<double>(DistinctIn(p.lemmas, 0, kSampleSize));
  v[8] = RandomSampleTypes(p.lemmas, seed);
  v[9] = SequentialSampleTypes(p.lemmas, seed);
  v[10] = t / n;
  v[11] = MeanSegmentalTtr(p.lemmas);
  v[12] = t / std::sqrt(2.0 * n);
  v[13] = t / std::sqrt(n);
  v[14] = Ratio(std::log(t), std::log(n));
  if (p.t < p.n) v[15] = std::log(n) * std::log(n) / std::log(n / t);
  v[16] = Ratio(static_cast<double>(p.t_lex), n_lex);
  v[17] = Ratio(t_verb, n_verb);
  v[18] = Ratio(t_verb * t_verb, n_verb);
  v[19] = Ratio(t_verb, std::sqrt(2.0 * n_verb));
  v[20] = Ratio(t_verb, n_lex);
  v[21] = Ratio(static_cast<double>(p.t_noun), n_lex);
  v[22] = Ratio(static_cast<double>(p.t_adj), n_lex);
  v[23] = Ratio(static_cast<double>(p.t_adv), n_lex);
  v[24] = Ratio(static_cast<double>(p.t_adj + p.t_adv), n_lex);
  return m;
}

}  // namespace rrassess::lexrich
