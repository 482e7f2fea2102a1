// corpus/ratings.cc

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

#include "rrassess/corpus/ratings.h"

#include <array>

#include "json.hpp"
#include "rrassess/common/error.h"

namespace rrassess::corpus {

namespace {

constexpr std::array<const char *, 4> kCriterionNames = {
    "oral_fluency", "lexical_richness", "syntactic_maturity", "overall"};

constexpr std::array<const char *, 9> kDisfluencyNames = {
    "mispronunciation", "hesitation", "repetition", "repair", "deletion",
    "substitution", "insertion", "incomplete", "incomprehensible"};

Label ScoreFromJson(const nlohmann::json &v, const std::string &where) {
  if (v.is_number_integer()) {
    int s = v.get<int>();
    if (s < 1 || s > 3)
      throw DataError(where + ": score " + std::to_string(s) +
                      " is outside the 1..3 scale");
    return static_cast<Label>(s);
  }
  if (v.is_string()) return LabelFromName(v.get<std::string>());
  throw DataError(where + ": score must be 1..3 or a label name");
}

}  // namespace

std::string LabelName(Label l) {
  switch (l) {
    case Label::kBasic:
      return "basic";
    case Label::kAverage:
      return "average";
    case Label::kAdvance:
      return "advance";
  }
  return "?";
}

Label LabelFromName(const std::string &name) {
  if (name == "basic") return Label::kBasic;
  if (name == "average") return Label::kAverage;
  if (name == "advance") return Label::kAdvance;
  throw DataError("unknown label: " + name);
}

std::string CriterionName(Criterion c) {
  return kCriterionNames[static_cast<int>(c)];
}

Criterion CriterionFromName(const std::string &name) {
  for (std::size_t i = 0; i < kCriterionNames.size(); ++i)
    if (name == kCriterionNames[i]) return static_cast<Criterion>(i);
  throw UsageError("unknown criterion: " + name);
}

std::string SessionKey::ToString() const {
  return participant + "/day" + std::to_string(day) + "/article" +
         std::to_string(article);
}

std::string DisfluencyCategoryName(DisfluencyCategory c) {
  return kDisfluencyNames[static_cast<int>(c)];
}

DisfluencyCategory DisfluencyCategoryFromName(const std::string &name) {
  for (std::size_t i = 0; i < kDisfluencyNames.size(); ++i)
    if (name == kDisfluencyNames[i]) return static_cast<DisfluencyCategory>(i);
  throw DataError("unknown disfluency category: " + name);
}

Label DeriveLabel(const std::vector<RaterScoreSet> &raters, Criterion c) {
  if (raters.empty()) throw DataError("cannot derive a label without raters");
  long sum = 0;
  for (const auto &r : raters) sum += static_cast<int>(r.Score(c));
  const long n = static_cast<long>(raters.size());
  // floor(sum / n + 1/2) in integer arithmetic.
  long rounded = (2 * sum + n) / (2 * n);
  return static_cast<Label>(rounded);
}

std::vector<RaterScoreSet> ParseRatingsJson(const std::string &text,
                                            const std::string &source) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception &e) {
    throw DataError(source + ": malformed ratings JSON: " + e.what());
  }
  if (!j.is_object() || !j.contains("raters") || !j["raters"].is_array())
    throw DataError(source + ": ratings must contain a \"raters\" array");
  std::vector<RaterScoreSet> out;
  for (const auto &r : j["raters"]) {
    if (!r.is_object() || !r.contains("rater") || !r["rater"].is_string() ||
        !r.contains("scores") || !r["scores"].is_object())
      throw DataError(source + ": each rater needs \"rater\" and \"scores\"");
    RaterScoreSet set;
    set.rater_id = r["rater"].get<std::string>();
    for (Criterion c : kCriteria) {
      const std::string name = CriterionName(c);
      if (!r["scores"].contains(name))
        throw DataError(source + ": rater " + set.rater_id +
                        " is missing criterion " + name);
      set.scores[static_cast<int>(c)] =
          ScoreFromJson(r["scores"][name], source + ": rater " + set.rater_id);
    }
    for (const auto &item : r["scores"].items()) {
      try {
        CriterionFromName(item.key());
      } catch (const UsageError &) {
        throw DataError(source + ": rater " + set.rater_id +
                        " has unknown criterion " + item.key());
      }
    }
    out.push_back(std::move(set));
  }
  return out;
}

std::string RatingsToJson(const std::vector<RaterScoreSet> &raters) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto &r : raters) {
    nlohmann::json scores = nlohmann::json::object();
    for (Criterion c : kCriteria)
      scores[CriterionName(c)] = static_cast<int>(r.Score(c));
    arr.push_back({{"rater", r.rater_id}, {"scores", scores}});
  }
  return nlohmann::json{{"raters", arr}}.dump(2) + "\n";
}

DisfluencyLog ParseDisfluencyJson(const std::string &text,
                                  const std::string &source) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception &e) {
    throw DataError(source + ": malformed disfluency JSON: " + e.what());
  }
  if (!j.is_object() || !j.contains("events") || !j["events"].is_array())
    throw DataError(source + ": disfluency log must contain an \"events\" array");
  DisfluencyLog log;
  for (const auto &e : j["events"]) {
    try {
      DisfluencyEvent ev;
      ev.category = DisfluencyCategoryFromName(e.at("category").get<std::string>());
      ev.sentence = e.at("sentence").get<std::size_t>();
      ev.token = e.at("token").get<std::size_t>();
      ev.surface = e.at("surface").get<std::string>();
      log.events.push_back(std::move(ev));
    } catch (const nlohmann::json::exception &ex) {
      throw DataError(source + ": bad disfluency event: " + ex.what());
    } catch (const DataError &ex) {
      throw DataError(source + ": " + ex.what());
    }
  }
  return log;
}

std::string DisfluencyToJson(const DisfluencyLog &log) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto &e : log.events)
    arr.push_back({{"category", DisfluencyCategoryName(e.category)},
                   {"sentence", e.sentence},
                   {"token", e.token},
                   {"surface", e.surface}});
  return nlohmann::json{{"events", arr}}.dump(2) + "\n";
}

}  // namespace rrassess::corpus
