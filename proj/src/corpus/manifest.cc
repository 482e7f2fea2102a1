// corpus/manifest.cc

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

#include <filesystem>
#include <set>

#include "json.hpp"
#include "rrassess/common/error.h"
#include "rrassess/corpus/corpus.h"
#include "rrassess/corpus/ratings.h"
#include "rrassess/dsp/wav.h"

namespace rrassess::corpus {

namespace fs = std::filesystem;

Label SessionRecord::LabelFor(Criterion c) const {
  return DeriveLabel(ratings, c);
}

const SessionRecord *Corpus::Find(const SessionKey &key) const {
  for (const auto &s : sessions)
    if (s.key == key) return &s;
  return nullptr;
}

std::vector<std::string> Corpus::AssetPaths() const {
  std::vector<std::string> paths = {manifest_path};
  for (const auto &s : sessions) {
    for (const auto *p : {&s.audio_ref, &s.transcript_ref, &s.trees_ref,
                          &s.disfluency_ref, &s.ratings_ref, &s.tags_ref})
      if (!p->empty()) paths.push_back(*p);
  }
  return paths;
}

namespace {

std::string RequireString(const nlohmann::json &entry, const char *field,
                          const std::string &where) {
  if (!entry.contains(field) || !entry[field].is_string())
    throw DataError(where + ": missing string field \"" + field + "\"");
  return entry[field].get<std::string>();
}

int RequireInt(const nlohmann::json &entry, const char *field,
               const std::string &where) {
  if (!entry.contains(field) || !entry[field].is_number_integer())
    throw DataError(where + ": missing integer field \"" + field + "\"");
  return entry[field].get<int>();
}

}  // namespace

Corpus LoadCorpus(const std::string &manifest_path) {
  const std::string text = ReadFileBytes(manifest_path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception &e) {
    throw DataError(manifest_path + ": malformed manifest JSON: " + e.what());
  }
  if (!j.is_object() || !j.contains("sessions") || !j["sessions"].is_array())
    throw DataError(manifest_path + ": manifest needs a \"sessions\" array");

  const fs::path base = fs::path(manifest_path).parent_path();
  auto resolve = [&](const std::string &rel) {
    fs::path p(rel);
    return (p.is_absolute() ? p : base / p).lexically_normal().string();
  };

  Corpus corpus;
  corpus.manifest_path = manifest_path;
  std::set<SessionKey> seen;
  std::size_t index = 0;
  for (const auto &entry : j["sessions"]) {
    const std::string where =
        manifest_path + ": session #" + std::to_string(index++);
    if (!entry.is_object()) throw DataError(where + ": not an object");
    SessionRecord s;
    s.key.participant = RequireString(entry, "participant", where);
    s.key.day = RequireInt(entry, "day", where);
    s.key.article = RequireInt(entry, "article", where);
    if (s.key.day < 1 || s.key.day > kNumDays)
      throw DataError(where + ": day must be 1..3");
    if (s.key.article < 1 || s.key.article > kNumArticles)
      throw DataError(where + ": article must be 1 or 2");
    if (!seen.insert(s.key).second)
      throw DataError(where + ": duplicate session " + s.key.ToString());

    s.audio_ref = resolve(RequireString(entry, "audio", where));
    s.transcript_ref = resolve(RequireString(entry, "transcript", where));
    s.trees_ref = resolve(RequireString(entry, "trees", where));
    s.disfluency_ref = resolve(RequireString(entry, "disfluencies", where));
    s.ratings_ref = resolve(RequireString(entry, "ratings", where));
    if (entry.contains("tags"))
      s.tags_ref = resolve(RequireString(entry, "tags", where));

    dsp::LoadWav(s.audio_ref);
    s.transcript = ParseTranscript(ReadFileBytes(s.transcript_ref));
    try {
      s.trees = synco::ParseBracketed(ReadFileBytes(s.trees_ref));
    } catch (const DataError &e) {
      throw DataError(s.trees_ref + ": " + e.what());
    }
    s.disfluencies = ParseDisfluencyJson(ReadFileBytes(s.disfluency_ref),
                                         s.disfluency_ref);
    s.ratings = ParseRatingsJson(ReadFileBytes(s.ratings_ref), s.ratings_ref);
    if (s.ratings.empty())
      throw DataError(s.ratings_ref + ": no raters");
    if (!s.tags_ref.empty()) s.gold_tags = ReadFileBytes(s.tags_ref);
    corpus.sessions.push_back(std::move(s));
  }
  return corpus;
}

std::array<CellCounts, 6> CorpusSummary(const Corpus &corpus,
                                        Criterion criterion) {
  std::array<CellCounts, 6> cells{};
  for (int d = 1; d <= kNumDays; ++d)
    for (int a = 1; a <= kNumArticles; ++a)
      cells[(d - 1) * kNumArticles + (a - 1)] = CellCounts{d, a, {0, 0, 0}};
  for (const auto &s : corpus.sessions) {
    auto &cell = cells[(s.key.day - 1) * kNumArticles + (s.key.article - 1)];
    ++cell.counts[LabelIndex(s.LabelFor(criterion))];
  }
  return cells;
}

}  // namespace rrassess::corpus
