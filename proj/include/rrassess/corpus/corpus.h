// corpus/corpus.h

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

#ifndef RRASSESS_CORPUS_CORPUS_H_
#define RRASSESS_CORPUS_CORPUS_H_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rrassess/corpus/transcript.h"
#include "rrassess/corpus/types.h"
#include "rrassess/synco/tree.h"

namespace rrassess::corpus {

/// One recording event with its parsed sidecars. Asset paths are resolved
/// against the manifest directory.
struct SessionRecord {
  SessionKey key;
  std::string audio_ref;
  std::string transcript_ref;
  std::string trees_ref;
  std::string disfluency_ref;
  std::string ratings_ref;
  std::string tags_ref;  // optional gold POS tags, empty if absent

  Transcript transcript;
  DisfluencyLog disfluencies;
  std::vector<RaterScoreSet> ratings;
  std::vector<synco::ParseTree> trees;
  std::string gold_tags;  // file content, empty if absent

  Label LabelFor(Criterion c) const;
};

/// Immutable after load.
struct Corpus {
  std::string manifest_path;
  std::vector<SessionRecord> sessions;

  const SessionRecord *Find(const SessionKey &key) const;
  /// Manifest path followed by every referenced asset path, in manifest order.
  std::vector<std::string> AssetPaths() const;
};

/// Loads a JSON manifest:
///   {"sessions": [{"participant", "day", "article", "audio", "transcript",
///                  "trees", "disfluencies", "ratings", optional "tags"}]}
/// Every referenced file is opened and parsed (WAV header and samples,
/// transcript, trees, JSON sidecars). Throws DataError naming the offending
/// path or key for missing files, duplicate (participant, day, article),
/// out-of-range day/article, malformed ratings, or unknown disfluency
/// categories.
Corpus LoadCorpus(const std::string &manifest_path);

/// Label counts for one (day, article) cell, indexed by LabelIndex.
struct CellCounts {
  int day;
  int article;
  std::array<int, 3> counts{};
  int Total() const { return counts[0] + counts[1] + counts[2]; }
};

/// The six (day, article) cells in day-major order with counts of the
/// derived label for criterion (overall by default).
std::array<CellCounts, 6> CorpusSummary(
    const Corpus &corpus, Criterion criterion = Criterion::kOverall);

/// Pairwise exact-agreement rate: over every session and every unordered
/// rater pair, the fraction of pairs giving the same score. Throws DataError
/// if the corpus is empty or any session has fewer than two raters.
double InterRaterAgreement(const Corpus &corpus, Criterion criterion);

/// Same statistic over explicit per-session rater lists.
double InterRaterAgreement(
    const std::vector<std::vector<RaterScoreSet>> &sessions,
    Criterion criterion);

}  // namespace rrassess::corpus

#endif  // RRASSESS_CORPUS_CORPUS_H_
