// cli/commands.cc

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

#include "rrassess/cli/commands.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <filesystem>
#include <limits>
#include <map>
#include <mutex>
#include <thread>

#include "CLI11.hpp"
#include "rrassess/common/csv.h"
#include "rrassess/common/error.h"
#include "rrassess/dsp/wav.h"
#include "rrassess/learn/fusion.h"
#include "rrassess/learn/grid.h"
#include "rrassess/learn/report.h"
#include "rrassess/lexrich/metrics.h"
#include "rrassess/lexrich/tagger.h"
#include "rrassess/synco/metrics.h"

namespace rrassess::cli {

namespace {

namespace fs = std::filesystem;
using corpus::Criterion;
using corpus::SessionKey;
using functionals::ExtractionMode;

constexpr const char *kFusionPreset = "egemaps-analog";
const std::vector<std::string> kKeyColumns = {"participant", "day", "article"};

std::string Stamp(const std::string &hash, uint64_t seed) {
  return "rrassess config=" + hash + " seed=" + std::to_string(seed);
}

std::string OutPath(const RunConfig &config, const std::string &name) {
  if (config.out.empty()) throw UsageError("--out is required");
  return (fs::path(config.out) / name).string();
}

std::string ProsodyFile(const std::string &preset, ExtractionMode mode) {
  return "prosody_" + preset + "_" + ModeName(mode) + ".csv";
}

std::vector<std::string> KeyFields(const SessionKey &k) {
  return {k.participant, std::to_string(k.day), std::to_string(k.article)};
}

corpus::Corpus Load(const RunConfig &config) {
  if (config.manifest.empty()) throw UsageError("--manifest is required");
  return corpus::LoadCorpus(config.manifest);
}

// Runs fn(i) for i in [0, n) on a small worker pool; the first exception is
// rethrown after all workers finish.
template <typename Fn>
void ParallelFor(std::size_t n, Fn fn) {
  const std::size_t workers = std::max<std::size_t>(
      1, std::min<std::size_t>(n, std::thread::hardware_concurrency()));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex mu;
  auto body = [&] {
    for (std::size_t i; (i = next++) < n;) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(body);
  body();
  for (auto &t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

[[noreturn]] void RethrowWithKey(const SessionKey &key) {
  try {
    throw;
  } catch (const DataError &e) {
    throw DataError(key.ToString() + ": " + e.what());
  }
}

struct SessionFeatures {
  std::map<std::string, std::vector<functionals::FeatureVector>> prosody;
  lexrich::LexMetricVector lex;
  synco::ProductionCounts counts;
  synco::SynMetricVector syn;
};

// ---- reading extracted CSVs ------------------------------------------------

struct FeatureTable {
  std::vector<std::string> columns;
  std::vector<SessionKey> keys;
  std::vector<std::vector<double>> rows;
};

FeatureTable ReadFeatureCsv(const std::string &path, std::size_t skip_extra,
                            std::size_t take = std::numeric_limits<std::size_t>::max()) {
  if (!fs::exists(path))
    throw DataError("missing feature file " + path + " (run extract first)");
  const CsvTable csv = CsvTable::Parse(ReadFileBytes(path));
  const std::size_t first = kKeyColumns.size() + skip_extra;
  if (csv.header.size() < first)
    throw DataError(path + ": missing key columns");
  FeatureTable t;
  const std::size_t last = first + std::min(take, csv.header.size() - first);
  t.columns.assign(csv.header.begin() + first, csv.header.begin() + last);
  for (const auto &row : csv.rows) {
    if (row.size() != csv.header.size())
      throw DataError(path + ": ragged row");
    SessionKey k;
    k.participant = row[0];
    try {
      k.day = std::stoi(row[1]);
      k.article = std::stoi(row[2]);
    } catch (const std::exception &) {
      throw DataError(path + ": bad day/article field");
    }
    std::vector<double> v;
    for (std::size_t i = first; i < last; ++i) {
      auto x = ParseReal(row[i]);
      v.push_back(x ? *x : std::numeric_limits<double>::quiet_NaN());
    }
    t.keys.push_back(k);
    t.rows.push_back(std::move(v));
  }
  return t;
}

learn::LabeledMatrix ToMatrix(const FeatureTable &t, const corpus::Corpus &c,
                              Criterion criterion) {
  learn::LabeledMatrix m;
  m.columns = t.columns;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto *s = c.Find(t.keys[i]);
    if (!s)
      throw DataError("feature row for unknown session " + t.keys[i].ToString());
    m.AddRow(t.rows[i], s->LabelFor(criterion), t.keys[i]);
  }
  m.Validate();
  return m;
}

learn::EvalReport NewReport(const RunConfig &config, const std::string &hash,
                            std::string table, std::string title,
                            Criterion criterion, std::string features,
                            std::string mode) {
  learn::EvalReport r;
  r.table = std::move(table);
  r.title = std::move(title);
  r.criterion = corpus::CriterionName(criterion);
  r.features = std::move(features);
  r.mode = std::move(mode);
  r.seed = config.seed;
  r.config_hash = hash;
  for (auto k : learn::kModelKinds) r.classifiers.push_back(learn::ModelKindName(k));
  return r;
}

void CaseGrid(const learn::LabeledMatrix &m, const learn::GridOptions &opts,
              learn::EvalReport *r) {
  for (const auto &c : learn::CaseNames())
    r->rows.push_back(learn::EvaluateCase(m, c, "", opts, &r->notes));
}

}  // namespace

int RunValidate(const RunConfig &config, std::ostream &out) {
  const corpus::Corpus c = Load(config);
  std::size_t violations = 0;
  for (const auto &s : c.sessions) {
    for (const auto &v : corpus::ValidateTranscript(s.transcript, s.disfluencies)) {
      out << s.transcript_ref << ": sentence " << v.sentence + 1 << ": "
          << v.message << "\n";
      ++violations;
    }
  }
  out << c.sessions.size() << " sessions, " << violations << " violations\n";
  return violations ? kExitData : kExitOk;
}

void RunExtract(const RunConfig &config, std::ostream &log) {
  const std::vector<std::string> presets = config.ComputablePresets();
  if (config.wordlist.empty()) throw UsageError("--wordlist is required");
  if (!fs::exists(config.wordlist))
    throw UsageError("word list not found: " + config.wordlist);
  if (!(config.silence_floor_db < 0))
    throw UsageError("--silence-floor-db must be negative");
  const corpus::Corpus c = Load(config);
  const lexrich::WordList wordlist = lexrich::WordList::Load(config.wordlist);
  const std::string hash = ConfigHash(config, c);

  std::vector<std::pair<std::string, ExtractionMode>> jobs;
  for (const auto &p : presets) jobs.emplace_back(p, config.mode);
  if (config.mode != ExtractionMode::kUtterance ||
      std::find(presets.begin(), presets.end(), kFusionPreset) == presets.end())
    jobs.emplace_back(kFusionPreset, ExtractionMode::kUtterance);

  std::vector<SessionFeatures> features(c.sessions.size());
  ParallelFor(c.sessions.size(), [&](std::size_t i) {
    const auto &s = c.sessions[i];
    try {
      const dsp::AudioSignal audio = dsp::LoadWav(s.audio_ref);
      for (const auto &[name, mode] : jobs)
        features[i].prosody[name + "/" + ModeName(mode)] =
            functionals::AssemblePreset(audio, functionals::BuiltinPreset(name),
                                        mode, config.silence_floor_db);
      std::optional<std::string> gold;
      if (!s.tags_ref.empty()) gold = s.gold_tags;
      const auto tokens = lexrich::TagTokens(s.transcript, gold);
      features[i].lex = lexrich::ComputeLexMetrics(
          lexrich::BuildProfile(tokens, wordlist), config.seed);
      features[i].counts = synco::CountUnits(s.trees);
      features[i].syn = synco::ComputeSynMetrics(features[i].counts);
    } catch (...) {
      RethrowWithKey(s.key);
    }
  });

  fs::create_directories(config.out.empty() ? "." : config.out);
  const std::string stamp = Stamp(hash, config.seed);
  for (const auto &[name, mode] : jobs) {
    const auto preset = functionals::BuiltinPreset(name);
    CsvTable t;
    t.comments = {stamp + " preset=" + name + " mode=" + ModeName(mode)};
    t.header = kKeyColumns;
    t.header.push_back("instance");
    for (const auto &f : preset.FeatureNames()) t.header.push_back(f);
    for (std::size_t i = 0; i < c.sessions.size(); ++i)
      for (const auto &fv : features[i].prosody[name + "/" + ModeName(mode)]) {
        auto row = KeyFields(c.sessions[i].key);
        row.push_back(fv.provenance);
        for (double v : fv.values) row.push_back(FormatReal(v));
        t.rows.push_back(std::move(row));
      }
    WriteFileBytes(OutPath(config, ProsodyFile(name, mode)), t.Serialize());
    log << "wrote " << ProsodyFile(name, mode) << " (" << t.rows.size()
        << " rows, " << preset.declared_dim << " features)\n";
  }

  CsvTable lex;
  lex.comments = {stamp};
  lex.header = kKeyColumns;
  for (const auto &n : lexrich::LexMetricNames()) lex.header.push_back(n);
  CsvTable syn;
  syn.comments = {stamp};
  syn.header = kKeyColumns;
  for (const auto &n : synco::SynMetricNames()) syn.header.push_back(n);
  for (const char *n : {"W", "S", "C", "T", "CT", "DC", "CP", "CN", "VP"})
    syn.header.push_back(n);
  for (std::size_t i = 0; i < c.sessions.size(); ++i) {
    auto row = KeyFields(c.sessions[i].key);
    for (const auto &v : features[i].lex.values) row.push_back(FormatReal(v));
    lex.rows.push_back(row);
    row = KeyFields(c.sessions[i].key);
    for (const auto &v : features[i].syn.values) row.push_back(FormatReal(v));
    const auto &pc = features[i].counts;
    for (std::size_t v : {pc.w, pc.s, pc.c, pc.t, pc.ct, pc.dc, pc.cp, pc.cn, pc.vp})
      row.push_back(std::to_string(v));
    syn.rows.push_back(row);
  }
  WriteFileBytes(OutPath(config, "lexical.csv"), lex.Serialize());
  WriteFileBytes(OutPath(config, "syntactic.csv"), syn.Serialize());
  log << "wrote lexical.csv and syntactic.csv (" << c.sessions.size()
      << " sessions)\n";
}

void RunEvaluate(const RunConfig &config, std::ostream &log) {
  const std::vector<std::string> presets = config.ComputablePresets();
  const corpus::Corpus c = Load(config);
  const std::string hash = ConfigHash(config, c);
  learn::GridOptions opts;
  opts.seed = config.seed;
  const std::string mode = ModeName(config.mode);

  // Table 1: published feature sets x day on oral fluency.
  auto t1 = NewReport(config, hash, "table1",
                      "Table 1: prosodic feature sets by day (oral fluency)",
                      Criterion::kOralFluency, "prosody", mode);
  for (const auto &entry : functionals::PresetRegistry()) {
    const std::string group = entry.name + " (" + std::to_string(entry.dim) + ")";
    const bool selected =
        entry.computable &&
        std::find(presets.begin(), presets.end(), entry.analog) != presets.end();
    std::optional<learn::LabeledMatrix> m;
    if (selected)
      m = ToMatrix(ReadFeatureCsv(OutPath(config, ProsodyFile(entry.analog, config.mode)), 1),
                   c, Criterion::kOralFluency);
    for (int d = 1; d <= corpus::kNumDays; ++d) {
      const std::string cs = "day-" + std::to_string(d);
      if (!entry.computable)
        t1.rows.push_back(learn::NullRow(group, cs, "no computable analog"));
      else if (!selected)
        t1.rows.push_back(learn::NullRow(group, cs, "preset not selected"));
      else
        t1.rows.push_back(learn::EvaluateCase(*m, cs, group, opts, &t1.notes));
    }
  }

  const FeatureTable lex = ReadFeatureCsv(OutPath(config, "lexical.csv"), 0);
  const FeatureTable syn = ReadFeatureCsv(OutPath(config, "syntactic.csv"), 0,
                                          synco::kNumSynMetrics);
  auto t2 = NewReport(config, hash, "table2",
                      "Table 2: lexical richness features by case",
                      Criterion::kLexicalRichness, "lexical", "utterance");
  CaseGrid(ToMatrix(lex, c, Criterion::kLexicalRichness), opts, &t2);
  auto t3 = NewReport(config, hash, "table3",
                      "Table 3: syntactic complexity features by case",
                      Criterion::kSyntacticMaturity, "syntactic", "utterance");
  CaseGrid(ToMatrix(syn, c, Criterion::kSyntacticMaturity), opts, &t3);

  const FeatureTable pro = ReadFeatureCsv(
      OutPath(config, ProsodyFile(kFusionPreset, ExtractionMode::kUtterance)), 1);
  if (lex.keys != syn.keys || lex.keys != pro.keys)
    throw DataError("feature files do not list the same sessions");
  FeatureTable fused;
  fused.columns = learn::FusedColumnNames(pro.columns);
  fused.keys = lex.keys;
  for (std::size_t i = 0; i < lex.rows.size(); ++i) {
    lexrich::LexMetricVector lv;
    synco::SynMetricVector sv;
    for (std::size_t j = 0; j < lv.values.size(); ++j)
      if (!std::isnan(lex.rows[i][j])) lv.values[j] = lex.rows[i][j];
    for (std::size_t j = 0; j < sv.values.size(); ++j)
      if (!std::isnan(syn.rows[i][j])) sv.values[j] = syn.rows[i][j];
    functionals::FeatureVector pv{kFusionPreset, pro.rows[i], "whole-utterance"};
    fused.rows.push_back(learn::Fuse(lv, sv, pv));
  }
  auto t4 = NewReport(config, hash, "table4",
                      "Table 4: fused lexical, syntactic and prosodic features by case",
                      Criterion::kOverall, "fused", "utterance");
  CaseGrid(ToMatrix(fused, c, Criterion::kOverall), opts, &t4);

  std::string rendered;
  for (const auto *r : {&t1, &t2, &t3, &t4}) {
    WriteFileBytes(OutPath(config, r->table + ".json"), learn::ReportToJson(*r));
    WriteFileBytes(OutPath(config, "confusion_" + r->table + ".csv"),
                   learn::ConfusionCsv(*r));
    rendered += learn::RenderReport(*r) + "\n";
  }
  WriteFileBytes(OutPath(config, "tables.txt"), rendered);

  CsvTable counts;
  counts.comments = {Stamp(hash, config.seed) + " criterion=overall"};
  counts.header = {"day", "article", "basic", "average", "advance", "total"};
  for (const auto &cell : corpus::CorpusSummary(c, Criterion::kOverall))
    counts.rows.push_back({std::to_string(cell.day), std::to_string(cell.article),
                           std::to_string(cell.counts[0]),
                           std::to_string(cell.counts[1]),
                           std::to_string(cell.counts[2]),
                           std::to_string(cell.Total())});
  WriteFileBytes(OutPath(config, "fig1_counts.csv"), counts.Serialize());
  log << "wrote table1..table4.json, tables.txt, confusion CSVs, fig1_counts.csv\n";
}

void RunReport(const RunConfig &config, std::ostream &out) {
  for (int t = 1; t <= 4; ++t) {
    const std::string path = OutPath(config, "table" + std::to_string(t) + ".json");
    if (!fs::exists(path))
      throw DataError("missing report " + path + " (run evaluate first)");
    out << learn::RenderReport(learn::ReportFromJson(ReadFileBytes(path))) << "\n";
  }
}

void RunAgreement(const RunConfig &config, std::ostream &out) {
  const corpus::Corpus c = Load(config);
  for (Criterion k : corpus::kCriteria)
    out << corpus::CriterionName(k) << "\t"
        << FormatReal(corpus::InterRaterAgreement(c, k)) << "\n";
}

int RunCli(int argc, const char *const *argv, std::ostream &out,
           std::ostream &err) {
  CLI::App app{"Repeated-reading assessment toolkit"};
  app.require_subcommand(1);
  RunConfig config;
  std::string mode = "fragment";
  std::string seed_text;

  auto add_common = [&](CLI::App *sub, bool features) {
    sub->add_option("--manifest", config.manifest, "corpus manifest JSON");
    if (!features) return;
    sub->add_option("--preset", config.presets,
                    "feature set (repeatable; published or analog name)");
    sub->add_option("--wordlist", config.wordlist, "frequency-ranked lemma list");
    sub->add_option("--silence-floor-db", config.silence_floor_db,
                    "fragment silence floor relative to the loudest fragment");
    sub->add_option("--seed", seed_text, "global RNG seed");
    sub->add_option("--mode", mode, "fragment or utterance");
    sub->add_option("--out", config.out, "output directory");
  };
  auto *validate = app.add_subcommand("validate", "check corpus conventions");
  add_common(validate, false);
  auto *extract = app.add_subcommand("extract", "write feature CSVs");
  add_common(extract, true);
  auto *evaluate = app.add_subcommand("evaluate", "write accuracy tables");
  add_common(evaluate, true);
  auto *report = app.add_subcommand("report", "print rendered tables");
  report->add_option("--out", config.out, "output directory")->required();
  auto *agreement = app.add_subcommand("agreement", "inter-rater agreement");
  add_common(agreement, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (!seed_text.empty()) {
      std::size_t used = 0;
      try {
        config.seed = std::stoull(seed_text, &used, 0);
      } catch (const std::exception &) {
        used = 0;
      }
      if (used != seed_text.size() || seed_text[0] == '-')
        throw UsageError("--seed must be a non-negative integer");
    }
    config.mode = ModeFromName(mode);
    if (*validate) return RunValidate(config, out);
    if (*extract) RunExtract(config, out);
    if (*evaluate) RunEvaluate(config, out);
    if (*report) RunReport(config, out);
    if (*agreement) RunAgreement(config, out);
    return kExitOk;
  } catch (const UsageError &e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DataError &e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::filesystem::filesystem_error &e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
}

}  // namespace rrassess::cli
