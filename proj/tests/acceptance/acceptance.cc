// tests/acceptance/acceptance.cc

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
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rrassess/cli/commands.h"
#include "rrassess/common/csv.h"
#include "rrassess/common/error.h"
#include "rrassess/corpus/corpus.h"
#include "rrassess/corpus/ratings.h"
#include "rrassess/dsp/fragment.h"
#include "rrassess/dsp/lld.h"
#include "rrassess/functionals/presets.h"
#include "rrassess/learn/fusion.h"
#include "rrassess/learn/grid.h"
#include "rrassess/learn/model.h"
#include "rrassess/learn/report.h"
#include "rrassess/learn/split.h"
#include "rrassess/lexrich/metrics.h"
#include "rrassess/lexrich/profile.h"
#include "rrassess/synco/metrics.h"
#include "rrassess/synco/units.h"
#include "support/oracles.h"
#include "support/scratch.h"

using namespace rrassess;
namespace fs = std::filesystem;

namespace {

// Collects failure reasons for one criterion.
class Check {
 public:
  void Expect(bool ok, const std::string &what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++count_;
  }
  bool ok() const { return count_ == 0; }
  std::string Summary() const {
    std::string s;
    for (const auto &f : failures_) s += "; " + f;
    if (count_ > failures_.size())
      s += "; +" + std::to_string(count_ - failures_.size()) + " more";
    return s;
  }

 private:
  std::vector<std::string> failures_;
  std::size_t count_ = 0;
};

struct Criterion {
  int id;
  std::string name;
  double limit_s;
  std::function<void(Check &)> body;
};

std::string Num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

void DimensionalFidelity(Check &c) {
  const auto is09 = functionals::Is09Analog();
  const auto egemaps = functionals::EgemapsAnalog();
  c.Expect(is09.ComputedDim() == 384, "is09-analog dim " + std::to_string(is09.ComputedDim()));
  c.Expect(egemaps.ComputedDim() == 88, "egemaps-analog dim " + std::to_string(egemaps.ComputedDim()));
  const auto sig = oracle::Sine(150.0, 16000, 1.0);
  for (const auto &p : {is09, egemaps}) {
    auto v = functionals::AssemblePreset(sig, p, functionals::ExtractionMode::kUtterance, -40.0);
    c.Expect(v.size() == 1 && v[0].values.size() == p.declared_dim,
             p.name + " vector length");
  }
  const std::map<std::string, std::size_t> published = {
      {"Avec2013", 2268},      {"ComParE2016", 6373},       {"eGeMAPS", 88},
      {"IS09 emotion", 384},   {"IS10 paraling", 1582},     {"IS11 speaker state", 4368},
      {"IS12 speaker trait", 5757}, {"IS13 ComParE", 6373}};
  const auto &reg = functionals::PresetRegistry();
  c.Expect(reg.size() == 8, "registry size " + std::to_string(reg.size()));
  for (const auto &[name, dim] : published) {
    auto e = functionals::LookupPreset(name);
    c.Expect(e && e->dim == dim, "registry entry " + name);
  }
}

void DspOracles(Check &c) {
  for (double f : {100.0, 200.0, 300.0, 400.0}) {
    auto m = dsp::ExtractLld(oracle::Sine(f, 16000, 1.0));
    std::vector<double> voiced;
    double jit = 0, shim = 0;
    for (std::size_t t = 0; t < m.num_frames(); ++t)
      if (m.Column("voicing")[t] > 0.5) {
        voiced.push_back(m.Column("f0")[t]);
        jit += m.Column("jitter")[t];
        shim += m.Column("shimmer")[t];
      }
    if (voiced.empty()) {
      c.Expect(false, Num(f) + " Hz: no voiced frames");
      continue;
    }
    const double med = oracle::Median(voiced);
    c.Expect(std::abs(med - f) <= 0.02 * f, Num(f) + " Hz: median F0 " + Num(med));
    jit /= voiced.size();
    shim /= voiced.size();
    c.Expect(jit <= 0.005, Num(f) + " Hz: jitter " + Num(jit));
    c.Expect(shim <= 0.01, Num(f) + " Hz: shimmer " + Num(shim));
  }
  dsp::AudioSignal zero;
  zero.sample_rate = 16000;
  zero.samples.assign(16000 * 3, 0.0);
  auto mask = dsp::SilenceMask(dsp::Fragmentize(zero), -40.0);
  c.Expect(std::count(mask.begin(), mask.end(), false) == 0, "zero audio has non-silent fragments");
  auto vecs = functionals::AssemblePreset(zero, functionals::EgemapsAnalog(),
                                          functionals::ExtractionMode::kFragment, -40.0);
  c.Expect(vecs.empty(), "zero audio produced fragment vectors");
}

lexrich::WordList ToyList() {
  std::string text;
  for (const auto &w : oracle::ToyWordList()) text += w + "\n";
  return lexrich::WordList::FromText(text);
}

void LexicalOracle(Check &c) {
  std::mt19937_64 rng(0x5eed);
  const auto wl = ToyList();
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 20 + rng() % 281;
    auto toks = oracle::RandomTaggedText(rng, n);
    const std::size_t k = 1 + rng() % 24;
    const uint64_t seed = rng();
    auto got = lexrich::ComputeLexMetrics(lexrich::BuildProfile(toks, wl, k), seed);
    auto want = oracle::BruteLexMetrics(toks, oracle::ToyWordList(), k, seed);
    for (std::size_t i = 0; i < lexrich::kNumLexMetrics; ++i) {
      const std::string where = "text " + std::to_string(trial) + " " +
                                lexrich::LexMetricNames()[i];
      c.Expect(got.values[i].has_value() == want[i].has_value(), where + " definedness");
      if (got.values[i] && want[i])
        c.Expect(std::abs(*got.values[i] - *want[i]) <= 1e-9, where + " value");
    }
    auto twice = toks;
    twice.insert(twice.end(), toks.begin(), toks.end());
    auto a = lexrich::ComputeLexMetrics(lexrich::BuildProfile(toks, wl, k), seed);
    auto b = lexrich::ComputeLexMetrics(lexrich::BuildProfile(twice, wl, k), seed);
    c.Expect(*b.Get("TTR") == *a.Get("TTR") / 2.0, "TTR(2x) != TTR/2");
    const double rttr = *a.Get("RTTR") / std::sqrt(2.0);
    c.Expect(std::abs(*b.Get("RTTR") - rttr) <= 4 * std::numeric_limits<double>::epsilon() * rttr,
             "RTTR(2x) != RTTR/sqrt2");
  }
}

void SyntacticFixtures(Check &c) {
  const fs::path dir = scratch::SourceDir() / "tests" / "fixtures";
  auto trees = synco::ParseBracketed(ReadFileBytes((dir / "syntax10.trees").string()));
  auto table = CsvTable::Parse(ReadFileBytes((dir / "syntax10_counts.csv").string()));
  c.Expect(trees.size() == 10 && table.rows.size() == 10, "fixture size");
  for (std::size_t i = 0; i < std::min(trees.size(), table.rows.size()); ++i) {
    const auto &r = table.rows[i];
    auto at = [&](int k) { return static_cast<std::size_t>(std::stoul(r[k])); };
    const synco::ProductionCounts want{at(0), at(1), at(2), at(3), at(4),
                                       at(5), at(6), at(7), at(8)};
    const synco::ProductionCounts got = synco::CountUnits({trees[i]});
    c.Expect(got == want, "tree " + std::to_string(i + 1) + " counts");
    const auto m = synco::ComputeSynMetrics(got);
    const double w = static_cast<double>(got.w);
    auto holds = [&](const char *name, std::size_t denom) {
      return std::abs(*m.Get(name) * static_cast<double>(denom) - w) <= 1e-12 * w;
    };
    c.Expect(holds("MLC", got.c) && holds("MLS", got.s) && holds("MLT", got.t),
             "tree " + std::to_string(i + 1) + " mean-length identity");
  }
  const auto total = synco::CountUnits(trees);
  c.Expect(total == synco::ProductionCounts{44, 10, 13, 11, 2, 2, 2, 5, 15}, "fixture totals");
}

double TestAccuracy(const learn::Dataset &d, learn::ModelKind kind, uint64_t seed) {
  learn::SplitSpec spec;
  spec.seed = seed;
  auto split = learn::Split(d.y, spec);
  learn::Dataset train = d.Subset(split.train), test = d.Subset(split.test);
  learn::Standardizer s;
  s.Fit(train.x);
  s.TransformInPlace(&train.x);
  s.TransformInPlace(&test.x);
  learn::ModelSpec ms;
  ms.kind = kind;
  ms.seed = learn::CellModelSeed(seed, kind);
  auto model = learn::Train(train, ms);
  std::size_t ok = 0;
  for (std::size_t i = 0; i < test.size(); ++i) ok += model->Predict(test.x[i]) == test.y[i];
  return 100.0 * ok / test.size();
}

void ClassifierSanity(Check &c) {
  const learn::Dataset blobs = oracle::GaussianBlobs(100, 5.0, 2, 0x5eed);
  for (auto kind : learn::kModelKinds) {
    const double acc = TestAccuracy(blobs, kind, 0x5eed);
    c.Expect(acc >= 90.0, learn::ModelKindName(kind) + " accuracy " + Num(acc));
  }
  for (auto kind : learn::kModelKinds) {
    double sum = 0;
    for (uint64_t seed = 0; seed < 20; ++seed) {
      learn::Dataset shuffled = blobs;
      std::mt19937_64 rng(seed);
      std::shuffle(shuffled.y.begin(), shuffled.y.end(), rng);
      sum += TestAccuracy(shuffled, kind, seed);
    }
    const double mean = sum / 20;
    c.Expect(std::abs(mean - 100.0 / 3.0) <= 10.0,
             learn::ModelKindName(kind) + " shuffled baseline " + Num(mean));
  }
}

int Shell(const std::string &cmd) { return std::system((cmd + " >/dev/null 2>&1").c_str()); }

std::map<std::string, std::string> Snapshot(const fs::path &dir) {
  std::map<std::string, std::string> files;
  for (const auto &e : fs::recursive_directory_iterator(dir))
    if (e.is_regular_file())
      files[fs::relative(e.path(), dir).string()] = ReadFileBytes(e.path().string());
  return files;
}

fs::path g_run_dir;

void EndToEnd(Check &c) {
  const std::string cli = RRASSESS_CLI_PATH;
  const fs::path corpus = scratch::MiniCorpus();
  const fs::path base = scratch::Dir("acceptance");
  std::vector<std::map<std::string, std::string>> runs;
  for (const char *name : {"run1", "run2"}) {
    const fs::path out = base / name;
    const std::string common = " --manifest '" + (corpus / "manifest.json").string() +
                               "' --wordlist '" + (corpus / "wordlist.txt").string() +
                               "' --seed 24301 --out '" + out.string() + "'";
    c.Expect(Shell("'" + cli + "' extract" + common) == 0, std::string(name) + " extract failed");
    c.Expect(Shell("'" + cli + "' evaluate" + common) == 0, std::string(name) + " evaluate failed");
    runs.push_back(Snapshot(out));
  }
  c.Expect(!runs[0].empty(), "no artifacts written");
  c.Expect(runs[0].size() == runs[1].size(), "artifact sets differ");
  for (const auto &[name, bytes] : runs[0]) {
    auto it = runs[1].find(name);
    c.Expect(it != runs[1].end() && it->second == bytes, name + " differs between runs");
  }
  g_run_dir = base / "run1";
}

void ReportShape(Check &c) {
  if (g_run_dir.empty() || !fs::exists(g_run_dir / "table1.json")) {
    c.Expect(false, "end-to-end artifacts missing");
    return;
  }
  std::vector<std::string> classifiers;
  for (auto k : learn::kModelKinds) classifiers.push_back(learn::ModelKindName(k));
  const auto cases = learn::CaseNames();
  for (int t = 1; t <= 4; ++t) {
    const std::string name = "table" + std::to_string(t);
    learn::EvalReport r =
        learn::ReportFromJson(ReadFileBytes((g_run_dir / (name + ".json")).string()));
    c.Expect(r.table == name, name + " id");
    c.Expect(r.classifiers == classifiers, name + " classifier columns");
    for (const auto &row : r.rows)
      c.Expect(row.cells.size() == 5, name + " row width");
    if (t == 1) {
      const auto &reg = functionals::PresetRegistry();
      c.Expect(r.rows.size() == reg.size() * 3, "table1 rows " + std::to_string(r.rows.size()));
      for (std::size_t i = 0; i < r.rows.size() && i < reg.size() * 3; ++i) {
        const auto &e = reg[i / 3];
        c.Expect(r.rows[i].group == e.name + " (" + std::to_string(e.dim) + ")",
                 "table1 group " + r.rows[i].group);
        c.Expect(r.rows[i].case_name == "day-" + std::to_string(i % 3 + 1),
                 "table1 case " + r.rows[i].case_name);
      }
    } else {
      c.Expect(r.rows.size() == cases.size(), name + " rows");
      for (std::size_t i = 0; i < r.rows.size() && i < cases.size(); ++i)
        c.Expect(r.rows[i].case_name == cases[i] && r.rows[i].group.empty(),
                 name + " case " + r.rows[i].case_name);
    }
  }
  const auto corpus = corpus::LoadCorpus((scratch::MiniCorpus() / "manifest.json").string());
  auto counts = CsvTable::Parse(ReadFileBytes((g_run_dir / "fig1_counts.csv").string()));
  c.Expect(counts.header == std::vector<std::string>{"day", "article", "basic", "average",
                                                     "advance", "total"},
           "counts header");
  c.Expect(counts.rows.size() == 6, "counts rows " + std::to_string(counts.rows.size()));
  for (const auto &row : counts.rows) {
    if (row.size() != 6) {
      c.Expect(false, "counts row width");
      continue;
    }
    const int day = std::stoi(row[0]), article = std::stoi(row[1]);
    const int sum = std::stoi(row[2]) + std::stoi(row[3]) + std::stoi(row[4]);
    const auto sessions = std::count_if(corpus.sessions.begin(), corpus.sessions.end(),
                                        [&](const auto &s) {
                                          return s.key.day == day && s.key.article == article;
                                        });
    c.Expect(sum == std::stoi(row[5]) && sum == sessions,
             "counts cell d" + row[0] + " a" + row[1]);
  }
}

corpus::RaterScoreSet Rater(const std::string &id, int score) {
  corpus::RaterScoreSet r;
  r.rater_id = id;
  r.scores.fill(corpus::LabelAt(score));
  return r;
}

std::map<std::string, double> AgreementVia(const fs::path &dir) {
  const std::string manifest = (dir / "manifest.json").string();
  const char *argv[] = {"rrassess", "agreement", "--manifest", manifest.c_str()};
  std::ostringstream out, err;
  std::map<std::string, double> values;
  if (cli::RunCli(4, argv, out, err) != cli::kExitOk) return values;
  std::istringstream lines(out.str());
  std::string criterion, value;
  while (lines >> criterion >> value) values[criterion] = *ParseReal(value);
  return values;
}

void Agreement(Check &c) {
  const fs::path dir = scratch::Dir("agreement") / "corpus";
  fs::copy(scratch::MiniCorpus(), dir, fs::copy_options::recursive);
  const auto corpus = corpus::LoadCorpus((dir / "manifest.json").string());
  for (bool unanimous : {false, true}) {
    for (std::size_t s = 0; s < corpus.sessions.size(); ++s) {
      const int base = static_cast<int>(s % 3);
      std::vector<corpus::RaterScoreSet> raters = {Rater("r1", base), Rater("r2", base),
                                                   Rater("r3", base)};
      if (!unanimous) raters[s % 3] = Rater(raters[s % 3].rater_id, (base + 1) % 3);
      WriteFileBytes(corpus.sessions[s].ratings_ref, corpus::RatingsToJson(raters));
    }
    const double want = unanimous ? 1.0 : 1.0 / 3.0;
    auto got = AgreementVia(dir);
    c.Expect(got.size() == 4, "agreement output lines");
    for (const auto &[criterion, value] : got)
      c.Expect(value == want, criterion + " agreement " + Num(value));
  }
  fs::remove_all(dir.parent_path());
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "dimensional fidelity", 1.0, DimensionalFidelity},
      {2, "dsp oracle suite", 10.0, DspOracles},
      {3, "lexical oracle", 10.0, LexicalOracle},
      {4, "syntactic fixtures", 1.0, SyntacticFixtures},
      {5, "classifier sanity", 60.0, ClassifierSanity},
      {6, "end-to-end determinism", 60.0, EndToEnd},
      {7, "report shape", 60.0, ReportShape},
      {8, "agreement", 10.0, Agreement},
  };
  int failed = 0;
  for (const auto &cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception &e) {
      check.Expect(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.Expect(secs < cr.limit_s, "runtime " + Num(secs) + " s over " + Num(cr.limit_s) + " s");
    std::printf("%s [%d] %s (%.2f s)%s\n", check.ok() ? "PASS" : "FAIL", cr.id,
                cr.name.c_str(), secs, check.Summary().c_str());
    failed += !check.ok();
  }
  if (!g_run_dir.empty()) fs::remove_all(g_run_dir.parent_path());
  return failed == 0 ? 0 : 1;
}
