// tools/make_minicorpus.cc

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

// Writes the bundled six-session synthetic corpus: one participant, three
// days, two articles, three raters.
//
//   make_minicorpus <output-dir>

#include <cmath>
#include <filesystem>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"
#include "rrassess/common/error.h"
#include "rrassess/corpus/ratings.h"
#include "rrassess/corpus/transcript.h"
#include "rrassess/dsp/wav.h"
#include "rrassess/synco/tree.h"

namespace {

using namespace rrassess;
using corpus::Label;

const char *kTrees[] = {
    // 0-9: simple
    "(ROOT (S (NP (DT The) (NN man)) (VP (VBD went) (PP (TO to) (NP (DT the) (NN city)))) (. .)))",
    "(ROOT (S (NP (PRP He)) (VP (VBD saw) (NP (DT a) (JJ big) (NN house))) (. .)))",
    "(ROOT (S (NP (DT The) (NN house)) (VP (VBD was) (ADJP (JJ old))) (. .)))",
    "(ROOT (S (NP (PRP He)) (VP (VBD was) (ADJP (JJ happy))) (. .)))",
    "(ROOT (S (NP (DT The) (NN story)) (VP (VBZ is) (ADJP (JJ short))) (. .)))",
    "(ROOT (S (NP (PRP She)) (VP (VBD liked) (NP (DT the) (NN book))) (. .)))",
    "(ROOT (S (NP (DT The) (NN girl)) (VP (VBD read) (NP (DT a) (NN letter))) (. .)))",
    "(ROOT (S (NP (PRP They)) (VP (VBD ate) (NP (NN bread))) (. .)))",
    "(ROOT (S (NP (DT The) (NN dog)) (VP (VBD ran) (ADVP (RB away))) (. .)))",
    "(ROOT (S (NP (PRP I)) (VP (VBP think) (SBAR (S (NP (PRP it)) (VP (VBZ is) (ADJP (JJ good)))))) (. .)))",
    // 10-17: coordination and subordination
    "(ROOT (S (S (NP (DT The) (NN man)) (VP (VBD worked) (ADVP (RB hard)))) (, ,) (CC and) (S (NP (PRP he)) (VP (VBD saved) (NP (NN money)))) (. .)))",
    "(ROOT (S (NP (PRP He)) (VP (VBD said) (SBAR (IN that) (S (NP (DT the) (NN village)) (VP (VBD needed) (NP (NN water)))))) (. .)))",
    "(ROOT (S (SBAR (IN When) (S (NP (DT the) (NN rain)) (VP (VBD came)))) (, ,) (NP (DT the) (NNS farmers)) (VP (VBD were) (ADJP (JJ glad))) (. .)))",
    "(ROOT (S (NP (NP (DT The) (NN boy)) (SBAR (WHNP (WP who)) (S (VP (VBD lived) (PP (IN in) (NP (DT the) (NN town))))))) (VP (VBD helped) (NP (PRP$ his) (NN mother))) (. .)))",
    "(ROOT (S (NP (PRP She)) (VP (VBD bought) (NP (NP (NNS apples)) (CC and) (NP (NNS oranges)))) (. .)))",
    "(ROOT (S (NP (DT The) (NN teacher)) (VP (VBD told) (NP (DT the) (NNS students)) (S (VP (TO to) (VP (VB read) (NP (DT the) (NN story)))))) (. .)))",
    "(ROOT (S (NP (PRP They)) (VP (VBD walked) (PP (IN to) (NP (DT the) (NN river))) (SBAR (IN because) (S (NP (PRP it)) (VP (VBD was) (ADJP (JJ hot)))))) (. .)))",
    "(ROOT (S (NP (DT The) (NN family)) (VP (VP (VBD moved) (PP (IN to) (NP (DT a) (JJ new) (NN city)))) (CC and) (VP (VBD found) (NP (NN work)))) (. .)))",
    // 18-25: elaborated
    "(ROOT (S (NP (DT The) (NN author)) (VP (VBZ argues) (SBAR (IN that) (S (NP (JJ renewable) (NN energy)) (VP (MD will) (VP (VB transform) (NP (DT the) (JJ global) (NN economy))))))) (. .)))",
    "(ROOT (S (SBAR (IN Although) (S (NP (DT the) (NN experiment)) (VP (VBD failed) (ADVP (RB initially))))) (, ,) (NP (DT the) (NNS researchers)) (VP (VBD persisted) (ADVP (RB patiently))) (. .)))",
    "(ROOT (S (S (VP (VBG Reading) (NP (JJ scientific) (NNS articles)))) (VP (VBZ improves) (NP (NP (DT the) (NN vocabulary)) (PP (IN of) (NP (NNS learners))))) (. .)))",
    "(ROOT (S (NP (DT The) (NN article)) (VP (VBZ describes) (SBAR (WHADVP (WRB how)) (S (NP (NNS engineers)) (VP (VBD designed) (NP (DT an) (JJ efficient) (NN bridge)))))) (. .)))",
    "(ROOT (S (NP (NP (DT The) (NN scientist)) (SBAR (WHNP (WDT that)) (S (VP (VBD discovered) (NP (DT the) (NN vaccine)))))) (VP (VBD received) (NP (DT an) (JJ international) (NN award))) (. .)))",
    "(ROOT (S (NP (NNS Governments)) (VP (MD should) (VP (VB invest) (PP (IN in) (NP (NN education))) (SBAR (IN because) (S (NP (PRP it)) (VP (VBZ strengthens) (NP (NP (NNS communities)) (CC and) (NP (NNS economies)))))))) (. .)))",
    "(ROOT (S (S (NP (DT The) (NN population)) (VP (VBD increased) (ADVP (RB dramatically)))) (, ,) (CC but) (S (NP (DT the) (NNS resources)) (VP (VBD remained) (ADJP (JJ limited)))) (. .)))",
    "(ROOT (S (NP (PRP We)) (VP (VBD learned) (SBAR (IN that) (S (NP (NN pollution)) (VP (VBZ threatens) (NP (JJ marine) (NN life)))))) (. .)))",
};

// Frequency-ranked lemma list (most frequent first).
const char *kWordList =
    "the be and of a in to have it i that for you he with on do say they at "
    "this but we his from not by she or as what go their can who get if "
    "would her all my make about know will up one time there year so think "
    "when which them some me people take out into just see him your come "
    "could now than like other how then its our two more these want way "
    "look first also new because day use no man find here thing give many "
    "well only those tell very even back any good woman through us life "
    "child work down may after should call world over school still try last "
    "ask need too feel three state never become between high really "
    "something most another much family own leave put old while mean keep "
    "student why let great same big group begin seem country help talk "
    "where turn problem every start hand might show part against place such "
    "again few case week company system each right program hear question "
    "during play government run small number off always move night live "
    "point believe hold today bring happen next without before large "
    "million must home under water room write mother area national money "
    "story young fact month different lot study book eye job word business "
    "issue side kind four head far black long both little house yes since "
    "provide service around friend important father sit away until power "
    "hour game often yet line end among ever stand bad lose however member "
    "pay law meet car city almost include continue set later community name "
    "five once white least change team minute best several idea kid body "
    "information nothing ago lead social understand whether watch together "
    "follow parent stop face anything create public already speak others "
    "read level allow add office spend door health person art sure war "
    "history party within grow result open morning walk reason low win "
    "research girl early food moment himself air teacher force offer enough "
    "education across although remember foot second boy maybe toward able "
    "age policy everything love process music consider appear actually buy "
    "probably human wait serve market die send expect sense build stay fall "
    "nation plan cut college interest death course someone experience "
    "behind reach local kill six remain effect class control raise care "
    "perhaps late hard field else pass former sell major sometimes require "
    "along development themselves report role better economic effort decide "
    "rate strong possible heart leader light voice wife police mind finally "
    "pull return free price less decision explain son hope develop view "
    "relationship carry town road drive arm true break difference thank "
    "receive value building action full model join season society director "
    "position player agree especially record pick wear paper special space "
    "ground form support event official whose matter everyone center couple "
    "site project hit base activity star table court produce eat teach "
    "half situation easy cost industry figure street image itself phone "
    "either data cover quite picture clear practice piece land recent "
    "describe product doctor wall patient worker news test movie certain "
    "north personal simply third technology catch step baby computer type "
    "attention draw film tree source red nearly organization choose cause "
    "hair century evidence window difficult listen soon culture chance "
    "brother period summer realize hundred available plant likely "
    "opportunity term short letter condition choice single rule daughter "
    "south husband floor material medical hospital church close thousand "
    "risk current fire future wrong involve anyone bank myself certainly "
    "west sport board seek subject officer private rest behavior deal fight "
    "throw top quickly past goal bed order fill represent focus foreign "
    "drop blood upon push nature color store reduce sound note fine near "
    "movement page enter share common poor natural race concern series "
    "significant similar hot language usually response dead rise animal "
    "factor decade shoot east save seven artist scene stock career despite "
    "central eight thus beyond happy exactly protect approach lie size dog "
    "fund serious occur ready sign thought list individual simple quality "
    "pressure accept answer identify left meeting determine prepare disease "
    "success cup amount ability staff recognize character growth loss "
    "degree wonder attack herself region television box training pretty "
    "trade everybody physical lay general feeling standard bill message "
    "fail outside arrive analysis benefit forward present section glass "
    "skill sister operation crime stage compare design sort act ten "
    "knowledge station blue strategy clearly discuss indeed truth song "
    "example check environment leg dark various rather laugh guess prove "
    "hang entire rock forget claim remove manager enjoy network cold final "
    "main science green memory card above seat cell nice trial expert "
    "spring firm radio visit avoid imagine huge ball finish theory impact "
    "maintain charge popular traditional direction employee cultural "
    "contain peace pain apply measure wide fly interview manage chair fish "
    "particular camera structure bit weight suddenly discover production "
    "treat trip evening affect inside unit style adult worry range mention "
    "deep edge specific writer trouble necessary challenge fear shoulder "
    "middle sea dream bar beautiful property instead improve river village "
    "rain farmer apple orange bread";

struct SessionPlan {
  int day;
  int article;
  std::vector<int> trees;
  // Derived labels per criterion: oral fluency, lexical, syntactic, overall.
  std::array<int, 4> labels;
  double f0;
  double pause_seconds;
};

const SessionPlan kPlans[] = {
    {1, 1, {0, 1, 2, 5, 8, 3}, {1, 1, 1, 1}, 120.0, 0.45},
    {1, 2, {6, 7, 9, 14, 4, 1}, {2, 1, 2, 1}, 135.0, 0.30},
    {2, 1, {10, 11, 5, 14, 15, 2}, {2, 2, 1, 2}, 150.0, 0.30},
    {2, 2, {12, 13, 16, 17, 9, 11}, {3, 2, 2, 2}, 165.0, 0.15},
    {3, 1, {18, 19, 20, 13, 21, 22, 15}, {3, 3, 3, 3}, 180.0, 0.12},
    {3, 2, {23, 24, 25, 10, 22, 12, 19}, {2, 3, 3, 3}, 170.0, 0.20},
};

// Three raters: two agree with the derived label, the third dissents by one
// step on some criteria. The mean still rounds to the derived label.
std::vector<corpus::RaterScoreSet> Raters(const SessionPlan &plan, int index) {
  std::vector<corpus::RaterScoreSet> raters;
  for (int r = 0; r < 3; ++r) {
    corpus::RaterScoreSet set;
    set.rater_id = "r" + std::to_string(r + 1);
    for (int c = 0; c < 4; ++c) {
      int score = plan.labels[c];
      if (r == 2 && (c + index) % 2 == 0) score += score < 3 ? 1 : -1;
      set.scores[c] = static_cast<Label>(score);
    }
    raters.push_back(set);
  }
  return raters;
}

dsp::AudioSignal Synthesize(const SessionPlan &plan, uint64_t seed) {
  constexpr int kRate = 16000;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> noise(0.0, 1e-4);
  dsp::AudioSignal s;
  s.sample_rate = kRate;
  const double total = 6.0;
  double phase = 0.0;
  while (s.samples.size() < total * kRate) {
    const int syllables = 3 + static_cast<int>(unit(rng) * 4);
    for (int k = 0; k < syllables; ++k) {
      const std::size_t len = static_cast<std::size_t>((0.16 + 0.12 * unit(rng)) * kRate);
      const double f_start = plan.f0 * (0.9 + 0.2 * unit(rng));
      const double f_end = plan.f0 * (0.9 + 0.2 * unit(rng));
      for (std::size_t n = 0; n < len; ++n) {
        const double t = static_cast<double>(n) / len;
        const double f = f_start + (f_end - f_start) * t;
        phase += 2.0 * M_PI * f / kRate;
        const double env = std::sin(M_PI * t);
        double v = 0.0;
        for (int h = 1; h <= 6; ++h) v += std::sin(h * phase) / h;
        s.samples.push_back(0.25 * env * v + noise(rng));
      }
    }
    const std::size_t pause = static_cast<std::size_t>(
        plan.pause_seconds * (0.6 + 0.8 * unit(rng)) * kRate);
    for (std::size_t n = 0; n < pause; ++n) s.samples.push_back(noise(rng));
  }
  s.samples.resize(static_cast<std::size_t>(total * kRate));
  return s;
}

void Write(const std::filesystem::path &p, const std::string &bytes) {
  WriteFileBytes(p.string(), bytes);
}

}  // namespace

int main(int argc, char **argv) {
  if (argc != 2) {
    std::cerr << "usage: make_minicorpus <output-dir>\n";
    return 2;
  }
  const std::filesystem::path root(argv[1]);
  try {
    std::filesystem::create_directories(root);
    nlohmann::ordered_json manifest;
    manifest["sessions"] = nlohmann::json::array();
    for (std::size_t i = 0; i < std::size(kPlans); ++i) {
      const SessionPlan &plan = kPlans[i];
      const std::string stem = "p01_d" + std::to_string(plan.day) + "_a" +
                               std::to_string(plan.article);
      std::string trees, tags;
      corpus::Transcript transcript;
      for (int t : plan.trees) {
        trees += std::string(kTrees[t]) + "\n";
        const auto parsed = synco::ParseBracketed(kTrees[t]);
        std::vector<std::string> words;
        std::string line;
        for (const auto *leaf : synco::Leaves(parsed.front())) {
          words.push_back(leaf->surface);
          line += (line.empty() ? "" : " ") + leaf->label;
        }
        transcript.sentences.push_back(words);
        tags += line + "\n";
      }
      corpus::DisfluencyLog log;
      if (i % 2 == 0)
        log.events.push_back({corpus::DisfluencyCategory::kHesitation, 0, 2, "uh"});
      log.events.push_back({corpus::DisfluencyCategory::kRepetition, 1, 1,
                            transcript.sentences[1][0]});

      Write(root / (stem + ".wav"), dsp::EncodeWav16(Synthesize(plan, 1000 + i)));
      Write(root / (stem + ".txt"), corpus::SerializeTranscript(transcript));
      Write(root / (stem + ".trees"), trees);
      Write(root / (stem + ".tags"), tags);
      Write(root / (stem + "_disfluencies.json"), corpus::DisfluencyToJson(log));
      Write(root / (stem + "_ratings.json"),
            corpus::RatingsToJson(Raters(plan, static_cast<int>(i))));
      manifest["sessions"].push_back({{"participant", "p01"},
                                      {"day", plan.day},
                                      {"article", plan.article},
                                      {"audio", stem + ".wav"},
                                      {"transcript", stem + ".txt"},
                                      {"trees", stem + ".trees"},
                                      {"tags", stem + ".tags"},
                                      {"disfluencies", stem + "_disfluencies.json"},
                                      {"ratings", stem + "_ratings.json"}});
    }
    Write(root / "manifest.json", manifest.dump(2) + "\n");

    std::istringstream words(kWordList);
    std::set<std::string> seen;
    std::string list;
    for (std::string w; words >> w;)
      if (seen.insert(w).second) list += w + "\n";
    Write(root / "wordlist.txt", list);
  } catch (const std::exception &e) {
    std::cerr << "make_minicorpus: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
