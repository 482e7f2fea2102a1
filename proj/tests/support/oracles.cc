// tests/support/oracles.cc

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

#include "support/oracles.h"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace oracle {

using rrassess::lexrich::TaggedToken;
using rrassess::synco::ParseTree;

rrassess::dsp::AudioSignal Sine(double freq, int sr, double seconds,
                                double amp) {
  rrassess::dsp::AudioSignal s;
  s.sample_rate = sr;
  const std::size_t n = static_cast<std::size_t>(std::llround(seconds * sr));
  for (std::size_t i = 0; i < n; ++i)
    s.samples.push_back(amp * std::sin(2.0 * M_PI * freq * i / sr));
  return s;
}

double Median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

std::map<std::string, double> NaiveFunctionals(const std::vector<double> &x) {
  const double n = static_cast<double>(x.size());
  double mean = 0;
  for (double v : x) mean += v;
  mean /= n;
  double m2 = 0, m3 = 0, m4 = 0;
  for (double v : x) {
    m2 += std::pow(v - mean, 2);
    m3 += std::pow(v - mean, 3);
    m4 += std::pow(v - mean, 4);
  }
  m2 /= n;
  m3 /= n;
  m4 /= n;
  std::size_t imin = 0, imax = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < x[imin]) imin = i;
    if (x[i] > x[imax]) imax = i;
  }
  double tbar = (n - 1) / 2.0, sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (i - tbar) * (x[i] - mean);
    sxx += (i - tbar) * (i - tbar);
  }
  const double slope = sxy / sxx;
  const double offset = mean - slope * tbar;
  double err = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    err += std::pow(x[i] - (offset + slope * i), 2);
  std::map<std::string, double> f;
  f["mean"] = mean;
  f["stddev"] = std::sqrt(m2);
  f["min"] = x[imin];
  f["max"] = x[imax];
  f["range"] = x[imax] - x[imin];
  f["minPos"] = imin / (n - 1);
  f["maxPos"] = imax / (n - 1);
  f["slope"] = slope;
  f["offset"] = offset;
  f["linregerr"] = err / n;
  f["skewness"] = m2 > 0 ? m3 / std::pow(m2, 1.5) : 0.0;
  f["kurtosis"] = m2 > 0 ? m4 / (m2 * m2) : 0.0;
  return f;
}

namespace {

std::string Lower(std::string s) {
  for (auto &c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

bool Begins(const std::string &s, const char *p) {
  return s.rfind(p, 0) == 0;
}

std::size_t CountDistinct(const std::vector<std::string> &items) {
  std::vector<std::string> seen;
  for (const auto &w : items)
    if (std::find(seen.begin(), seen.end(), w) == seen.end()) seen.push_back(w);
  return seen.size();
}

}  // namespace

std::array<std::optional<double>, 25> BruteLexMetrics(
    const std::vector<TaggedToken> &tokens,
    const std::vector<std::string> &ranked_words, std::size_t k,
    uint64_t seed) {
  const std::vector<std::string> punct = {".",     ",",     ":",    "``", "''",
                                          "-LRB-", "-RRB-", "HYPH", "NFP", "#",
                                          "$",     "SYM"};
  std::vector<std::string> all, lex, verbs, nouns, adjs, advs, soph, sverbs;
  std::size_t n_soph_lex = 0;
  for (const auto &t : tokens) {
    if (std::find(punct.begin(), punct.end(), t.pos) != punct.end()) continue;
    const std::string lemma = Lower(t.lemma);
    all.push_back(lemma);
    bool is_soph = true;
    for (std::size_t r = 0; r < ranked_words.size() && r < k; ++r)
      if (Lower(ranked_words[r]) == lemma) is_soph = false;
    if (is_soph) soph.push_back(lemma);
    std::string cls;
    if (Begins(t.pos, "NN")) cls = "noun";
    else if (Begins(t.pos, "JJ")) cls = "adj";
    else if (Begins(t.pos, "VB") && lemma != "be" && lemma != "have" && lemma != "do")
      cls = "verb";
    else if (Begins(t.pos, "RB")) {
      const std::string s = Lower(t.surface);
      if (s.size() >= 5 && s.substr(s.size() - 2) == "ly") cls = "adv";
    }
    if (cls.empty()) continue;
    lex.push_back(lemma);
    if (is_soph) ++n_soph_lex;
    if (cls == "noun") nouns.push_back(lemma);
    if (cls == "adj") adjs.push_back(lemma);
    if (cls == "adv") advs.push_back(lemma);
    if (cls == "verb") {
      verbs.push_back(lemma);
      if (is_soph) sverbs.push_back(lemma);
    }
  }
  const double N = all.size(), T = CountDistinct(all);
  const double Nlex = lex.size(), Tlex = CountDistinct(lex);
  const double Nv = verbs.size(), Tv = CountDistinct(verbs);
  const double Tsv = CountDistinct(sverbs);
  const double Tn = CountDistinct(nouns), Tadj = CountDistinct(adjs),
               Tadv = CountDistinct(advs), Ts = CountDistinct(soph);
  auto div = [](double a, double b) -> std::optional<double> {
    if (b == 0) return std::nullopt;
    return a / b;
  };
  std::array<std::optional<double>, 25> m;
  m[0] = Nlex / N;
  m[1] = div(n_soph_lex, Nlex);
  m[2] = Ts / T;
  m[3] = div(Tsv, Nv);
  m[4] = div(Tsv * Tsv, Nv);
  m[5] = div(Tsv, std::sqrt(2 * Nv));
  m[6] = T;
  if (all.size() >= 50) {
    m[7] = CountDistinct({all.begin(), all.begin() + 50});
    std::mt19937_64 rng(seed);
    double total = 0;
    for (int s = 0; s < 10; ++s) {
      std::vector<std::size_t> perm(all.size());
      for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
      std::vector<std::string> sample;
      for (std::size_t i = 0; i < 50; ++i) {
        std::size_t j = i + rng() % (perm.size() - i);
        std::swap(perm[i], perm[j]);
        sample.push_back(all[perm[i]]);
      }
      total += CountDistinct(sample);
    }
    m[8] = total / 10;
    std::mt19937_64 rng2(seed);
    total = 0;
    for (int s = 0; s < 10; ++s) {
      const std::size_t start = rng2() % (all.size() - 49);
      total += CountDistinct({all.begin() + start, all.begin() + start + 50});
    }
    m[9] = total / 10;
    double ttr_sum = 0;
    std::size_t segs = all.size() / 50;
    for (std::size_t s = 0; s < segs; ++s)
      ttr_sum += CountDistinct({all.begin() + s * 50, all.begin() + s * 50 + 50}) / 50.0;
    m[11] = ttr_sum / segs;
  }
  m[10] = T / N;
  m[12] = T / std::sqrt(2 * N);
  m[13] = T / std::sqrt(N);
  m[14] = div(std::log(T), std::log(N));
  if (T < N) m[15] = std::log(N) * std::log(N) / std::log(N / T);
  m[16] = div(Tlex, Nlex);
  m[17] = div(Tv, Nv);
  m[18] = div(Tv * Tv, Nv);
  m[19] = div(Tv, std::sqrt(2 * Nv));
  m[20] = div(Tv, Nlex);
  m[21] = div(Tn, Nlex);
  m[22] = div(Tadj, Nlex);
  m[23] = div(Tadv, Nlex);
  m[24] = div(Tadj + Tadv, Nlex);
  return m;
}

std::vector<TaggedToken> RandomTaggedText(std::mt19937_64 &rng, std::size_t n) {
  static const std::vector<TaggedToken> vocab = {
      {"the", "the", "DT"},         {"The", "the", "DT"},
      {"a", "a", "DT"},             {"of", "of", "IN"},
      {"in", "in", "IN"},           {"and", "and", "CC"},
      {"he", "he", "PRP"},          {"they", "they", "PRP"},
      {"cat", "cat", "NN"},         {"cats", "cat", "NNS"},
      {"river", "river", "NN"},     {"nebula", "nebula", "NN"},
      {"Paris", "paris", "NNP"},    {"idea", "idea", "NN"},
      {"ideas", "idea", "NNS"},     {"run", "run", "VB"},
      {"ran", "run", "VBD"},        {"runs", "run", "VBZ"},
      {"meander", "meander", "VB"}, {"meandered", "meander", "VBD"},
      {"see", "see", "VBP"},        {"saw", "see", "VBD"},
      {"is", "be", "VBZ"},          {"was", "be", "VBD"},
      {"has", "have", "VBZ"},       {"did", "do", "VBD"},
      {"will", "will", "MD"},       {"can", "can", "MD"},
      {"big", "big", "JJ"},         {"lucid", "lucid", "JJ"},
      {"larger", "large", "JJR"},   {"quickly", "quickly", "RB"},
      {"lucidly", "lucidly", "RB"}, {"very", "very", "RB"},
      {"only", "only", "RB"},       {"fly", "fly", "RB"},
      {"not", "not", "RB"},         {"three", "three", "CD"},
  };
  static const std::vector<TaggedToken> punct = {
      {".", ".", "."}, {",", ",", ","}, {":", ":", ":"}};
  std::vector<TaggedToken> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(vocab[rng() % vocab.size()]);
    if (rng() % 7 == 0) out.push_back(punct[rng() % punct.size()]);
  }
  return out;
}

std::vector<std::string> ToyWordList() {
  return {"the", "be", "a", "of", "and", "in", "have", "he", "do", "they",
          "see", "run", "big", "will", "can", "very", "not", "only", "three",
          "cat", "idea", "large", "quickly", "river"};
}

namespace {

ParseTree Leaf(const std::string &tag, const std::string &word) {
  return {tag, {}, word};
}

ParseTree Node(const std::string &label, std::vector<ParseTree> children) {
  return {label, std::move(children), ""};
}

enum { W, S, C, T, CT, DC, CP, CN, VP };

const char *kNouns[] = {"dog", "city", "letter", "river", "teacher", "idea"};
const char *kAdjs[] = {"old", "green", "quiet", "large"};
const char *kVerbs[] = {"saw", "liked", "found", "said", "knew", "wrote"};

// Simple NP; adds its words and complex-nominal count.
ParseTree SimpleNp(std::mt19937_64 &rng, TreeCounts *tc, bool allow_adj) {
  const int kind = static_cast<int>(rng() % (allow_adj ? 3 : 2));
  if (kind == 0) {
    tc->counts[W] += 1;
    return Node("NP", {Leaf("PRP", "it")});
  }
  std::vector<ParseTree> ch = {Leaf("DT", "the")};
  if (kind == 2) {
    ch.push_back(Leaf("JJ", kAdjs[rng() % 4]));
    tc->counts[CN] += 1;
  }
  ch.push_back(Leaf("NN", kNouns[rng() % 6]));
  tc->counts[W] += ch.size();
  return Node("NP", std::move(ch));
}

// Finite clause S with subject, VBD head, and an optional object.
ParseTree Clause(std::mt19937_64 &rng, TreeCounts *tc, int depth,
                 bool *has_dc) {
  ParseTree subj = SimpleNp(rng, tc, true);
  std::vector<ParseTree> vp = {Leaf("VBD", kVerbs[rng() % 6])};
  tc->counts[W] += 1;
  tc->counts[C] += 1;
  tc->counts[VP] += 1;
  const int obj = static_cast<int>(rng() % (depth < 2 ? 4 : 3));
  if (obj == 1) {
    vp.push_back(SimpleNp(rng, tc, true));
  } else if (obj == 2) {
    tc->counts[CP] += 1;
    tc->counts[W] += 3;
    vp.push_back(Node("NP", {Node("NP", {Leaf("NNS", "apples")}),
                             Leaf("CC", "and"),
                             Node("NP", {Leaf("NNS", "pears")})}));
  } else if (obj == 3) {
    // "that" complement: dependent clause and complex nominal.
    tc->counts[W] += 1;
    tc->counts[DC] += 1;
    tc->counts[CN] += 1;
    *has_dc = true;
    vp.push_back(Node("SBAR", {Leaf("IN", "that"),
                               Clause(rng, tc, depth + 1, has_dc)}));
  }
  return Node("S", {std::move(subj), Node("VP", std::move(vp))});
}

}  // namespace

ParseTree RandomSentenceTree(std::mt19937_64 &rng, TreeCounts *expected) {
  TreeCounts &tc = *expected;
  tc = {};
  tc.counts[S] = 1;
  ParseTree top;
  if (rng() % 3 == 0) {
    bool dc1 = false, dc2 = false;
    ParseTree a = Clause(rng, &tc, 0, &dc1);
    ParseTree b = Clause(rng, &tc, 0, &dc2);
    tc.counts[W] += 1;
    tc.counts[T] += 2;
    tc.counts[CT] += (dc1 || dc2) + dc2;
    top = Node("S", {std::move(a), Leaf("CC", "and"), std::move(b),
                     Leaf(".", ".")});
  } else {
    bool dc = false;
    top = Clause(rng, &tc, 0, &dc);
    top.children.push_back(Leaf(".", "."));
    tc.counts[T] += 1;
    tc.counts[CT] += dc;
  }
  return Node("ROOT", {std::move(top)});
}

rrassess::learn::Dataset GaussianBlobs(std::size_t per_class,
                                       double separation, std::size_t dim,
                                       uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  rrassess::learn::Dataset d;
  for (int c = 0; c < 3; ++c)
    for (std::size_t i = 0; i < per_class; ++i) {
      std::vector<double> x(dim);
      for (auto &v : x) v = g(rng);
      x[0] += separation * c;
      d.x.push_back(std::move(x));
      d.y.push_back(c);
    }
  return d;
}

}  // namespace oracle
