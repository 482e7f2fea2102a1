// tests/unit/test_learn.cc

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
#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "rrassess/common/error.h"
#include "rrassess/learn/classifiers.h"
#include "rrassess/learn/fusion.h"
#include "rrassess/learn/grid.h"
#include "rrassess/learn/model.h"
#include "rrassess/learn/report.h"
#include "rrassess/learn/split.h"
#include "support/oracles.h"

using namespace rrassess;
using namespace rrassess::learn;

namespace {

double Accuracy(const Classifier &model, const Dataset &test) {
  auto pred = model.PredictAll(test.x);
  std::size_t ok = 0;
  for (std::size_t i = 0; i < pred.size(); ++i) ok += pred[i] == test.y[i];
  return static_cast<double>(ok) / static_cast<double>(test.size());
}

LabeledMatrix BlobMatrix(std::size_t per_class, double sep, uint64_t seed) {
  Dataset d = oracle::GaussianBlobs(per_class, sep, 3, seed);
  LabeledMatrix m;
  m.columns = {"x0", "x1", "x2"};
  for (std::size_t i = 0; i < d.size(); ++i) {
    corpus::SessionKey key{"p" + std::to_string(i), 1 + static_cast<int>(i % 3),
                           1 + static_cast<int>(i % 2)};
    m.AddRow(d.x[i], corpus::LabelAt(d.y[i]), key);
  }
  return m;
}

}  // namespace

TEST_SUITE("learn") {

TEST_CASE("stratified split keeps class proportions and is seed-stable") {
  std::vector<int> y;
  for (int i = 0; i < 100; ++i) y.push_back(0);
  for (int i = 0; i < 50; ++i) y.push_back(1);
  for (int i = 0; i < 7; ++i) y.push_back(2);
  SplitSpec spec;
  spec.seed = 42;
  SplitIndices s = Split(y, spec);
  CHECK(s.train.size() == 70 + 35 + 5);
  CHECK(s.test.size() == y.size() - s.train.size());
  std::set<std::size_t> all(s.train.begin(), s.train.end());
  for (auto i : s.test) CHECK(all.insert(i).second);
  CHECK(all.size() == y.size());
  CHECK(std::is_sorted(s.train.begin(), s.train.end()));
  SplitIndices again = Split(y, spec);
  CHECK(again.train == s.train);
  spec.seed = 43;
  CHECK(Split(y, spec).train != s.train);
  spec.train_fraction = 1.0;
  CHECK_THROWS_AS(Split(y, spec), UsageError);
  spec.train_fraction = 0.7;
  CHECK_THROWS_AS(Split(y, {0, 1, 2, 3}, spec), DataError);
}

TEST_CASE("standardizer imputes medians and uses training statistics") {
  const double nan = std::nan("");
  std::vector<std::vector<double>> rows = {{1, 5, nan}, {2, 5, nan}, {nan, 5, nan}, {5, 5, nan}};
  Standardizer s;
  s.Fit(rows);
  CHECK(s.medians()[0] == 2.0);
  CHECK(s.means()[0] == doctest::Approx(2.5));
  CHECK(s.scales()[1] == 0.0);
  CHECK(s.medians()[2] == 0.0);
  auto t = s.Transform({nan, 100, 7});
  CHECK(t[0] == doctest::Approx((2.0 - 2.5) / s.scales()[0]));
  CHECK(t[1] == 0.0);
  CHECK(t[2] == 0.0);
  CHECK_THROWS_AS(s.Transform({1.0}), DataError);
  std::vector<std::vector<double>> z = {{1, 2}, {3, 2}, {5, 2}};
  s.Fit(z);
  s.TransformInPlace(&z);
  double sum = 0, ss = 0;
  for (auto &r : z) sum += r[0], ss += r[0] * r[0];
  CHECK(sum == doctest::Approx(0.0));
  CHECK(ss / 3 == doctest::Approx(1.0));
}

TEST_CASE("fusion layout") {
  lexrich::LexMetricVector lex;
  lex.values.fill(1.0);
  lex.values[8] = std::nullopt;
  synco::SynMetricVector syn;
  syn.values.fill(2.0);
  functionals::FeatureVector pro;
  pro.values.assign(88, 3.0);
  auto f = Fuse(lex, syn, pro);
  REQUIRE(f.size() == kFusedDim);
  CHECK(kFusedDim == 127);
  CHECK(std::isnan(f[8]));
  CHECK(f[25] == 2.0);
  CHECK(f[126] == 3.0);
  pro.values.pop_back();
  CHECK_THROWS_AS(Fuse(lex, syn, pro), DataError);
  auto names = FusedColumnNames(std::vector<std::string>(88, "p"));
  CHECK(names.size() == 127);
  CHECK(names[0] == "lex:LD");
  CHECK(names[25] == "syn:MLC");
  CHECK(names[39] == "pro:p");
}

TEST_CASE("every classifier separates well-spaced blobs") {
  Dataset d = oracle::GaussianBlobs(60, 6.0, 4, 8);
  SplitSpec spec;
  spec.seed = 5;
  auto s = Split(d.y, spec);
  Dataset train = d.Subset(s.train), test = d.Subset(s.test);
  for (ModelKind kind : kModelKinds) {
    ModelSpec ms;
    ms.kind = kind;
    ms.seed = 3;
    ms.forest_trees = 30;
    INFO(ModelKindName(kind));
    CHECK(Accuracy(*Train(train, ms), test) >= 0.9);
    CHECK(ModelKindFromName(ModelKindName(kind)) == kind);
  }
  CHECK_THROWS_AS(ModelKindFromName("perceptron"), UsageError);
}

TEST_CASE("one nearest neighbour memorizes its training set") {
  Dataset d = oracle::GaussianBlobs(30, 0.5, 3, 2);
  KnnClassifier knn(d, 1);
  for (std::size_t i = 0; i < d.size(); ++i) CHECK(knn.Predict(d.x[i]) == d.y[i]);
}

TEST_CASE("unpruned tree fits distinct training points") {
  Dataset d = oracle::GaussianBlobs(30, 0.5, 3, 4);
  DecisionTreeClassifier tree(d, {});
  for (std::size_t i = 0; i < d.size(); ++i) CHECK(tree.Predict(d.x[i]) == d.y[i]);
  DecisionTreeClassifier stump(d, {1, 1, 0});
  CHECK(stump.num_nodes() <= 3);
}

TEST_CASE("forest is deterministic under a seed") {
  Dataset d = oracle::GaussianBlobs(20, 2.0, 5, 6);
  RandomForestClassifier a(d, 15, 99), b(d, 15, 99);
  CHECK(a.trees().size() == 15);
  CHECK(a.PredictAll(d.x) == b.PredictAll(d.x));
}

TEST_CASE("svm decision values have the right sign on separable data") {
  Dataset d;
  for (int i = 0; i < 10; ++i) {
    d.x.push_back({-2.0 - 0.1 * i});
    d.y.push_back(0);
    d.x.push_back({2.0 + 0.1 * i});
    d.y.push_back(1);
  }
  SvmClassifier svm(d, 1.0, 1.0);
  CHECK(svm.Predict(std::vector<double>{-3.0}) == 0);
  CHECK(svm.Predict(std::vector<double>{3.0}) == 1);
}

TEST_CASE("constant features fall back to the majority class with a warning") {
  Dataset d;
  for (int i = 0; i < 9; ++i) {
    d.x.push_back({1.0, 1.0});
    d.y.push_back(i < 5 ? 2 : i % 2);
  }
  for (ModelKind kind : kModelKinds) {
    ModelSpec ms;
    ms.kind = kind;
    std::vector<std::string> warnings;
    auto model = Train(d, ms, &warnings);
    CHECK(warnings.size() == 1);
    CHECK(model->Predict(std::vector<double>{0.0, 0.0}) == 2);
  }
}

TEST_CASE("training input is validated") {
  ModelSpec ms;
  CHECK_THROWS_AS(Train(Dataset{}, ms), DataError);
  Dataset one{{{1.0}, {2.0}}, {1, 1}};
  CHECK_THROWS_AS(Train(one, ms), DataError);
  Dataset bad{{{1.0}, {std::nan("")}}, {0, 1}};
  CHECK_THROWS_AS(Train(bad, ms), DataError);
  Dataset range{{{1.0}, {2.0}}, {0, 5}};
  CHECK_THROWS_AS(Train(range, ms), DataError);
}

TEST_CASE("grid cells share one split and report a confusion matrix") {
  LabeledMatrix m = BlobMatrix(40, 6.0, 1);
  GridOptions opts;
  opts.seed = 7;
  opts.model.forest_trees = 20;
  GridRow row = EvaluateCase(m, "all", "", opts);
  REQUIRE(row.cells.size() == 5);
  for (const auto &c : row.cells) {
    REQUIRE(c.accuracy.has_value());
    CHECK(*c.accuracy >= 90.0);
    CHECK(c.n_train == 84);
    CHECK(c.n_test == 36);
    int total = 0;
    for (auto &r : c.confusion)
      for (int v : r) total += v;
    CHECK(total == 36);
  }
  CHECK(EvaluateCase(m, "all", "", opts) == row);
  GridRow day = EvaluateCase(m, "day-2", "", opts);
  CHECK(day.cells[0].n_train + day.cells[0].n_test == 40);
}

TEST_CASE("grid reports null cells with a reason") {
  LabeledMatrix m = BlobMatrix(5, 6.0, 1);
  LabeledMatrix only_day1 = m.Subset({0, 3, 6, 9, 12});
  GridOptions opts;
  auto empty = EvaluateCase(only_day1, "day-2", "", opts);
  CHECK_FALSE(empty.cells[0].accuracy.has_value());
  CHECK(empty.cells[0].note == "empty case subset");
  LabeledMatrix mono;
  mono.columns = {"x"};
  for (int i = 0; i < 4; ++i)
    mono.AddRow({double(i)}, corpus::Label::kBasic, {"p" + std::to_string(i), 1, 1});
  CHECK(EvaluateCase(mono, "all", "", opts).cells[0].note ==
        "fewer than two classes in case subset");
}

TEST_CASE("leakage canary: held-out rows never shape the model") {
  // Test rows get a wild outlier column. With training-only scaling the grid
  // must match a model built from the training rows alone.
  LabeledMatrix m = BlobMatrix(30, 3.0, 11);
  GridOptions opts;
  opts.seed = 21;
  opts.model.forest_trees = 10;
  const uint64_t split_seed = CellSplitSeed(opts.seed, "canary", "all");
  SplitSpec spec;
  spec.seed = split_seed;
  const SplitIndices split = Split(m.data.y, spec);
  for (auto i : split.test) m.data.x[i][1] += 1e6;
  GridRow row = EvaluateCase(m, "all", "canary", opts);

  Dataset train = m.data.Subset(split.train), test = m.data.Subset(split.test);
  Standardizer s;
  s.Fit(train.x);
  s.TransformInPlace(&train.x);
  s.TransformInPlace(&test.x);
  for (std::size_t k = 0; k < kModelKinds.size(); ++k) {
    ModelSpec ms = opts.model;
    ms.kind = kModelKinds[k];
    ms.seed = CellModelSeed(split_seed, ms.kind);
    auto model = Train(train, ms);
    std::array<std::array<int, 3>, 3> confusion{};
    for (std::size_t i = 0; i < test.size(); ++i)
      ++confusion[test.y[i]][model->Predict(test.x[i])];
    CHECK(row.cells[k].confusion == confusion);
  }
}

TEST_CASE("noise features with random labels stay near chance") {
  double total = 0;
  int cells = 0;
  for (uint64_t seed = 0; seed < 5; ++seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    LabeledMatrix m;
    m.columns = {"a", "b", "c", "d"};
    for (int i = 0; i < 90; ++i)
      m.AddRow({g(rng), g(rng), g(rng), g(rng)}, corpus::LabelAt(i % 3),
               {"p" + std::to_string(i), 1, 1});
    GridOptions opts;
    opts.seed = seed;
    opts.model.forest_trees = 20;
    for (const auto &c : EvaluateCase(m, "all", "", opts).cells) {
      total += *c.accuracy;
      ++cells;
    }
  }
  CHECK(total / cells < 50.0);
}

TEST_CASE("report json round trip and rendering") {
  EvalReport r;
  r.table = "table2";
  r.title = "Lexical";
  r.criterion = "lexical_richness";
  r.features = "lexical";
  r.mode = "utterance";
  r.seed = 0xFFFFFFFFFFFFFFFFULL;
  r.config_hash = "0123456789abcdef";
  for (ModelKind k : kModelKinds) r.classifiers.push_back(ModelKindName(k));
  GridRow row = NullRow("", "all", "empty case subset");
  row.cells[1].accuracy = 87.5;
  row.cells[1].n_train = 7;
  row.cells[1].n_test = 8;
  row.cells[1].confusion[2][0] = 3;
  row.cells[1].note.clear();
  r.rows.push_back(row);
  r.notes = {"note one"};
  EvalReport back = ReportFromJson(ReportToJson(r));
  CHECK(back == r);
  CHECK(ReportToJson(back) == ReportToJson(r));
  const std::string text = RenderReport(r);
  CHECK(text.find("87.50") != std::string::npos);
  CHECK(text.find("Logistic Regression") != std::string::npos);
  CHECK(ConfusionCsv(r).find("all") != std::string::npos);
  CHECK_THROWS_AS(ReportFromJson("{\"table\": 3}"), DataError);
  CHECK_THROWS_AS(ReportFromJson("[]"), DataError);
}

}
