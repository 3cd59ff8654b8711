// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ssmtsp/predictors.h"

#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "ssmtsp/instance.h"
#include "ssmtsp/sssp.h"
#include "ssmtsp/training.h"
#include "testing/oracles.h"

namespace ssmtsp {
namespace {

using testing::MakeGraph;

TEST(TraceToFeaturesTest, UnsetBoundsBecomeZero) {
  const Trace trace{{0.1, kInf}, {0.2, 0.9}};
  EXPECT_EQ(TraceToFeatures(trace, 2), (FeatureVector{0.1, 0.0, 0.2, 0.9}));
}

TEST(TraceToFeaturesTest, FiniteValuesCopied) {
  const Trace trace{{0.1, 0.8}, {0.2, 0.7}, {0.3, 0.6}};
  EXPECT_EQ(TraceToFeatures(trace, 3),
            (FeatureVector{0.1, 0.8, 0.2, 0.7, 0.3, 0.6}));
  EXPECT_THROW(TraceToFeatures(trace, 2), std::invalid_argument);
}

TEST(TraceToFeaturesTest, DefaultTraceLength) {
  for (const Instance& inst : GenerateAcceptedInstances({.seed = 40}, 20)) {
    const PruningResult r = DijkstraPruning(inst, 10);
    ASSERT_TRUE(r.trace);
    const FeatureVector x = TraceToFeatures(*r.trace, 10);
    EXPECT_EQ(x.size(), 20u);
    for (const double v : x) EXPECT_TRUE(std::isfinite(v));
  }
}

TEST(NormalizerTest, StandardisesTrainingSet) {
  std::mt19937_64 rng(1);
  std::vector<FeatureVector> xs;
  for (int i = 0; i < 200; ++i) {
    xs.push_back({std::normal_distribution<>(3, 2)(rng),
                  std::uniform_real_distribution<>(-1, 5)(rng), 7.0});
  }
  const Normalizer norm = Normalizer::Fit(xs);
  EXPECT_EQ(norm.stddev()[2], 1.0);
  std::vector<double> mean(3, 0.0), sq(3, 0.0);
  for (const auto& x : xs) {
    const FeatureVector z = norm.Apply(x);
    for (int j = 0; j < 3; ++j) {
      mean[j] += z[j] / xs.size();
      sq[j] += z[j] * z[j] / xs.size();
    }
    EXPECT_EQ(z[2], 0.0);
  }
  for (int j = 0; j < 2; ++j) {
    EXPECT_NEAR(mean[j], 0.0, 1e-9);
    EXPECT_NEAR(std::sqrt(sq[j] - mean[j] * mean[j]), 1.0, 1e-9);
  }
  const FeatureVector back = norm.Invert(norm.Apply(xs[5]));
  for (int j = 0; j < 3; ++j) EXPECT_NEAR(back[j], xs[5][j], 1e-12);
}

TEST(NormalizerTest, TestSplitIsNearlyCentred) {
  const Dataset train =
      BuildDataset(GenerateAcceptedInstances({.seed = 41}, 400), 10);
  const Dataset test =
      BuildDataset(GenerateAcceptedInstances({.seed = 42}, 400), 10);
  const Normalizer norm = Normalizer::Fit(train.features);
  std::vector<double> mean(20, 0.0);
  for (const auto& x : test.features) {
    const FeatureVector z = norm.Apply(x);
    for (int j = 0; j < 20; ++j) mean[j] += z[j] / test.size();
  }
  bool any_nonzero = false;
  for (int j = 0; j < 20; ++j) {
    EXPECT_LT(std::abs(mean[j]), 0.25) << "feature " << j;
    any_nonzero |= std::abs(mean[j]) > 1e-9;
  }
  EXPECT_TRUE(any_nonzero);
}

TEST(AveragePredictorTest, PredictsTargetMean) {
  const AveragePredictor avg = AveragePredictor::Fit(1, std::vector{0.4, 0.6});
  EXPECT_DOUBLE_EQ(avg.PredictFeatures(std::vector{9.0, 9.0}), 0.5);
  EXPECT_DOUBLE_EQ(avg.Predict(Trace{{0.1, kInf}}), 0.5);
}

TEST(LinearRegressionTest, RecoversExactPlane) {
  std::mt19937_64 rng(2);
  std::vector<FeatureVector> xs;
  std::vector<double> ys;
  for (int i = 0; i < 50; ++i) {
    const double a = std::uniform_real_distribution<>(-3, 3)(rng);
    const double b = std::uniform_real_distribution<>(0, 10)(rng);
    xs.push_back({a, b});
    ys.push_back(2 * a - 3 * b + 1);
  }
  const auto lr = LinearRegressionPredictor::Fit(1, xs, ys);
  // Coefficients live in normalised space; map them back.
  const auto& norm = lr.normalizer();
  const double w1 = lr.coefficients()[0] / norm.stddev()[0];
  const double w2 = lr.coefficients()[1] / norm.stddev()[1];
  const double b = lr.intercept() - w1 * norm.mean()[0] - w2 * norm.mean()[1];
  EXPECT_NEAR(w1, 2.0, 1e-6);
  EXPECT_NEAR(w2, -3.0, 1e-6);
  EXPECT_NEAR(b, 1.0, 1e-6);
  EXPECT_NEAR(lr.PredictFeatures(std::vector{0.5, 0.25}), 1.25, 1e-6);
}

TEST(LinearRegressionTest, MatchesSimpleRegressionClosedForm) {
  const std::vector<double> x{1, 2, 4, 5, 8}, y{1.2, 1.9, 4.4, 4.8, 8.3};
  double mx = 0, my = 0;
  for (int i = 0; i < 5; ++i) {
    mx += x[i] / 5;
    my += y[i] / 5;
  }
  double sxy = 0, sxx = 0;
  for (int i = 0; i < 5; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  const double slope = sxy / sxx, intercept = my - slope * mx;
  // Second feature is constant, so only the first one carries signal.
  std::vector<FeatureVector> xs;
  for (const double v : x) xs.push_back({v, 3.0});
  const auto lr = LinearRegressionPredictor::Fit(1, xs, y);
  for (const double v : {0.0, 1.0, 3.5, 10.0}) {
    EXPECT_NEAR(lr.PredictFeatures(std::vector{v, 3.0}), slope * v + intercept,
                1e-7);
  }
}

TEST(LinearRegressionTest, NeedsEnoughSamples) {
  std::vector<FeatureVector> xs{{1, 2}, {2, 1}};
  EXPECT_THROW(LinearRegressionPredictor::Fit(1, xs, std::vector{1.0, 2.0}),
               std::invalid_argument);
}

TEST(BfsPredictorTest, TwoHopPath) {
  const Instance inst = MakeGraph(3, {{0, 1, 0.9}, {1, 2, 0.8}}, {2});
  const BfsPredictor bfs(inst);
  EXPECT_EQ(bfs.hops(), 2);
  EXPECT_DOUBLE_EQ(bfs.Predict({}), 1.0);
  const BfsPath path = FindBfsPath(inst);
  EXPECT_EQ(path.nodes, (std::vector<NodeId>{0, 1, 2}));
  EXPECT_DOUBLE_EQ(path.weight, 0.9 + 0.8);
}

TEST(BfsPredictorTest, PrefersFewerHopsOverLighterPath) {
  const Instance inst = MakeGraph(
      4, {{0, 1, 0.1}, {1, 2, 0.1}, {2, 3, 0.1}, {0, 3, 0.9}}, {3});
  EXPECT_EQ(FindBfsPath(inst).hops, 1);
  EXPECT_DOUBLE_EQ(WeightedBfsPredictor(inst).Predict({}), 0.9);
}

TEST(BfsPredictorTest, UnreachableGivesInfinity) {
  const Instance inst = MakeGraph(3, {{0, 1, 0.9}}, {2});
  EXPECT_FALSE(FindBfsPath(inst).found);
  EXPECT_EQ(BfsPredictor(inst).Predict({}), kInf);
  EXPECT_EQ(WeightedBfsPredictor(inst).Predict({}), kInf);
}

TEST(WeightedBfsPredictorTest, SinglePathIsExact) {
  const Instance inst =
      MakeGraph(4, {{0, 1, 0.3}, {1, 2, 0.2}, {2, 3, 0.4}}, {3});
  EXPECT_EQ(WeightedBfsPredictor(inst).Predict({}), Dijkstra(inst).distance);
}

TEST(WeightedBfsPredictorTest, NeverBelowDistance) {
  for (const Instance& inst : GenerateAcceptedInstances({.seed = 43}, 500)) {
    EXPECT_GE(WeightedBfsPredictor(inst).Predict({}), Dijkstra(inst).distance);
  }
}

TEST(PredictorJsonTest, RoundTripsAreBitExact) {
  const Dataset data =
      BuildDataset(GenerateAcceptedInstances({.seed = 44}, 200), 10);
  const AveragePredictor avg = AveragePredictor::Fit(10, data.targets);
  const auto lr = LinearRegressionPredictor::Fit(10, data.features, data.targets);
  const auto mlp = MlpPredictor::Fit(10, data.features, data.targets,
                                     {.hidden = 8, .epochs = 3, .seed = 1});
  for (const LearnedPredictor* p :
       std::vector<const LearnedPredictor*>{&avg, &lr, &mlp}) {
    const std::unique_ptr<LearnedPredictor> back =
        LoadPredictorJson(SavePredictorJson(*p));
    EXPECT_EQ(back->kind(), p->kind());
    EXPECT_EQ(back->i0(), 10);
    for (const auto& x : data.features) {
      ASSERT_EQ(back->PredictFeatures(x), p->PredictFeatures(x));
    }
  }
}

TEST(PredictorJsonTest, RejectsBadDocuments) {
  for (const std::string doc :
       {"", "[]", "{\"kind\":\"tree\",\"i0\":10}", "{\"kind\":\"avg\"}",
        "{\"kind\":\"linreg\",\"i0\":1,\"normalizer\":{\"mean\":[0],"
        "\"std\":[1]},\"coefficients\":[1,2],\"intercept\":0}"}) {
    EXPECT_THROW(LoadPredictorJson(doc), std::invalid_argument) << doc;
  }
}

}  // namespace
}  // namespace ssmtsp
