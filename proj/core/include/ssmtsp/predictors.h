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

// Distance predictors: learned models that read the search trace
// (averaging benchmark, linear regression, multilayer perceptron) and
// breadth-first-search heuristics that read the graph.

#ifndef SSMTSP_PREDICTORS_H_
#define SSMTSP_PREDICTORS_H_

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ssmtsp/instance.h"
#include "ssmtsp/mlp.h"
#include "ssmtsp/predictor.h"
#include "ssmtsp/sssp.h"

namespace ssmtsp {

// Flattened trace (d_1, B_1, ..., d_i0, B_i0) with unset bounds as 0.
using FeatureVector = std::vector<double>;

// Throws std::invalid_argument unless trace.size() == i0.
FeatureVector TraceToFeatures(std::span<const TracePoint> trace, int i0);

// Per-feature standardisation fitted on training data. Standard deviations
// are population (divide by N); features with deviation below 1e-12 get 1.
class Normalizer {
 public:
  Normalizer() = default;
  Normalizer(std::vector<double> mean, std::vector<double> stddev);

  // Throws std::invalid_argument for fewer than 2 samples or ragged input.
  static Normalizer Fit(std::span<const FeatureVector> samples);

  FeatureVector Apply(std::span<const double> features) const;
  FeatureVector Invert(std::span<const double> normalized) const;

  const std::vector<double>& mean() const { return mean_; }
  const std::vector<double>& stddev() const { return stddev_; }
  std::size_t dimension() const { return mean_.size(); }

 private:
  std::vector<double> mean_;
  std::vector<double> stddev_;
};

// A predictor trained on traces. PredictFeatures takes raw (unnormalised)
// features; normalisation happens inside.
class LearnedPredictor : public Predictor {
 public:
  explicit LearnedPredictor(int i0) : i0_(i0) {}

  double Predict(std::span<const TracePoint> trace) const final {
    return PredictFeatures(TraceToFeatures(trace, i0_));
  }
  virtual double PredictFeatures(std::span<const double> features) const = 0;

  int i0() const { return i0_; }

 private:
  int i0_;
};

// Predicts the mean training target for every trace.
class AveragePredictor final : public LearnedPredictor {
 public:
  AveragePredictor(int i0, double mean) : LearnedPredictor(i0), mean_(mean) {}
  // Throws std::invalid_argument on an empty target set.
  static AveragePredictor Fit(int i0, std::span<const double> targets);

  double PredictFeatures(std::span<const double>) const override {
    return mean_;
  }
  std::string kind() const override { return "avg"; }
  double mean() const { return mean_; }

 private:
  double mean_;
};

class LinearRegressionPredictor final : public LearnedPredictor {
 public:
  LinearRegressionPredictor(int i0, Normalizer normalizer,
                            std::vector<double> coefficients,
                            double intercept);

  // Least squares on normalised features through the ridge-damped normal
  // equations (the intercept is not damped). Needs at least 2*i0+1 samples.
  static LinearRegressionPredictor Fit(int i0,
                                       std::span<const FeatureVector> features,
                                       std::span<const double> targets,
                                       double ridge = 1e-8);

  double PredictFeatures(std::span<const double> features) const override;
  std::string kind() const override { return "linreg"; }

  const Normalizer& normalizer() const { return normalizer_; }
  const std::vector<double>& coefficients() const { return coefficients_; }
  double intercept() const { return intercept_; }

 private:
  Normalizer normalizer_;
  std::vector<double> coefficients_;
  double intercept_;
};

class MlpPredictor final : public LearnedPredictor {
 public:
  MlpPredictor(int i0, Normalizer normalizer, Mlp mlp);

  // Fits the normaliser, then trains the network on normalised features.
  static MlpPredictor Fit(int i0, std::span<const FeatureVector> features,
                          std::span<const double> targets,
                          const MlpTrainConfig& config);

  double PredictFeatures(std::span<const double> features) const override {
    return mlp_.Forward(normalizer_.Apply(features));
  }
  std::string kind() const override { return "mlp"; }

  const Normalizer& normalizer() const { return normalizer_; }
  const Mlp& mlp() const { return mlp_; }

 private:
  Normalizer normalizer_;
  Mlp mlp_;
};

// A minimum-hop path from the source to a target. BFS expands nodes in FIFO
// order, scanning arcs by increasing head id; the first target dequeued
// wins and its path follows first-discovery parents.
struct BfsPath {
  bool found = false;
  int hops = 0;
  double weight = 0.0;          // sum of the actual weights on the path
  std::vector<NodeId> nodes;    // source first
};
BfsPath FindBfsPath(const Instance& inst);

// hops * mu_w (analytic mean weight 0.5 for U[0,1] weights by default).
// kInf if no target is reachable.
class BfsPredictor final : public Predictor {
 public:
  explicit BfsPredictor(const Instance& inst, double mean_weight = 0.5);

  double Predict(std::span<const TracePoint>) const override {
    return value_;
  }
  std::string kind() const override { return "bfs"; }
  int hops() const { return hops_; }

 private:
  int hops_ = 0;
  double value_;
};

// Sum of the actual weights on the BFS path; never below the true distance.
class WeightedBfsPredictor final : public Predictor {
 public:
  explicit WeightedBfsPredictor(const Instance& inst);

  double Predict(std::span<const TracePoint>) const override {
    return value_;
  }
  std::string kind() const override { return "wbfs"; }

 private:
  double value_;
};

// JSON document {kind, i0, normalizer{mean[], std[]}, ...params}. Doubles
// are written in shortest round-trip form, so reloading is bit-exact.
std::string SavePredictorJson(const LearnedPredictor& predictor);
std::unique_ptr<LearnedPredictor> LoadPredictorJson(const std::string& json);
void SavePredictorFile(const LearnedPredictor& predictor,
                       const std::string& path);
std::unique_ptr<LearnedPredictor> LoadPredictorFile(const std::string& path);

}  // namespace ssmtsp

#endif  // SSMTSP_PREDICTORS_H_
