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

#include <Eigen/Dense>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <nlohmann/json.hpp>

namespace ssmtsp {

FeatureVector TraceToFeatures(std::span<const TracePoint> trace, int i0) {
  if (trace.size() != static_cast<std::size_t>(i0)) {
    throw std::invalid_argument("trace has " + std::to_string(trace.size()) +
                                " entries, expected " + std::to_string(i0));
  }
  FeatureVector features;
  features.reserve(2 * trace.size());
  for (const TracePoint& point : trace) {
    features.push_back(point.dist);
    features.push_back(point.bound == kInf ? 0.0 : point.bound);
  }
  return features;
}

Normalizer::Normalizer(std::vector<double> mean, std::vector<double> stddev)
    : mean_(std::move(mean)), stddev_(std::move(stddev)) {
  if (mean_.size() != stddev_.size()) {
    throw std::invalid_argument("normalizer mean/std sizes differ");
  }
  for (const double s : stddev_) {
    if (!(s > 0.0)) throw std::invalid_argument("normalizer std must be > 0");
  }
}

Normalizer Normalizer::Fit(std::span<const FeatureVector> samples) {
  if (samples.size() < 2) {
    throw std::invalid_argument("normalizer needs at least 2 samples");
  }
  const std::size_t dim = samples.front().size();
  std::vector<double> mean(dim, 0.0), stddev(dim, 0.0);
  for (const FeatureVector& x : samples) {
    if (x.size() != dim) throw std::invalid_argument("ragged feature vectors");
    for (std::size_t j = 0; j < dim; ++j) mean[j] += x[j];
  }
  const double count = static_cast<double>(samples.size());
  for (double& m : mean) m /= count;
  for (const FeatureVector& x : samples) {
    for (std::size_t j = 0; j < dim; ++j) {
      stddev[j] += (x[j] - mean[j]) * (x[j] - mean[j]);
    }
  }
  for (double& s : stddev) {
    s = std::sqrt(s / count);
    if (s < 1e-12) s = 1.0;
  }
  return Normalizer(std::move(mean), std::move(stddev));
}

FeatureVector Normalizer::Apply(std::span<const double> features) const {
  if (features.size() != mean_.size()) {
    throw std::invalid_argument("feature length " +
                                std::to_string(features.size()) +
                                " does not match normalizer dimension " +
                                std::to_string(mean_.size()));
  }
  FeatureVector out(features.size());
  for (std::size_t j = 0; j < features.size(); ++j) {
    out[j] = (features[j] - mean_[j]) / stddev_[j];
  }
  return out;
}

FeatureVector Normalizer::Invert(std::span<const double> normalized) const {
  FeatureVector out(normalized.size());
  for (std::size_t j = 0; j < normalized.size(); ++j) {
    out[j] = normalized[j] * stddev_[j] + mean_[j];
  }
  return out;
}

AveragePredictor AveragePredictor::Fit(int i0,
                                       std::span<const double> targets) {
  if (targets.empty()) throw std::invalid_argument("no training targets");
  const double sum = std::accumulate(targets.begin(), targets.end(), 0.0);
  return AveragePredictor(i0, sum / static_cast<double>(targets.size()));
}

LinearRegressionPredictor::LinearRegressionPredictor(
    int i0, Normalizer normalizer, std::vector<double> coefficients,
    double intercept)
    : LearnedPredictor(i0),
      normalizer_(std::move(normalizer)),
      coefficients_(std::move(coefficients)),
      intercept_(intercept) {
  if (coefficients_.size() != normalizer_.dimension()) {
    throw std::invalid_argument("coefficient count does not match features");
  }
}

LinearRegressionPredictor LinearRegressionPredictor::Fit(
    int i0, std::span<const FeatureVector> features,
    std::span<const double> targets, double ridge) {
  if (features.size() != targets.size()) {
    throw std::invalid_argument("feature/target counts differ");
  }
  if (features.empty() || features.size() < features.front().size() + 1) {
    throw std::invalid_argument("linear regression needs at least d+1 samples");
  }
  Normalizer normalizer = Normalizer::Fit(features);
  const auto dim = static_cast<Eigen::Index>(normalizer.dimension());
  // Column 0 is the intercept.
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(dim + 1, dim + 1);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(dim + 1);
  Eigen::VectorXd row(dim + 1);
  for (std::size_t k = 0; k < features.size(); ++k) {
    const FeatureVector z = normalizer.Apply(features[k]);
    row(0) = 1.0;
    for (Eigen::Index j = 0; j < dim; ++j) row(j + 1) = z[j];
    gram.selfadjointView<Eigen::Lower>().rankUpdate(row);
    rhs += targets[k] * row;
  }
  gram = gram.selfadjointView<Eigen::Lower>();
  for (Eigen::Index j = 1; j <= dim; ++j) gram(j, j) += ridge;
  const Eigen::VectorXd solution = gram.ldlt().solve(rhs);
  std::vector<double> coefficients(solution.data() + 1,
                                   solution.data() + dim + 1);
  return LinearRegressionPredictor(i0, std::move(normalizer),
                                   std::move(coefficients), solution(0));
}

double LinearRegressionPredictor::PredictFeatures(
    std::span<const double> features) const {
  const FeatureVector z = normalizer_.Apply(features);
  double y = intercept_;
  for (std::size_t j = 0; j < z.size(); ++j) y += coefficients_[j] * z[j];
  return y;
}

MlpPredictor::MlpPredictor(int i0, Normalizer normalizer, Mlp mlp)
    : LearnedPredictor(i0),
      normalizer_(std::move(normalizer)),
      mlp_(std::move(mlp)) {
  if (mlp_.layers().front().inputs !=
      static_cast<int>(normalizer_.dimension())) {
    throw std::invalid_argument("network input width does not match features");
  }
}

MlpPredictor MlpPredictor::Fit(int i0, std::span<const FeatureVector> features,
                               std::span<const double> targets,
                               const MlpTrainConfig& config) {
  Normalizer normalizer = Normalizer::Fit(features);
  std::vector<std::vector<double>> inputs;
  inputs.reserve(features.size());
  for (const FeatureVector& x : features) inputs.push_back(normalizer.Apply(x));
  Mlp mlp = TrainMlp(inputs, targets, config);
  return MlpPredictor(i0, std::move(normalizer), std::move(mlp));
}

BfsPath FindBfsPath(const Instance& inst) {
  const std::size_t n = inst.num_nodes();
  constexpr NodeId kNone = static_cast<NodeId>(-1);
  std::vector<NodeId> parent(n, kNone);
  std::vector<double> parent_weight(n, 0.0);
  std::vector<bool> visited(n, false);
  std::vector<NodeId> fifo{inst.source()};
  visited[inst.source()] = true;
  for (std::size_t head = 0; head < fifo.size(); ++head) {
    const NodeId u = fifo[head];
    if (inst.IsTarget(u)) {
      BfsPath path;
      path.found = true;
      for (NodeId v = u; v != kNone; v = parent[v]) path.nodes.push_back(v);
      std::reverse(path.nodes.begin(), path.nodes.end());
      // Source-first, as the search accumulates labels, so a shortest BFS
      // path reproduces D bit for bit.
      for (std::size_t i = 1; i < path.nodes.size(); ++i) {
        path.weight += parent_weight[path.nodes[i]];
      }
      path.hops = static_cast<int>(path.nodes.size()) - 1;
      return path;
    }
    for (const Arc& arc : inst.OutArcs(u)) {
      if (visited[arc.head]) continue;
      visited[arc.head] = true;
      parent[arc.head] = u;
      parent_weight[arc.head] = arc.weight;
      fifo.push_back(arc.head);
    }
  }
  return {};
}

BfsPredictor::BfsPredictor(const Instance& inst, double mean_weight) {
  const BfsPath path = FindBfsPath(inst);
  hops_ = path.hops;
  value_ = path.found ? path.hops * mean_weight : kInf;
}

WeightedBfsPredictor::WeightedBfsPredictor(const Instance& inst) {
  const BfsPath path = FindBfsPath(inst);
  value_ = path.found ? path.weight : kInf;
}

namespace {

using nlohmann::json;

json NormalizerToJson(const Normalizer& normalizer) {
  return {{"mean", normalizer.mean()}, {"std", normalizer.stddev()}};
}

Normalizer NormalizerFromJson(const json& doc) {
  return Normalizer(doc.at("mean").get<std::vector<double>>(),
                    doc.at("std").get<std::vector<double>>());
}

}  // namespace

std::string SavePredictorJson(const LearnedPredictor& predictor) {
  json doc;
  doc["kind"] = predictor.kind();
  doc["i0"] = predictor.i0();
  if (const auto* avg = dynamic_cast<const AveragePredictor*>(&predictor)) {
    doc["mean"] = avg->mean();
  } else if (const auto* lin =
                 dynamic_cast<const LinearRegressionPredictor*>(&predictor)) {
    doc["normalizer"] = NormalizerToJson(lin->normalizer());
    doc["coefficients"] = lin->coefficients();
    doc["intercept"] = lin->intercept();
  } else if (const auto* mlp = dynamic_cast<const MlpPredictor*>(&predictor)) {
    doc["normalizer"] = NormalizerToJson(mlp->normalizer());
    doc["activation"] = "relu";
    json layers = json::array();
    for (const DenseLayer& layer : mlp->mlp().layers()) {
      layers.push_back({{"inputs", layer.inputs},
                        {"outputs", layer.outputs},
                        {"weights", layer.weights},
                        {"bias", layer.bias}});
    }
    doc["layers"] = std::move(layers);
  } else {
    throw std::invalid_argument("cannot serialise predictor kind " +
                                predictor.kind());
  }
  return doc.dump(1);
}

std::unique_ptr<LearnedPredictor> LoadPredictorJson(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("model is not valid JSON: ") +
                                e.what());
  }
  try {
    const std::string kind = doc.at("kind").get<std::string>();
    const int i0 = doc.at("i0").get<int>();
    if (kind == "avg") {
      return std::make_unique<AveragePredictor>(i0,
                                                doc.at("mean").get<double>());
    }
    if (kind == "linreg") {
      return std::make_unique<LinearRegressionPredictor>(
          i0, NormalizerFromJson(doc.at("normalizer")),
          doc.at("coefficients").get<std::vector<double>>(),
          doc.at("intercept").get<double>());
    }
    if (kind == "mlp") {
      std::vector<DenseLayer> layers;
      for (const json& entry : doc.at("layers")) {
        DenseLayer layer;
        layer.inputs = entry.at("inputs").get<int>();
        layer.outputs = entry.at("outputs").get<int>();
        layer.weights = entry.at("weights").get<std::vector<double>>();
        layer.bias = entry.at("bias").get<std::vector<double>>();
        layers.push_back(std::move(layer));
      }
      return std::make_unique<MlpPredictor>(
          i0, NormalizerFromJson(doc.at("normalizer")), Mlp(std::move(layers)));
    }
    throw std::invalid_argument("unknown model kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed model document: ") +
                                e.what());
  }
}

void SavePredictorFile(const LearnedPredictor& predictor,
                       const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << SavePredictorJson(predictor) << '\n';
}

std::unique_ptr<LearnedPredictor> LoadPredictorFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return LoadPredictorJson(text.str());
}

}  // namespace ssmtsp
