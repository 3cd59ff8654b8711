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

#include "ssmtsp/mlp.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ssmtsp/rng.h"

namespace ssmtsp {

Mlp::Mlp(const std::vector<int>& widths, std::uint64_t seed) {
  if (widths.size() < 2) throw std::invalid_argument("need at least 2 widths");
  if (widths.back() != 1) {
    throw std::invalid_argument("output layer must have one unit");
  }
  Xoshiro256StarStar rng(seed);
  for (std::size_t l = 0; l + 1 < widths.size(); ++l) {
    DenseLayer layer;
    layer.inputs = widths[l];
    layer.outputs = widths[l + 1];
    if (layer.inputs < 1 || layer.outputs < 1) {
      throw std::invalid_argument("layer widths must be positive");
    }
    const double a = std::sqrt(6.0 / (layer.inputs + layer.outputs));
    layer.weights.resize(static_cast<std::size_t>(layer.inputs) *
                         layer.outputs);
    for (double& w : layer.weights) w = rng.Uniform(-a, a);
    layer.bias.assign(layer.outputs, 0.0);
    layers_.push_back(std::move(layer));
  }
}

Mlp::Mlp(std::vector<DenseLayer> layers) : layers_(std::move(layers)) {
  if (layers_.empty()) throw std::invalid_argument("network has no layers");
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    const DenseLayer& layer = layers_[l];
    if (layer.weights.size() !=
            static_cast<std::size_t>(layer.inputs) * layer.outputs ||
        layer.bias.size() != static_cast<std::size_t>(layer.outputs)) {
      throw std::invalid_argument("layer " + std::to_string(l) +
                                  " has inconsistent dimensions");
    }
    if (l > 0 && layers_[l - 1].outputs != layer.inputs) {
      throw std::invalid_argument("layer " + std::to_string(l) +
                                  " does not chain with its predecessor");
    }
  }
  if (layers_.back().outputs != 1) {
    throw std::invalid_argument("output layer must have one unit");
  }
}

double Mlp::Forward(std::span<const double> input) const {
  std::vector<double> current(input.begin(), input.end());
  std::vector<double> next;
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    const DenseLayer& layer = layers_[l];
    next.assign(layer.bias.begin(), layer.bias.end());
    for (int o = 0; o < layer.outputs; ++o) {
      const double* row = layer.weights.data() +
                          static_cast<std::size_t>(o) * layer.inputs;
      double sum = next[o];
      for (int i = 0; i < layer.inputs; ++i) sum += row[i] * current[i];
      next[o] = (l + 1 < layers_.size()) ? std::max(sum, 0.0) : sum;
    }
    current.swap(next);
  }
  return current[0];
}

std::vector<int> Mlp::widths() const {
  std::vector<int> widths;
  if (layers_.empty()) return widths;
  widths.push_back(layers_.front().inputs);
  for (const DenseLayer& layer : layers_) widths.push_back(layer.outputs);
  return widths;
}

std::size_t Mlp::num_parameters() const {
  std::size_t count = 0;
  for (const DenseLayer& layer : layers_) {
    count += layer.weights.size() + layer.bias.size();
  }
  return count;
}

std::vector<double> Mlp::Parameters() const {
  std::vector<double> params;
  params.reserve(num_parameters());
  for (const DenseLayer& layer : layers_) {
    params.insert(params.end(), layer.weights.begin(), layer.weights.end());
    params.insert(params.end(), layer.bias.begin(), layer.bias.end());
  }
  return params;
}

void Mlp::SetParameters(std::span<const double> params) {
  if (params.size() != num_parameters()) {
    throw std::invalid_argument("parameter count mismatch");
  }
  std::size_t at = 0;
  for (DenseLayer& layer : layers_) {
    for (double& w : layer.weights) w = params[at++];
    for (double& b : layer.bias) b = params[at++];
  }
}

double MaeLossAndGradient(const Mlp& mlp,
                          const std::vector<std::vector<double>>& inputs,
                          std::span<const double> targets,
                          std::span<const std::size_t> batch,
                          std::vector<double>* gradient) {
  const std::vector<DenseLayer>& layers = mlp.layers();
  const std::size_t depth = layers.size();
  if (gradient) gradient->assign(mlp.num_parameters(), 0.0);
  if (batch.empty()) return 0.0;

  // Offsets of each layer's block inside the flat gradient.
  std::vector<std::size_t> offset(depth);
  for (std::size_t l = 0, at = 0; l < depth; ++l) {
    offset[l] = at;
    at += layers[l].weights.size() + layers[l].bias.size();
  }

  const double scale = 1.0 / static_cast<double>(batch.size());
  std::vector<std::vector<double>> activation(depth + 1);
  std::vector<double> delta, previous_delta;
  double loss = 0.0;
  for (const std::size_t row : batch) {
    activation[0] = inputs[row];
    for (std::size_t l = 0; l < depth; ++l) {
      const DenseLayer& layer = layers[l];
      std::vector<double>& out = activation[l + 1];
      out.assign(layer.bias.begin(), layer.bias.end());
      for (int o = 0; o < layer.outputs; ++o) {
        const double* w = layer.weights.data() +
                          static_cast<std::size_t>(o) * layer.inputs;
        double sum = out[o];
        for (int i = 0; i < layer.inputs; ++i) sum += w[i] * activation[l][i];
        out[o] = (l + 1 < depth) ? std::max(sum, 0.0) : sum;
      }
    }
    const double residual = activation[depth][0] - targets[row];
    loss += std::abs(residual) * scale;
    if (!gradient || residual == 0.0) continue;

    delta.assign(1, (residual > 0.0 ? 1.0 : -1.0) * scale);
    for (std::size_t l = depth; l-- > 0;) {
      const DenseLayer& layer = layers[l];
      double* gw = gradient->data() + offset[l];
      double* gb = gw + layer.weights.size();
      const std::vector<double>& in = activation[l];
      for (int o = 0; o < layer.outputs; ++o) {
        if (delta[o] == 0.0) continue;
        double* gw_row = gw + static_cast<std::size_t>(o) * layer.inputs;
        for (int i = 0; i < layer.inputs; ++i) gw_row[i] += delta[o] * in[i];
        gb[o] += delta[o];
      }
      if (l == 0) break;
      previous_delta.assign(layer.inputs, 0.0);
      for (int o = 0; o < layer.outputs; ++o) {
        if (delta[o] == 0.0) continue;
        const double* w = layer.weights.data() +
                          static_cast<std::size_t>(o) * layer.inputs;
        for (int i = 0; i < layer.inputs; ++i) {
          previous_delta[i] += delta[o] * w[i];
        }
      }
      // Rectifier derivative: 1 where the unit was strictly active.
      for (int i = 0; i < layer.inputs; ++i) {
        if (!(in[i] > 0.0)) previous_delta[i] = 0.0;
      }
      delta.swap(previous_delta);
    }
  }
  return loss;
}

std::string ToString(Optimizer optimizer) {
  return optimizer == Optimizer::kSgd ? "sgd" : "adam";
}

Optimizer ParseOptimizer(const std::string& name) {
  if (name == "sgd") return Optimizer::kSgd;
  if (name == "adam") return Optimizer::kAdam;
  throw std::invalid_argument("unknown optimizer '" + name + "'");
}

Mlp TrainMlp(const std::vector<std::vector<double>>& inputs,
             std::span<const double> targets, const MlpTrainConfig& config,
             const std::function<void(int, const Mlp&)>& on_epoch) {
  if (inputs.empty() || inputs.size() != targets.size()) {
    throw std::invalid_argument("training set empty or sizes differ");
  }
  if (config.hidden < 1 || config.epochs < 1 || config.batch < 1) {
    throw std::invalid_argument("hidden, epochs and batch must be >= 1");
  }
  const int dim = static_cast<int>(inputs.front().size());
  Mlp mlp({dim, config.hidden, config.hidden, 1}, config.seed);
  Xoshiro256StarStar rng(DeriveSeed(config.seed, 1));

  std::vector<std::size_t> order(inputs.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> params = mlp.Parameters();
  std::vector<double> gradient;
  // Adam moments.
  constexpr double kBeta1 = 0.9, kBeta2 = 0.999, kEpsilon = 1e-7;
  std::vector<double> m(params.size(), 0.0), v(params.size(), 0.0);
  std::uint64_t step = 0;

  for (int epoch = 1; epoch <= config.epochs; ++epoch) {
    Shuffle(order, rng);
    for (std::size_t start = 0; start < order.size();
         start += static_cast<std::size_t>(config.batch)) {
      const std::size_t end =
          std::min(order.size(), start + static_cast<std::size_t>(config.batch));
      const std::span<const std::size_t> batch(order.data() + start,
                                               end - start);
      const double loss =
          MaeLossAndGradient(mlp, inputs, targets, batch, &gradient);
      if (!std::isfinite(loss)) {
        std::ostringstream msg;
        msg << "non-finite training loss at epoch " << epoch << ", batch "
            << start / config.batch << " (learning rate "
            << config.learning_rate << ")";
        throw std::runtime_error(msg.str());
      }
      ++step;
      if (config.optimizer == Optimizer::kSgd) {
        for (std::size_t p = 0; p < params.size(); ++p) {
          params[p] -= config.learning_rate * gradient[p];
        }
      } else {
        const double c1 = 1.0 - std::pow(kBeta1, static_cast<double>(step));
        const double c2 = 1.0 - std::pow(kBeta2, static_cast<double>(step));
        for (std::size_t p = 0; p < params.size(); ++p) {
          m[p] = kBeta1 * m[p] + (1.0 - kBeta1) * gradient[p];
          v[p] = kBeta2 * v[p] + (1.0 - kBeta2) * gradient[p] * gradient[p];
          params[p] -= config.learning_rate * (m[p] / c1) /
                       (std::sqrt(v[p] / c2) + kEpsilon);
        }
      }
      mlp.SetParameters(params);
    }
    if (on_epoch) on_epoch(epoch, mlp);
  }
  return mlp;
}

}  // namespace ssmtsp
