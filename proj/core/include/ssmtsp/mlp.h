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

// A small fully connected regression network: rectifier hidden layers, an
// affine output unit, trained on mean absolute error with mini-batches.

#ifndef SSMTSP_MLP_H_
#define SSMTSP_MLP_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace ssmtsp {

struct DenseLayer {
  int inputs = 0;
  int outputs = 0;
  std::vector<double> weights;  // outputs x inputs, row-major
  std::vector<double> bias;     // outputs
};

class Mlp {
 public:
  Mlp() = default;
  // Layer widths including input and output, e.g. {20, 16, 16, 1}. Weights
  // are drawn uniformly from [-a, a] with a = sqrt(6 / (fan_in + fan_out));
  // biases start at zero.
  Mlp(const std::vector<int>& widths, std::uint64_t seed);
  explicit Mlp(std::vector<DenseLayer> layers);

  double Forward(std::span<const double> input) const;

  const std::vector<DenseLayer>& layers() const { return layers_; }
  std::vector<int> widths() const;
  std::size_t num_parameters() const;

  // All weights and biases, layer by layer (weights first, then bias).
  std::vector<double> Parameters() const;
  void SetParameters(std::span<const double> params);

 private:
  std::vector<DenseLayer> layers_;
};

// Mean absolute error over the rows listed in `batch`. If `gradient` is
// non-null it receives d(loss)/d(params) in Parameters() order. The
// subgradient of |r| at r = 0 is taken to be 0, as is the rectifier's
// derivative at 0.
double MaeLossAndGradient(const Mlp& mlp,
                          const std::vector<std::vector<double>>& inputs,
                          std::span<const double> targets,
                          std::span<const std::size_t> batch,
                          std::vector<double>* gradient);

enum class Optimizer { kSgd, kAdam };

std::string ToString(Optimizer optimizer);
Optimizer ParseOptimizer(const std::string& name);

struct MlpTrainConfig {
  int hidden = 16;
  int epochs = 47;
  int batch = 256;
  double learning_rate = 1e-3;
  Optimizer optimizer = Optimizer::kAdam;
  std::uint64_t seed = 0;
};

// Trains a [d, h, h, 1] network. Rows are reshuffled every epoch.
// `on_epoch(epoch, mlp)` runs after each epoch (1-based). Throws
// std::runtime_error if the loss stops being finite.
Mlp TrainMlp(const std::vector<std::vector<double>>& inputs,
             std::span<const double> targets, const MlpTrainConfig& config,
             const std::function<void(int, const Mlp&)>& on_epoch = {});

}  // namespace ssmtsp

#endif  // SSMTSP_MLP_H_
