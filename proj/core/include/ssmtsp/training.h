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

// Datasets of (trace features, distance) samples, k-fold model selection
// for the network width and epoch count, and error metrics.

#ifndef SSMTSP_TRAINING_H_
#define SSMTSP_TRAINING_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ssmtsp/instance.h"
#include "ssmtsp/mlp.h"
#include "ssmtsp/predictors.h"

namespace ssmtsp {

enum class Split { kTrain, kVal, kTest };

struct Dataset {
  int i0 = 10;
  Split split = Split::kTrain;
  std::vector<FeatureVector> features;  // raw, 2 * i0 columns
  std::vector<double> targets;          // exact target distance D

  std::size_t size() const { return targets.size(); }
};

// One sample per instance from a pruning run: its first i0 trace pairs and
// the distance it returns. Throws std::invalid_argument if some run settles
// fewer than i0 non-target nodes or reaches no target.
Dataset BuildDataset(std::span<const Instance> instances, int i0,
                     Split split = Split::kTrain);

// CSV: f0..f{2*i0-1},target after a "#schema=1" line.
void WriteDatasetCsv(const Dataset& dataset, std::ostream& out);
Dataset ReadDatasetCsv(std::istream& in, Split split = Split::kTrain);

struct Metrics {
  double mae = 0.0;
  double mape = 0.0;
  std::size_t mape_excluded = 0;  // samples with target 0
};

// mae = mean |yhat - y|, mape = mean |yhat - y| / y over samples with y != 0.
Metrics Evaluate(const LearnedPredictor& predictor, const Dataset& dataset);

struct KFoldConfig {
  int k = 4;
  std::vector<int> hidden_sizes{8, 16, 32, 64, 128};
  int max_epochs = 100;
  int batch = 256;
  double learning_rate = 1e-3;
  Optimizer optimizer = Optimizer::kAdam;
  std::uint64_t seed = 0;
};

struct CvReport {
  std::vector<int> hidden_sizes;
  // fold_mae[c][e]: validation MAE after epoch e+1 for hidden_sizes[c],
  // averaged over folds.
  std::vector<std::vector<double>> fold_mae;
  int selected_hidden = 0;
  int selected_epochs = 0;
};

// Rows held out by each fold: a seeded shuffle of 0..n-1 cut into k
// contiguous blocks. Throws unless 2 <= k <= n.
std::vector<std::vector<std::size_t>> KFoldAssignments(std::size_t n, int k,
                                                       std::uint64_t seed);

// Folds come from KFoldAssignments. For every width, each fold is held out
// in turn; the normaliser is fitted on the remaining folds. The (width, epochs) pair with the least fold-averaged
// validation MAE wins; ties go to the smaller width, then fewer epochs.
CvReport KFoldSelect(const Dataset& train, const KFoldConfig& config);

// CSV: h,epoch,fold_mae_mean after a "#schema=1" line.
void WriteCvReportCsv(const CvReport& report, std::ostream& out);

}  // namespace ssmtsp

#endif  // SSMTSP_TRAINING_H_
