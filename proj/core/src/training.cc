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

#include "ssmtsp/training.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ssmtsp/rng.h"
#include "ssmtsp/sssp.h"

namespace ssmtsp {

Dataset BuildDataset(std::span<const Instance> instances, int i0,
                     Split split) {
  Dataset dataset;
  dataset.i0 = i0;
  dataset.split = split;
  dataset.features.reserve(instances.size());
  dataset.targets.reserve(instances.size());
  for (std::size_t k = 0; k < instances.size(); ++k) {
    const PruningResult run = DijkstraPruning(instances[k], i0);
    if (!run.trace || run.distance == kInf) {
      throw std::invalid_argument(
          "instance " + std::to_string(k) + " (seed " +
          std::to_string(instances[k].meta().seed) +
          ") is not accepted: pruning run too short or no reachable target");
    }
    dataset.features.push_back(TraceToFeatures(*run.trace, i0));
    dataset.targets.push_back(run.distance);
  }
  return dataset;
}

void WriteDatasetCsv(const Dataset& dataset, std::ostream& out) {
  out << "#schema=1\n";
  for (int j = 0; j < 2 * dataset.i0; ++j) out << 'f' << j << ',';
  out << "target\n" << std::setprecision(17);
  for (std::size_t k = 0; k < dataset.size(); ++k) {
    for (const double x : dataset.features[k]) out << x << ',';
    out << dataset.targets[k] << '\n';
  }
}

Dataset ReadDatasetCsv(std::istream& in, Split split) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line[0] != '#') return true;
    }
    return false;
  };
  if (!next_line()) throw std::invalid_argument("dataset: missing header");
  const auto columns =
      static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) + 1;
  if (columns < 3 || columns % 2 == 0) {
    throw std::invalid_argument("dataset: expected 2*i0 feature columns plus target");
  }
  Dataset dataset;
  dataset.i0 = static_cast<int>((columns - 1) / 2);
  dataset.split = split;
  while (next_line()) {
    std::istringstream row(line);
    std::string cell;
    std::vector<double> values;
    while (std::getline(row, cell, ',')) {
      try {
        std::size_t used = 0;
        values.push_back(std::stod(cell, &used));
        if (used != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw std::invalid_argument("dataset line " + std::to_string(line_no) +
                                    ": bad number '" + cell + "'");
      }
    }
    if (values.size() != columns) {
      throw std::invalid_argument("dataset line " + std::to_string(line_no) +
                                  ": expected " + std::to_string(columns) +
                                  " columns");
    }
    dataset.targets.push_back(values.back());
    values.pop_back();
    dataset.features.push_back(std::move(values));
  }
  return dataset;
}

Metrics Evaluate(const LearnedPredictor& predictor, const Dataset& dataset) {
  if (dataset.size() == 0) throw std::invalid_argument("empty dataset");
  Metrics metrics;
  double abs_sum = 0.0, pct_sum = 0.0;
  std::size_t pct_count = 0;
  for (std::size_t k = 0; k < dataset.size(); ++k) {
    const double y = dataset.targets[k];
    const double error =
        std::abs(predictor.PredictFeatures(dataset.features[k]) - y);
    abs_sum += error;
    if (y == 0.0) {
      ++metrics.mape_excluded;
      continue;
    }
    pct_sum += error / std::abs(y);
    ++pct_count;
  }
  if (metrics.mape_excluded > 0) {
    std::cerr << "warning: " << metrics.mape_excluded
              << " sample(s) with zero target excluded from MAPE\n";
  }
  metrics.mae = abs_sum / static_cast<double>(dataset.size());
  metrics.mape = pct_count ? pct_sum / static_cast<double>(pct_count) : 0.0;
  return metrics;
}

std::vector<std::vector<std::size_t>> KFoldAssignments(std::size_t n, int k,
                                                       std::uint64_t seed) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (n < static_cast<std::size_t>(k)) {
    throw std::invalid_argument("fewer samples than folds");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  Xoshiro256StarStar rng(seed);
  Shuffle(order, rng);
  std::vector<std::vector<std::size_t>> folds(k);
  for (int f = 0; f < k; ++f) {
    const std::size_t begin = n * f / k, end = n * (f + 1) / k;
    folds[f].assign(order.begin() + begin, order.begin() + end);
  }
  return folds;
}

CvReport KFoldSelect(const Dataset& train, const KFoldConfig& config) {
  const std::size_t n = train.size();
  const std::vector<std::vector<std::size_t>> folds =
      KFoldAssignments(n, config.k, config.seed);

  CvReport report;
  report.hidden_sizes = config.hidden_sizes;
  std::sort(report.hidden_sizes.begin(), report.hidden_sizes.end());
  double best = kInf;
  for (const int hidden : report.hidden_sizes) {
    std::vector<double> curve(config.max_epochs, 0.0);
    for (int fold = 0; fold < config.k; ++fold) {
      std::vector<FeatureVector> fit_x, val_x;
      std::vector<double> fit_y, val_y;
      std::vector<std::uint8_t> held_out(n, 0);
      for (const std::size_t row : folds[fold]) held_out[row] = 1;
      for (std::size_t row = 0; row < n; ++row) {
        (held_out[row] ? val_x : fit_x).push_back(train.features[row]);
        (held_out[row] ? val_y : fit_y).push_back(train.targets[row]);
      }
      const Normalizer normalizer = Normalizer::Fit(fit_x);
      for (auto& x : fit_x) x = normalizer.Apply(x);
      for (auto& x : val_x) x = normalizer.Apply(x);
      std::vector<std::size_t> all_val(val_y.size());
      std::iota(all_val.begin(), all_val.end(), 0);

      MlpTrainConfig train_config;
      train_config.hidden = hidden;
      train_config.epochs = config.max_epochs;
      train_config.batch = config.batch;
      train_config.learning_rate = config.learning_rate;
      train_config.optimizer = config.optimizer;
      train_config.seed = DeriveSeed(config.seed, 1000 * hidden + fold);
      TrainMlp(fit_x, fit_y, train_config, [&](int epoch, const Mlp& mlp) {
        curve[epoch - 1] +=
            MaeLossAndGradient(mlp, val_x, val_y, all_val, nullptr) /
            config.k;
      });
    }
    for (int e = 0; e < config.max_epochs; ++e) {
      // Strict comparison keeps the smaller width and earlier epoch on ties.
      if (curve[e] < best) {
        best = curve[e];
        report.selected_hidden = hidden;
        report.selected_epochs = e + 1;
      }
    }
    report.fold_mae.push_back(std::move(curve));
  }
  return report;
}

void WriteCvReportCsv(const CvReport& report, std::ostream& out) {
  out << "#schema=1\nh,epoch,fold_mae_mean\n" << std::setprecision(17);
  for (std::size_t c = 0; c < report.hidden_sizes.size(); ++c) {
    for (std::size_t e = 0; e < report.fold_mae[c].size(); ++e) {
      out << report.hidden_sizes[c] << ',' << e + 1 << ','
          << report.fold_mae[c][e] << '\n';
    }
  }
}

}  // namespace ssmtsp
