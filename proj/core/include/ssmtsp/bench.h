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

// Side-by-side runs of every search variant on a common instance set, the
// alpha x beta sweep, and instance statistics.

#ifndef SSMTSP_BENCH_H_
#define SSMTSP_BENCH_H_

#include <array>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ssmtsp/instance.h"
#include "ssmtsp/predict.h"
#include "ssmtsp/predictor.h"
#include "ssmtsp/sssp.h"

namespace ssmtsp {

// Raised when two variants disagree on a distance.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Algorithm { kOracle, kDijkstra, kPrune, kSmart, kNaive, kBfs, kWbfs };
inline constexpr std::array<Algorithm, 7> kAllAlgorithms = {
    Algorithm::kOracle, Algorithm::kDijkstra, Algorithm::kPrune,
    Algorithm::kSmart,  Algorithm::kNaive,    Algorithm::kBfs,
    Algorithm::kWbfs};
std::string ToString(Algorithm algorithm);

struct MeanStats {
  double rm = 0, is = 0, dp = 0, inr = 0;
  double rrm1 = 0, rrm2 = 0, ris = 0, rdp = 0;
  double q = 0, trials = 0, cum_q = 0;
};
MeanStats Average(const std::vector<RunStats>& runs);

struct BenchRow {
  Algorithm algorithm;
  MeanStats mean;
  double cum_q_ratio = 0.0;  // mean cum_q over the oracle's mean cum_q
};

struct BenchReport {
  std::vector<BenchRow> rows;                  // in kAllAlgorithms order
  std::vector<std::vector<RunStats>> runs;     // [algorithm][instance]
  std::size_t instances = 0;

  const BenchRow& row(Algorithm algorithm) const {
    return rows[static_cast<std::size_t>(algorithm)];
  }
};

// Runs all seven variants on every instance. `predictor` drives smart and
// naive; bfs and wbfs use smart restarts with `config`'s alpha and beta.
// Throws ValidationError if any variant's distance differs from Dijkstra's.
BenchReport RunBench(const std::vector<Instance>& instances,
                     const Predictor& predictor, const PredictConfig& config,
                     int jobs = 1);

// Rows algorithm,rm,is,inr,dp,rrm1,rrm2,ris,rdp,q,trials,cum_q,cum_q_ratio.
void WriteBenchCsv(const BenchReport& report, std::ostream& out);

struct SweepCell {
  double alpha;
  double beta;
  double mean_q;
  double mean_cum_q;
  double mean_trials;
};
struct SweepReport {
  std::vector<double> alphas, betas;
  std::vector<SweepCell> cells;  // row-major: alpha outer, beta inner

  const SweepCell& at(std::size_t a, std::size_t b) const {
    return cells[a * betas.size() + b];
  }
};

// Smart-restart prediction for every (alpha, beta) pair.
SweepReport RunSweep(const std::vector<Instance>& instances,
                     const Predictor& predictor, int i0,
                     const std::vector<double>& alphas,
                     const std::vector<double>& betas, int jobs = 1);

// Matrix with one row per alpha and one column per beta; `field` is "q",
// "cum_q" or "trials".
void WriteSweepMatrixCsv(const SweepReport& report, const std::string& field,
                         std::ostream& out);

struct InstanceStatistics {
  std::size_t instances = 0;
  double mean_distance = 0, min_distance = 0, max_distance = 0;
  double mean_hops = 0;
  double mean_weight = 0;      // pooled over path edges: sum D / sum hops
  double mean_bfs_hops = 0;
  double mean_bfs_weight = 0;  // weight of the BFS path
};
InstanceStatistics ComputeStatistics(const std::vector<Instance>& instances);

}  // namespace ssmtsp

#endif  // SSMTSP_BENCH_H_
