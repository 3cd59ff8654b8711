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

#include "ssmtsp/bounds.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/math/special_functions/gamma.hpp>

#include "ssmtsp/predict.h"
#include "ssmtsp/predictor.h"
#include "ssmtsp/rng.h"
#include "ssmtsp/sssp.h"

namespace ssmtsp {
namespace {

constexpr int kUniformityBins = 10;
constexpr std::uint64_t kMinPooledEdges = 30;

std::uint64_t PairKey(NodeId tail, NodeId head) {
  return (static_cast<std::uint64_t>(tail) << 32) | head;
}

double Mean(const std::vector<std::uint64_t>& values) {
  if (values.empty()) return 0.0;
  double sum = 0.0;
  for (const auto v : values) sum += static_cast<double>(v);
  return sum / static_cast<double>(values.size());
}

}  // namespace

void BoundsParams::Validate() const {
  if (!(eps > 0.0) || !(gamma > 1.0) || gamma * eps > 1.0 + 1e-12) {
    throw std::invalid_argument("need eps > 0 and 1 < gamma <= 1/eps");
  }
}

std::vector<EdgeRef> IdentifyLTheta(const Instance& inst,
                                    std::span<const double> dist,
                                    double theta, double distance) {
  if (dist.size() != inst.num_nodes()) {
    throw std::invalid_argument("distance vector has the wrong length");
  }
  std::vector<EdgeRef> edges;
  for (NodeId u = 0; u < inst.num_nodes(); ++u) {
    const double du = dist[u];
    if (!(du >= theta && du <= distance) || inst.IsTarget(u)) continue;
    for (const Arc& arc : inst.OutArcs(u)) {
      if (du + arc.weight > distance) edges.push_back({u, arc.head, arc.weight});
    }
  }
  return edges;
}

Lemma1Report Lemma1MonteCarlo(const GenParams& params,
                              const BoundsParams& bounds, int runs) {
  bounds.Validate();
  if (runs < 1) throw std::invalid_argument("runs must be positive");
  const std::vector<Instance> instances =
      GenerateAcceptedInstances(params, static_cast<std::size_t>(runs));

  Lemma1Report report;
  report.runs = static_cast<std::uint64_t>(runs);
  report.bound = 1.0 - 1.0 / bounds.gamma;
  std::array<std::uint64_t, kUniformityBins> bins{};
  const double chernoff_floor =
      8.0 * std::log(static_cast<double>(params.n));

  for (const Instance& inst : instances) {
    const std::vector<double> dist = BellmanFord(inst);
    const double distance = MinTargetDistance(inst, dist);
    const std::vector<EdgeRef> relevant =
        IdentifyLTheta(inst, dist, bounds.Theta(distance), distance);

    const ConstantPredictor oracle(distance + bounds.eps);
    PredictionSearch search(inst, oracle,
                            {.i0 = 1, .alpha = 1.0, .beta = 1.05,
                             .restart = RestartMode::kNaive});
    std::vector<std::uint64_t> cut;
    std::vector<std::uint8_t> scanned(inst.num_nodes(), 0);
    search.set_edge_observer([&](const EdgeScan& scan) {
      scanned[scan.tail] = 1;
      if (scan.outcome == EdgeOutcome::kPrunedByBound ||
          scan.outcome == EdgeOutcome::kPrunedByPrediction) {
        cut.push_back(PairKey(scan.tail, scan.head));
      }
    });
    search.Run();
    std::sort(cut.begin(), cut.end());

    std::uint64_t run_edges = 0, run_pruned = 0;
    for (const EdgeRef& e : relevant) {
      if (!scanned[e.tail]) continue;
      ++run_edges;
      if (std::binary_search(cut.begin(), cut.end(), PairKey(e.tail, e.head))) {
        ++run_pruned;
      }
      const double span = dist[e.tail] + 1.0 - distance;
      if (span > 0.0) {
        const double x = (dist[e.tail] + e.weight - distance) / span;
        const int bin = std::clamp(static_cast<int>(x * kUniformityBins), 0,
                                   kUniformityBins - 1);
        ++bins[bin];
      }
    }
    report.edges += run_edges;
    report.pruned += run_pruned;
    const double expected = report.bound * static_cast<double>(run_edges);
    if (expected >= chernoff_floor) {
      ++report.chernoff_eligible_runs;
      if (static_cast<double>(run_pruned) >= 0.5 * expected) {
        ++report.chernoff_satisfied_runs;
      }
    }
  }

  if (report.edges > 0) {
    const double m = static_cast<double>(report.edges);
    report.frequency = static_cast<double>(report.pruned) / m;
    report.std_error =
        std::sqrt(report.frequency * (1.0 - report.frequency) / m);
  }
  report.sufficient = report.edges >= kMinPooledEdges;

  std::uint64_t binned = 0;
  for (const auto b : bins) binned += b;
  if (binned > 0) {
    const double expected = static_cast<double>(binned) / kUniformityBins;
    double chi = 0.0;
    for (const auto b : bins) {
      const double diff = static_cast<double>(b) - expected;
      chi += diff * diff / expected;
    }
    report.chi_square = chi;
    report.uniformity_p_value =
        boost::math::gamma_q((kUniformityBins - 1) / 2.0, chi / 2.0);
  }
  return report;
}

InrReport MeasureInr(const GenParams& params, double eps, int runs) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  if (runs < 1) throw std::invalid_argument("runs must be positive");
  const std::vector<Instance> instances =
      GenerateAcceptedInstances(params, static_cast<std::size_t>(runs));

  InrReport report;
  double distance_sum = 0.0;
  for (const Instance& inst : instances) {
    const SearchResult plain = Dijkstra(inst);
    const PruningResult pruning = DijkstraPruning(inst);
    const ConstantPredictor oracle(plain.distance + eps);
    const PredictionResult predicted = DijkstraPrediction(
        inst, oracle,
        {.i0 = 1, .alpha = 1.0, .beta = 1.05, .restart = RestartMode::kSmart});
    report.distances.push_back(plain.distance);
    report.inrs.push_back(plain.stats.inr);
    report.inrr.push_back(pruning.stats.inr);
    report.inrp.push_back(predicted.stats.inr);
    if (!(predicted.stats.inr <= pruning.stats.inr &&
          pruning.stats.inr <= plain.stats.inr)) {
      ++report.order_violations;
    }
    distance_sum += plain.distance;
  }

  const double q = params.f / static_cast<double>(params.n);
  report.mean_distance = distance_sum / static_cast<double>(runs);
  report.mean_inrs = Mean(report.inrs);
  report.mean_inrr = Mean(report.inrr);
  report.mean_inrp = Mean(report.inrp);
  report.inrs_estimate = (params.c - 1.0) / q;
  report.inrr_bound = InrrBound(params.c, q);
  if (report.mean_distance < 1.0 && eps <= 1.0 - report.mean_distance) {
    report.inrp_bound = InrpBound(params.c, q, report.mean_distance, eps);
  } else {
    report.inrp_bound = std::nan("");
  }
  return report;
}

double InrrBound(double c, double q) {
  if (!(c > 1.0) || !(q > 0.0 && q < 1.0)) {
    throw std::invalid_argument("need c > 1 and 0 < q < 1");
  }
  return (1.0 + std::log(c - 1.0)) / q;
}

double InrpBound(double c, double q, double distance, double eps) {
  if (!(c > 1.0) || !(q > 0.0 && q < 1.0)) {
    throw std::invalid_argument("need c > 1 and 0 < q < 1");
  }
  if (!(distance >= 0.0 && distance < 1.0)) {
    throw std::invalid_argument("need 0 <= D < 1");
  }
  if (!(eps > 0.0 && eps <= 1.0 - distance)) {
    throw std::invalid_argument("need 0 < eps <= 1 - D");
  }
  return (1.0 + std::log(c - 1.0) - std::log((1.0 - distance) / eps)) / q;
}

double KeyLemmaBound(double a, std::span<const double> uppers, double p) {
  if (uppers.empty()) throw std::invalid_argument("need at least one upper");
  if (!std::is_sorted(uppers.begin(), uppers.end())) {
    throw std::invalid_argument("upper ends must be sorted");
  }
  if (!(a < p && p < uppers.front())) {
    throw std::invalid_argument("need a < P < b_1");
  }
  const std::size_t k = uppers.size() - 1;
  const double bk = k == 0 ? uppers[0] : uppers[k - 1];
  const double kp1 = static_cast<double>(k + 1);
  return (1.0 - std::pow(1.0 - (p - a) / (bk - a), kp1)) / kp1;
}

KeyLemmaReport KeyLemmaCheck(double a, std::span<const double> uppers,
                             double p, std::uint64_t trials,
                             std::uint64_t seed) {
  KeyLemmaReport report;
  report.bound = KeyLemmaBound(a, uppers, p);
  if (trials == 0) throw std::invalid_argument("trials must be positive");
  report.trials = trials;
  Xoshiro256StarStar rng(seed);
  const std::size_t k = uppers.size() - 1;
  std::uint64_t hits = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const double last = rng.Uniform(a, uppers[k]);
    bool hit = last <= p;
    for (std::size_t j = 0; j < k; ++j) {
      // Draw every variable so the stream does not depend on the outcome.
      const double x = rng.Uniform(a, uppers[j]);
      if (x < last) hit = false;
    }
    if (hit) ++hits;
  }
  const double m = static_cast<double>(trials);
  report.estimate = static_cast<double>(hits) / m;
  report.std_error = std::sqrt(report.estimate * (1.0 - report.estimate) / m);
  return report;
}

std::vector<KeyLemmaCase> RandomKeyLemmaCases(int count, int max_k,
                                              std::uint64_t seed) {
  if (count < 0 || max_k < 0) {
    throw std::invalid_argument("count and max_k must be non-negative");
  }
  Xoshiro256StarStar rng(seed);
  std::vector<KeyLemmaCase> cases;
  for (int i = 0; i < count; ++i) {
    KeyLemmaCase c;
    c.a = rng.Uniform();
    const auto k = rng.Below(static_cast<std::uint64_t>(max_k) + 1);
    for (std::uint64_t j = 0; j <= k; ++j) {
      c.uppers.push_back(c.a + rng.Uniform(0.1, 2.0));
    }
    std::sort(c.uppers.begin(), c.uppers.end());
    c.p = c.a + rng.Uniform(0.05, 0.95) * (c.uppers.front() - c.a);
    cases.push_back(std::move(c));
  }
  return cases;
}

}  // namespace ssmtsp
