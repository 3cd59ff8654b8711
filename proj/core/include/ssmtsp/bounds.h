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

// Empirical checks of the savings analysis: relevant-edge sets, prune
// frequencies under an additive-error prediction, inserted-never-removed
// counts, and the closed-form bounds they are compared with.

#ifndef SSMTSP_BOUNDS_H_
#define SSMTSP_BOUNDS_H_

#include <cstdint>
#include <span>
#include <vector>

#include "ssmtsp/instance.h"

namespace ssmtsp {

struct BoundsParams {
  double gamma = 2.0;  // in (1, 1/eps]
  double eps = 0.1;    // additive prediction error: P = D + eps

  // theta = D + gamma * eps - 1.
  double Theta(double distance) const { return distance + gamma * eps - 1.0; }
  // Throws std::invalid_argument unless eps > 0 and 1 < gamma <= 1/eps.
  void Validate() const;
};

struct EdgeRef {
  NodeId tail;
  NodeId head;
  double weight;

  friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
};

// Edges (u, v) with theta <= dist[u] <= distance and dist[u] + w > distance,
// where u is not a target (a search stops on its first target and never
// scans that target's arcs). `dist` are exact distances (e.g. from
// BellmanFord).
std::vector<EdgeRef> IdentifyLTheta(const Instance& inst,
                                    std::span<const double> dist,
                                    double theta, double distance);

struct Lemma1Report {
  std::uint64_t runs = 0;
  std::uint64_t edges = 0;   // pooled relevant edges whose tail was scanned
  std::uint64_t pruned = 0;
  double frequency = 0.0;
  double std_error = 0.0;    // binomial standard error of `frequency`
  double bound = 0.0;        // 1 - 1/gamma
  bool sufficient = false;   // at least 30 pooled edges
  // Uniformity of (d(u) + w - D) / (d(u) + 1 - D) over 10 equal bins.
  double chi_square = 0.0;
  double uniformity_p_value = 1.0;
  // Runs where (1 - 1/gamma)|L| >= 8 ln n, and how many of them pruned at
  // least half of the expected (1 - 1/gamma)|L| edges.
  std::uint64_t chernoff_eligible_runs = 0;
  std::uint64_t chernoff_satisfied_runs = 0;

  bool Passes() const { return frequency >= bound - 3.0 * std_error; }
};

// Over `runs` accepted instances of `params`, runs the naive prediction
// search with P = D + eps from the first iteration and counts how many
// relevant edges were cut. Edges whose tail was never scanned (possible
// only on exact distance ties) are left out.
Lemma1Report Lemma1MonteCarlo(const GenParams& params,
                              const BoundsParams& bounds, int runs);

struct InrReport {
  std::vector<double> distances;
  std::vector<std::uint64_t> inrs, inrr, inrp;
  double mean_distance = 0.0;
  double mean_inrs = 0.0, mean_inrr = 0.0, mean_inrp = 0.0;
  // q is the target probability f / n.
  double inrs_estimate = 0.0;  // (c - 1) / q
  double inrr_bound = 0.0;
  double inrp_bound = 0.0;     // evaluated at the mean distance
  std::uint64_t order_violations = 0;  // instances without inrp<=inrr<=inrs
};

// Inserted-never-removed counts of Dijkstra (INRS), Dijkstra with pruning
// (INRR) and smart-restart prediction with P = D + eps from the first
// iteration (INRP) on `runs` accepted instances.
InrReport MeasureInr(const GenParams& params, double eps, int runs);

// (1/q) (1 + ln(c - 1)).
double InrrBound(double c, double q);
// (1/q) (1 + ln(c - 1) - ln((1 - D) / eps)). Requires c > 1, 0 < q < 1,
// 0 <= D < 1 and 0 < eps <= 1 - D; throws std::invalid_argument otherwise.
double InrpBound(double c, double q, double distance, double eps);

struct KeyLemmaReport {
  double estimate = 0.0;
  double std_error = 0.0;
  double bound = 0.0;
  std::uint64_t trials = 0;

  bool Passes() const { return estimate <= bound + 3.0 * std_error; }
};

// X_j ~ U[a, uppers[j]] for j = 1..k+1 (uppers sorted, k + 1 = size).
// Estimates Pr[X_{k+1} <= X_j for all j and X_{k+1} <= P] and evaluates
// (1/(k+1)) (1 - (1 - (P - a)/(b_k - a))^{k+1}), with b_0 := b_1 for k = 0.
// Requires a < P < uppers[0]; throws std::invalid_argument otherwise.
KeyLemmaReport KeyLemmaCheck(double a, std::span<const double> uppers,
                             double p, std::uint64_t trials,
                             std::uint64_t seed);
double KeyLemmaBound(double a, std::span<const double> uppers, double p);

struct KeyLemmaCase {
  double a;
  std::vector<double> uppers;  // sorted, size k + 1
  double p;
};
// Random parameterisations with k uniform in [0, max_k], a in [0, 1),
// upper ends a + U[0.1, 2) and P strictly between a and the smallest upper.
std::vector<KeyLemmaCase> RandomKeyLemmaCases(int count, int max_k,
                                              std::uint64_t seed);

}  // namespace ssmtsp

#endif  // SSMTSP_BOUNDS_H_
