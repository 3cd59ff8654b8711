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

// Dijkstra with a predicted target distance, in its naive-restart and
// smart-restart flavours, and a lockstep checker that compares the smart
// flavour against Dijkstra with pruning node by node.

#ifndef SSMTSP_PREDICT_H_
#define SSMTSP_PREDICT_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ssmtsp/addressable_pq.h"
#include "ssmtsp/instance.h"
#include "ssmtsp/predictor.h"
#include "ssmtsp/sssp.h"

namespace ssmtsp {

enum class RestartMode { kNaive, kSmart };

std::string ToString(RestartMode mode);
RestartMode ParseRestartMode(const std::string& name);

struct PredictConfig {
  int i0 = 10;        // trace length; the prediction is made in iteration i0
  double alpha = 1.0; // inflation of the first prediction, >= 1
  double beta = 1.05; // inflation at every restart, > 1
  RestartMode restart = RestartMode::kSmart;

  // Throws std::invalid_argument on i0 < 1, alpha < 1 or beta <= 1.
  void Validate() const;
};

// Predictions at or below zero are replaced by this floor so that repeated
// inflation by beta still grows.
inline constexpr double kPredictionFloor = 1e-9;

enum class EdgeOutcome {
  kPrunedByBound,       // tent > B
  kPrunedByPrediction,  // naive: B >= tent > P
  kReserved,            // smart: B >= tent > P, v handled by the reserve set
  kRelaxed,             // tent <= min(B, P)
};

struct EdgeScan {
  NodeId tail;
  NodeId head;
  double tent;
  EdgeOutcome outcome;
};

// One row per settled node.
struct IterationEvent {
  std::uint64_t iter;    // settled-node count so far (1-based)
  std::uint64_t trial;   // 1-based
  NodeId node;
  double d_u;
  double bound;
  double prediction;
  std::size_t q_size;    // after the iteration's relaxations
  std::size_t r_size;
};

// Schema: iter,trial,d_u,B,P,q_size,r_size.
std::string IterationEventCsvHeader();
std::string IterationEventCsvRow(const IterationEvent& event);

// Dijkstra-Prediction, advanced one settled node at a time.
//
// The first i0 non-target settled nodes build the trace; in iteration i0 the
// prediction becomes P = alpha * predictor(trace). Nodes are only removed
// while the queue minimum is at most P; otherwise a restart inflates P by
// beta. Naive restarts reset labels and queue (B, P, trace and iteration
// counter persist); smart restarts batch-move every reserve node with
// d(v) <= min(B, P) into the queue.
class PredictionSearch {
 public:
  PredictionSearch(const Instance& inst, const Predictor& predictor,
                   PredictConfig config);

  // The settled node, or nullopt once finished. Restarts happen inside.
  // Throws PredictorError if the predictor yields NaN.
  std::optional<NodeId> Step();
  void Run() {
    while (Step()) {
    }
  }

  bool done() const { return done_; }
  RunStats stats() const;
  double bound() const { return bound_; }
  double prediction() const { return prediction_; }
  // Raw predictor output (before alpha and the floor); nullopt until made.
  std::optional<double> raw_prediction() const { return raw_prediction_; }
  std::span<const double> labels() const { return labels_; }
  const AddressablePq& queue() const { return queue_; }
  bool InReserve(NodeId v) const { return in_reserve_[v] != 0; }
  const std::vector<NodeId>& reserve() const { return reserve_; }
  const Trace& trace() const { return trace_; }

  void set_edge_observer(std::function<void(const EdgeScan&)> observer) {
    edge_observer_ = std::move(observer);
  }
  void set_iteration_observer(
      std::function<void(const IterationEvent&)> observer) {
    iteration_observer_ = std::move(observer);
  }
  // Called after every restart with the inflated prediction.
  void set_restart_observer(std::function<void(double)> observer) {
    restart_observer_ = std::move(observer);
  }

 private:
  bool CanRestart() const;
  void Restart();
  void Relax(NodeId v, double tent);
  void RelaxSmart(NodeId v, double tent);
  void AddToReserve(NodeId v);
  void ResetLabels();

  const Instance& inst_;
  const Predictor& predictor_;
  PredictConfig config_;
  AddressablePq queue_;
  std::vector<double> labels_;
  std::vector<NodeId> touched_;  // nodes with a finite label (naive reset)
  std::vector<std::uint8_t> in_reserve_;
  std::vector<NodeId> reserve_;
  double bound_ = kInf;
  double prediction_ = kInf;
  std::optional<double> raw_prediction_;
  Trace trace_;
  std::uint64_t iterations_ = 0;  // i: non-target settled nodes
  std::uint64_t trials_ = 1;
  std::uint64_t rrm1_ = 0, rrm2_ = 0, ris_ = 0, rdp_ = 0, pruned_ = 0;
  // Naive mode: an arc was cut by P (not by B) during the current trial.
  bool withheld_this_trial_ = false;
  double distance_ = kInf;
  bool done_ = false;
  std::function<void(const EdgeScan&)> edge_observer_;
  std::function<void(const IterationEvent&)> iteration_observer_;
  std::function<void(double)> restart_observer_;
};

struct PredictionResult {
  double distance = kInf;
  RunStats stats;
};

PredictionResult DijkstraPrediction(const Instance& inst,
                                    const Predictor& predictor,
                                    const PredictConfig& config);

// Outcome of running smart-restart prediction and pruning side by side.
struct LockstepReport {
  bool passed = true;
  std::uint64_t iterations = 0;
  // On failure: the 1-based iteration and the property (P1, P2, P3 or
  // "finish") that broke first.
  std::uint64_t failed_iteration = 0;
  std::string failed_property;
  std::string message;
};

// Checks after every settled node that
//   (P1) both searches settled the same node,
//   (P2) the pruning queue is the disjoint union of the prediction queue and
//        the reserve set, and every reserve node has d(v) > min(B, P),
//   (P3) all labels agree,
// and that both searches finish together with the same distance.
LockstepReport LockstepCheck(const Instance& inst, const Predictor& predictor,
                             PredictConfig config);

}  // namespace ssmtsp

#endif  // SSMTSP_PREDICT_H_
