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

#include "ssmtsp/predict.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace ssmtsp {

std::string ToString(RestartMode mode) {
  return mode == RestartMode::kNaive ? "naive" : "smart";
}

RestartMode ParseRestartMode(const std::string& name) {
  if (name == "naive") return RestartMode::kNaive;
  if (name == "smart") return RestartMode::kSmart;
  throw std::invalid_argument("unknown restart mode '" + name + "'");
}

void PredictConfig::Validate() const {
  if (i0 < 1) throw std::invalid_argument("i0 must be at least 1");
  if (!(alpha >= 1.0)) throw std::invalid_argument("alpha must be >= 1");
  if (!(beta > 1.0) || std::isinf(beta)) {
    throw std::invalid_argument("beta must be a finite value > 1");
  }
}

std::string IterationEventCsvHeader() {
  return "iter,trial,d_u,B,P,q_size,r_size";
}

std::string IterationEventCsvRow(const IterationEvent& e) {
  std::ostringstream out;
  out << std::setprecision(17) << e.iter << ',' << e.trial << ',' << e.d_u
      << ',' << e.bound << ',' << e.prediction << ',' << e.q_size << ','
      << e.r_size;
  return out.str();
}

PredictionSearch::PredictionSearch(const Instance& inst,
                                   const Predictor& predictor,
                                   PredictConfig config)
    : inst_(inst),
      predictor_(predictor),
      config_(config),
      queue_(inst.num_nodes()),
      labels_(inst.num_nodes(), kInf),
      in_reserve_(inst.num_nodes(), 0) {
  config_.Validate();
  labels_[inst.source()] = 0.0;
  touched_.push_back(inst.source());
  queue_.Insert(inst.source(), 0.0);
}

std::optional<NodeId> PredictionSearch::Step() {
  if (done_) return std::nullopt;
  while (queue_.IsEmpty() || queue_.MinPrio() > prediction_) {
    if (!CanRestart()) {
      done_ = true;
      return std::nullopt;
    }
    Restart();
  }

  const NodeId u = queue_.RemoveMin().key;
  const double du = labels_[u];
  auto emit = [&] {
    queue_.SampleSize();
    if (iteration_observer_) {
      iteration_observer_({queue_.counters().remove_mins, trials_, u, du,
                           bound_, prediction_, queue_.Size(),
                           reserve_.size()});
    }
  };
  if (inst_.IsTarget(u)) {
    distance_ = du;
    done_ = true;
    emit();
    return u;
  }

  ++iterations_;
  const auto i0 = static_cast<std::uint64_t>(config_.i0);
  if (iterations_ <= i0) trace_.push_back({du, bound_});
  if (iterations_ == i0) {
    const double raw = predictor_.Predict(trace_);
    if (std::isnan(raw)) {
      throw PredictorError(predictor_.kind() + " predictor returned NaN");
    }
    raw_prediction_ = raw;
    prediction_ = config_.alpha * (raw > 0.0 ? raw : kPredictionFloor);
  }

  const bool smart = config_.restart == RestartMode::kSmart;
  for (const Arc& arc : inst_.OutArcs(u)) {
    const double tent = du + arc.weight;
    const double threshold = smart ? bound_ : std::min(bound_, prediction_);
    if (tent > threshold) {
      ++pruned_;
      EdgeOutcome outcome = EdgeOutcome::kPrunedByBound;
      if (tent <= bound_) {
        outcome = EdgeOutcome::kPrunedByPrediction;
        withheld_this_trial_ = true;
      }
      if (edge_observer_) edge_observer_({u, arc.head, tent, outcome});
      continue;
    }
    if (inst_.IsTarget(arc.head)) bound_ = std::min(bound_, tent);
    if (smart) {
      RelaxSmart(arc.head, tent);
    } else {
      Relax(arc.head, tent);
    }
    if (edge_observer_) {
      edge_observer_({u, arc.head, tent,
                      smart && tent > prediction_ ? EdgeOutcome::kReserved
                                                  : EdgeOutcome::kRelaxed});
    }
  }
  emit();
  return u;
}

bool PredictionSearch::CanRestart() const {
  // With P = inf nothing was held back, so an empty queue means no target
  // is reachable.
  if (prediction_ == kInf) return false;
  if (!queue_.IsEmpty()) return true;
  if (config_.restart == RestartMode::kNaive) return withheld_this_trial_;
  return std::any_of(reserve_.begin(), reserve_.end(),
                     [&](NodeId v) { return labels_[v] <= bound_; });
}

void PredictionSearch::Restart() {
  ++trials_;
  prediction_ *= config_.beta;
  if (config_.restart == RestartMode::kNaive) {
    ResetLabels();
    queue_.Clear();
    labels_[inst_.source()] = 0.0;
    touched_.push_back(inst_.source());
    queue_.Insert(inst_.source(), 0.0);
    withheld_this_trial_ = false;
  } else {
    const double limit = std::min(bound_, prediction_);
    std::size_t kept = 0;
    for (const NodeId v : reserve_) {
      if (labels_[v] <= limit) {
        in_reserve_[v] = 0;
        queue_.Insert(v, labels_[v]);
        ++rrm2_;
      } else {
        reserve_[kept++] = v;
      }
    }
    reserve_.resize(kept);
  }
  if (restart_observer_) restart_observer_(prediction_);
}

void PredictionSearch::Relax(NodeId v, double tent) {
  double& dv = labels_[v];
  if (!(dv > tent)) return;
  if (dv == kInf) {
    queue_.Insert(v, tent);
    touched_.push_back(v);
  } else {
    queue_.DecreasePrio(v, tent);
  }
  dv = tent;
}

void PredictionSearch::RelaxSmart(NodeId v, double tent) {
  double& dv = labels_[v];
  if (!(dv > tent)) return;
  if (dv == kInf) {
    if (tent <= prediction_) {
      queue_.Insert(v, tent);
    } else {
      AddToReserve(v);
    }
  } else if (!in_reserve_[v]) {
    queue_.DecreasePrio(v, tent);
  } else if (tent > prediction_) {
    ++rdp_;  // stays in the reserve set with the smaller label
  } else {
    in_reserve_[v] = 0;
    reserve_.erase(std::find(reserve_.begin(), reserve_.end(), v));
    queue_.Insert(v, tent);
    ++rrm1_;
  }
  dv = tent;
}

void PredictionSearch::AddToReserve(NodeId v) {
  in_reserve_[v] = 1;
  reserve_.push_back(v);
  ++ris_;
}

void PredictionSearch::ResetLabels() {
  for (const NodeId v : touched_) labels_[v] = kInf;
  touched_.clear();
}

RunStats PredictionSearch::stats() const {
  const PqCounters& c = queue_.counters();
  RunStats s;
  s.rm = c.remove_mins;
  s.is = c.inserts;
  s.dp = c.decrease_prios;
  s.inr = c.inserts - c.remove_mins;
  s.rrm1 = rrm1_;
  s.rrm2 = rrm2_;
  s.ris = ris_;
  s.rdp = rdp_;
  s.trials = trials_;
  s.cum_q = c.cumulative_size;
  s.distance = distance_;
  s.settled = c.remove_mins;
  s.pruned = pruned_;
  return s;
}

PredictionResult DijkstraPrediction(const Instance& inst,
                                    const Predictor& predictor,
                                    const PredictConfig& config) {
  PredictionSearch search(inst, predictor, config);
  search.Run();
  const RunStats stats = search.stats();
  return {stats.distance, stats};
}

namespace {

bool SameLabel(double a, double b) { return a == b || (a != a && b != b); }

}  // namespace

LockstepReport LockstepCheck(const Instance& inst, const Predictor& predictor,
                             PredictConfig config) {
  config.restart = RestartMode::kSmart;
  PredictionSearch prediction(inst, predictor, config);
  PruningSearch pruning(inst, {.prune = true});
  LockstepReport report;
  auto fail = [&](std::string property, std::string message) {
    report.passed = false;
    report.failed_iteration = report.iterations;
    report.failed_property = std::move(property);
    report.message = std::move(message);
    return report;
  };

  const std::size_t n = inst.num_nodes();
  std::vector<std::uint8_t> covered(n);
  while (true) {
    const std::optional<NodeId> a = prediction.Step();
    const std::optional<NodeId> b = pruning.Step();
    if (!a || !b) {
      if (a.has_value() != b.has_value()) {
        return fail("finish", "one search finished before the other");
      }
      if (!SameLabel(prediction.stats().distance, pruning.stats().distance)) {
        return fail("finish", "distances differ");
      }
      return report;
    }
    ++report.iterations;
    if (*a != *b) {
      return fail("P1", "prediction settled " + std::to_string(*a) +
                            ", pruning settled " + std::to_string(*b));
    }

    std::fill(covered.begin(), covered.end(), 0);
    for (const NodeId v : prediction.queue().Keys()) {
      if (prediction.InReserve(v)) {
        return fail("P2", "node " + std::to_string(v) +
                              " is in both queue and reserve");
      }
      covered[v] = 1;
    }
    const double limit = std::min(prediction.bound(), prediction.prediction());
    for (const NodeId v : prediction.reserve()) {
      if (covered[v]) {
        return fail("P2", "reserve node " + std::to_string(v) + " repeated");
      }
      covered[v] = 1;
      if (!(prediction.labels()[v] > limit)) {
        return fail("P2", "reserve node " + std::to_string(v) +
                              " has d(v) <= min(B, P)");
      }
    }
    const std::vector<NodeId> pruning_keys = pruning.queue().Keys();
    std::size_t matched = 0;
    for (const NodeId v : pruning_keys) {
      if (!covered[v]) {
        return fail("P2", "pruning queue node " + std::to_string(v) +
                              " missing from queue and reserve");
      }
      ++matched;
    }
    if (matched != prediction.queue().Size() + prediction.reserve().size()) {
      return fail("P2", "queue plus reserve has nodes the pruning queue lacks");
    }

    for (NodeId v = 0; v < n; ++v) {
      if (!SameLabel(prediction.labels()[v], pruning.labels()[v])) {
        return fail("P3", "labels differ at node " + std::to_string(v));
      }
    }
  }
}

}  // namespace ssmtsp
