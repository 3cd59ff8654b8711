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

#include "ssmtsp/bench.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <sstream>
#include <exception>
#include <thread>

#include "ssmtsp/predictors.h"

namespace ssmtsp {
namespace {

// Calls fn(i) for i in [0, count), split into contiguous blocks per thread.
template <typename Fn>
void ParallelFor(std::size_t count, int jobs, Fn fn) {
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(jobs, count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  const std::size_t block = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        const std::size_t end = std::min(count, (w + 1) * block);
        for (std::size_t i = w * block; i < end; ++i) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

bool SameDistance(double a, double b) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(a));
}

std::string Format(double value) {
  std::ostringstream out;
  out.precision(6);
  out << value;
  return out.str();
}

}  // namespace

std::string ToString(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kOracle: return "oracle";
    case Algorithm::kDijkstra: return "dijkstra";
    case Algorithm::kPrune: return "prune";
    case Algorithm::kSmart: return "smart";
    case Algorithm::kNaive: return "naive";
    case Algorithm::kBfs: return "bfs";
    case Algorithm::kWbfs: return "wbfs";
  }
  return "unknown";
}

MeanStats Average(const std::vector<RunStats>& runs) {
  MeanStats m;
  if (runs.empty()) return m;
  for (const RunStats& s : runs) {
    m.rm += s.rm;
    m.is += s.is;
    m.dp += s.dp;
    m.inr += s.inr;
    m.rrm1 += s.rrm1;
    m.rrm2 += s.rrm2;
    m.ris += s.ris;
    m.rdp += s.rdp;
    m.q += s.q_total();
    m.trials += s.trials;
    m.cum_q += s.cum_q;
  }
  const double k = static_cast<double>(runs.size());
  for (double* f : {&m.rm, &m.is, &m.dp, &m.inr, &m.rrm1, &m.rrm2, &m.ris,
                    &m.rdp, &m.q, &m.trials, &m.cum_q}) {
    *f /= k;
  }
  return m;
}

BenchReport RunBench(const std::vector<Instance>& instances,
                     const Predictor& predictor, const PredictConfig& config,
                     int jobs) {
  config.Validate();
  PredictConfig smart = config;
  smart.restart = RestartMode::kSmart;
  PredictConfig naive = config;
  naive.restart = RestartMode::kNaive;

  BenchReport report;
  report.instances = instances.size();
  report.runs.assign(kAllAlgorithms.size(),
                     std::vector<RunStats>(instances.size()));
  std::vector<std::string> failures(instances.size());

  ParallelFor(instances.size(), jobs, [&](std::size_t i) {
    const Instance& inst = instances[i];
    auto put = [&](Algorithm a, const RunStats& s) {
      report.runs[static_cast<std::size_t>(a)][i] = s;
    };
    const SearchResult plain = Dijkstra(inst);
    put(Algorithm::kDijkstra, plain.stats);
    put(Algorithm::kOracle, OracleRun(inst, plain.distance).stats);
    put(Algorithm::kPrune, DijkstraPruning(inst).stats);
    put(Algorithm::kSmart, DijkstraPrediction(inst, predictor, smart).stats);
    put(Algorithm::kNaive, DijkstraPrediction(inst, predictor, naive).stats);
    const BfsPredictor bfs(inst);
    put(Algorithm::kBfs, DijkstraPrediction(inst, bfs, smart).stats);
    const WeightedBfsPredictor wbfs(inst);
    put(Algorithm::kWbfs, DijkstraPrediction(inst, wbfs, smart).stats);
    for (const Algorithm a : kAllAlgorithms) {
      const double d = report.runs[static_cast<std::size_t>(a)][i].distance;
      if (!SameDistance(d, plain.distance)) {
        failures[i] = "instance " + std::to_string(i) + " (seed " +
                      std::to_string(inst.meta().seed) + "): " + ToString(a) +
                      " found " + Format(d) + ", dijkstra found " +
                      Format(plain.distance);
        return;
      }
    }
  });
  for (const std::string& f : failures) {
    if (!f.empty()) throw ValidationError(f);
  }

  for (const Algorithm a : kAllAlgorithms) {
    report.rows.push_back(
        {a, Average(report.runs[static_cast<std::size_t>(a)]), 0.0});
  }
  const double oracle = report.rows.front().mean.cum_q;
  for (BenchRow& row : report.rows) {
    row.cum_q_ratio = oracle > 0.0 ? row.mean.cum_q / oracle : 0.0;
  }
  return report;
}

void WriteBenchCsv(const BenchReport& report, std::ostream& out) {
  out << "#schema=1\n"
      << "algorithm,rm,is,inr,dp,rrm1,rrm2,ris,rdp,q,trials,cum_q,"
         "cum_q_ratio\n";
  for (const BenchRow& row : report.rows) {
    const MeanStats& m = row.mean;
    out << ToString(row.algorithm);
    for (const double v : {m.rm, m.is, m.inr, m.dp, m.rrm1, m.rrm2, m.ris,
                           m.rdp, m.q, m.trials, m.cum_q, row.cum_q_ratio}) {
      out << ',' << Format(v);
    }
    out << '\n';
  }
}

SweepReport RunSweep(const std::vector<Instance>& instances,
                     const Predictor& predictor, int i0,
                     const std::vector<double>& alphas,
                     const std::vector<double>& betas, int jobs) {
  SweepReport report;
  report.alphas = alphas;
  report.betas = betas;
  for (const double alpha : alphas) {
    for (const double beta : betas) {
      const PredictConfig config{.i0 = i0, .alpha = alpha, .beta = beta,
                                 .restart = RestartMode::kSmart};
      config.Validate();
      std::vector<RunStats> runs(instances.size());
      ParallelFor(instances.size(), jobs, [&](std::size_t i) {
        runs[i] = DijkstraPrediction(instances[i], predictor, config).stats;
      });
      const MeanStats m = Average(runs);
      report.cells.push_back({alpha, beta, m.q, m.cum_q, m.trials});
    }
  }
  return report;
}

void WriteSweepMatrixCsv(const SweepReport& report, const std::string& field,
                         std::ostream& out) {
  double SweepCell::*member = nullptr;
  if (field == "q") {
    member = &SweepCell::mean_q;
  } else if (field == "cum_q") {
    member = &SweepCell::mean_cum_q;
  } else if (field == "trials") {
    member = &SweepCell::mean_trials;
  } else {
    throw std::invalid_argument("unknown sweep field: " + field);
  }
  out << "#schema=1\nalpha";
  for (const double beta : report.betas) out << ',' << Format(beta);
  out << '\n';
  for (std::size_t a = 0; a < report.alphas.size(); ++a) {
    out << Format(report.alphas[a]);
    for (std::size_t b = 0; b < report.betas.size(); ++b) {
      out << ',' << Format(report.at(a, b).*member);
    }
    out << '\n';
  }
}

InstanceStatistics ComputeStatistics(const std::vector<Instance>& instances) {
  InstanceStatistics s;
  s.instances = instances.size();
  if (instances.empty()) return s;
  s.min_distance = std::numeric_limits<double>::infinity();
  s.max_distance = -std::numeric_limits<double>::infinity();
  for (const Instance& inst : instances) {
    const ShortestPathSummary path = SummarizeShortestPath(inst);
    const BfsPath bfs = FindBfsPath(inst);
    s.mean_distance += path.distance;
    s.min_distance = std::min(s.min_distance, path.distance);
    s.max_distance = std::max(s.max_distance, path.distance);
    s.mean_hops += path.hops;
    s.mean_bfs_hops += bfs.hops;
    s.mean_bfs_weight += bfs.weight;
  }
  const double k = static_cast<double>(instances.size());
  if (s.mean_hops > 0) s.mean_weight = s.mean_distance / s.mean_hops;
  s.mean_distance /= k;
  s.mean_hops /= k;
  s.mean_bfs_hops /= k;
  s.mean_bfs_weight /= k;
  return s;
}

}  // namespace ssmtsp
