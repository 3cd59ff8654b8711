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

// Baseline searches for the single-source many-targets shortest path
// problem: many-targets Dijkstra, Dijkstra with pruning (optionally
// recording the trace), the oracle benchmark, and a Bellman-Ford oracle.

#ifndef SSMTSP_SSSP_H_
#define SSMTSP_SSSP_H_

#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "ssmtsp/addressable_pq.h"
#include "ssmtsp/instance.h"

namespace ssmtsp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Per-run operation counts. rm/is/dp count queue operations; the r* fields
// count reserve-set traffic and stay 0 for algorithms without a reserve set.
struct RunStats {
  std::uint64_t rm = 0;
  std::uint64_t is = 0;
  std::uint64_t dp = 0;
  std::uint64_t inr = 0;   // inserted but never removed: is - rm
  std::uint64_t rrm1 = 0;  // reserve -> queue on a shorter path
  std::uint64_t rrm2 = 0;  // reserve -> queue by batch insertion at restart
  std::uint64_t ris = 0;   // insertions into the reserve set
  std::uint64_t rdp = 0;   // label decreases of nodes staying in reserve
  std::uint64_t trials = 1;
  std::uint64_t cum_q = 0;
  double distance = kInf;
  std::uint64_t settled = 0;
  // Edge scans skipped because the tentative distance exceeded the active
  // threshold. Not part of the CSV row.
  std::uint64_t pruned = 0;

  std::uint64_t q_total() const { return rm + is + dp; }
};

// Column order: rm,is,dp,inr,rrm1,rrm2,ris,rdp,q_total,trials,cum_q,
// distance,settled.
std::string RunStatsCsvHeader();
std::string RunStatsCsvRow(const RunStats& stats);

struct TracePoint {
  double dist;   // label of the settled node
  double bound;  // pruning bound at that moment (kInf if unset)

  friend bool operator==(const TracePoint&, const TracePoint&) = default;
};
using Trace = std::vector<TracePoint>;

struct PruningOptions {
  bool prune = true;
  double initial_bound = kInf;
  // Number of (dist, bound) pairs to record; 0 disables the trace.
  int trace_length = 0;
};

// Dijkstra-style search that can be advanced one settled node at a time.
//
// Each Step() removes the minimum node u. If u is a target the search stops
// with distance d(u). Otherwise every arc (u, v) is scanned: with pruning on,
// arcs whose tentative distance exceeds the bound B are skipped; B drops to
// the tentative distance of every surviving arc into a target; then v is
// relaxed. The queue size is sampled once per settled node after its
// relaxations.
class PruningSearch {
 public:
  PruningSearch(const Instance& inst, PruningOptions options);

  // The settled node, or nullopt once the search has finished.
  std::optional<NodeId> Step();
  void Run() {
    while (Step()) {
    }
  }

  bool done() const { return done_; }
  RunStats stats() const;
  double bound() const { return bound_; }
  std::span<const double> labels() const { return labels_; }
  const AddressablePq& queue() const { return queue_; }
  // Empty unless a trace of the requested length was completed.
  const Trace& trace() const { return trace_; }
  bool trace_complete() const {
    return options_.trace_length > 0 &&
           trace_.size() == static_cast<std::size_t>(options_.trace_length);
  }

 private:
  const Instance& inst_;
  PruningOptions options_;
  AddressablePq queue_;
  std::vector<double> labels_;
  double bound_;
  Trace trace_;
  std::uint64_t iterations_ = 0;  // non-target settled nodes
  std::uint64_t pruned_ = 0;
  double distance_ = kInf;
  bool done_ = false;
};

struct SearchResult {
  double distance = kInf;
  RunStats stats;
};

struct PruningResult {
  double distance = kInf;
  RunStats stats;
  std::optional<Trace> trace;  // absent if fewer than i0 nodes were scanned
};

SearchResult Dijkstra(const Instance& inst);
PruningResult DijkstraPruning(const Instance& inst, int i0 = 0);
// Pruning search with B initialised to the exact distance `d_star`.
SearchResult OracleRun(const Instance& inst, double d_star);

// Exact distances from the source by rounds of full edge relaxation
// (at most n - 1 rounds). kInf for unreachable nodes.
std::vector<double> BellmanFord(const Instance& inst);

// min over targets of `dist`.
double MinTargetDistance(const Instance& inst, std::span<const double> dist);

// Distance and hop count of a shortest path to the nearest target, read off
// the shortest-path tree of an unpruned search.
struct ShortestPathSummary {
  double distance = kInf;
  int hops = -1;
  NodeId target = 0;
};
ShortestPathSummary SummarizeShortestPath(const Instance& inst);

}  // namespace ssmtsp

#endif  // SSMTSP_SSSP_H_
