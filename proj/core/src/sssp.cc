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

#include "ssmtsp/sssp.h"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <queue>
#include <sstream>
#include <utility>

namespace ssmtsp {

std::string RunStatsCsvHeader() {
  return "rm,is,dp,inr,rrm1,rrm2,ris,rdp,q_total,trials,cum_q,distance,"
         "settled";
}

std::string RunStatsCsvRow(const RunStats& s) {
  std::ostringstream out;
  out << s.rm << ',' << s.is << ',' << s.dp << ',' << s.inr << ',' << s.rrm1
      << ',' << s.rrm2 << ',' << s.ris << ',' << s.rdp << ',' << s.q_total()
      << ',' << s.trials << ',' << s.cum_q << ',' << std::setprecision(17)
      << s.distance << ',' << s.settled;
  return out.str();
}

PruningSearch::PruningSearch(const Instance& inst, PruningOptions options)
    : inst_(inst),
      options_(options),
      queue_(inst.num_nodes()),
      labels_(inst.num_nodes(), kInf),
      bound_(options.initial_bound) {
  labels_[inst.source()] = 0.0;
  queue_.Insert(inst.source(), 0.0);
}

std::optional<NodeId> PruningSearch::Step() {
  if (done_) return std::nullopt;
  if (queue_.IsEmpty()) {
    done_ = true;
    return std::nullopt;
  }
  const NodeId u = queue_.RemoveMin().key;
  const double du = labels_[u];
  if (inst_.IsTarget(u)) {
    // d(u) = D here; B >= D always holds, so it is not consulted.
    distance_ = du;
    done_ = true;
    queue_.SampleSize();
    return u;
  }
  ++iterations_;
  if (iterations_ <= static_cast<std::uint64_t>(options_.trace_length)) {
    trace_.push_back({du, bound_});
  }
  for (const Arc& arc : inst_.OutArcs(u)) {
    const double tent = du + arc.weight;
    if (options_.prune && tent > bound_) {
      ++pruned_;
      continue;
    }
    if (inst_.IsTarget(arc.head)) bound_ = std::min(bound_, tent);
    double& dv = labels_[arc.head];
    if (dv > tent) {
      if (dv == kInf) {
        queue_.Insert(arc.head, tent);
      } else {
        queue_.DecreasePrio(arc.head, tent);
      }
      dv = tent;
    }
  }
  queue_.SampleSize();
  return u;
}

RunStats PruningSearch::stats() const {
  const PqCounters& c = queue_.counters();
  RunStats s;
  s.rm = c.remove_mins;
  s.is = c.inserts;
  s.dp = c.decrease_prios;
  s.inr = c.inserts - c.remove_mins;
  s.cum_q = c.cumulative_size;
  s.distance = distance_;
  s.settled = c.remove_mins;
  s.pruned = pruned_;
  return s;
}

SearchResult Dijkstra(const Instance& inst) {
  PruningSearch search(inst, {.prune = false});
  search.Run();
  const RunStats stats = search.stats();
  return {stats.distance, stats};
}

PruningResult DijkstraPruning(const Instance& inst, int i0) {
  PruningSearch search(inst, {.prune = true, .trace_length = i0});
  search.Run();
  PruningResult result;
  result.stats = search.stats();
  result.distance = result.stats.distance;
  if (search.trace_complete()) result.trace = search.trace();
  return result;
}

SearchResult OracleRun(const Instance& inst, double d_star) {
  PruningSearch search(inst, {.prune = true, .initial_bound = d_star});
  search.Run();
  const RunStats stats = search.stats();
  return {stats.distance, stats};
}

std::vector<double> BellmanFord(const Instance& inst) {
  const std::size_t n = inst.num_nodes();
  std::vector<double> dist(n, kInf);
  dist[inst.source()] = 0.0;
  for (std::size_t round = 0; round + 1 < n; ++round) {
    bool changed = false;
    for (NodeId u = 0; u < n; ++u) {
      if (dist[u] == kInf) continue;
      for (const Arc& arc : inst.OutArcs(u)) {
        const double tent = dist[u] + arc.weight;
        if (tent < dist[arc.head]) {
          dist[arc.head] = tent;
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  return dist;
}

double MinTargetDistance(const Instance& inst, std::span<const double> dist) {
  double best = kInf;
  for (NodeId v = 0; v < inst.num_nodes(); ++v) {
    if (inst.IsTarget(v)) best = std::min(best, dist[v]);
  }
  return best;
}

ShortestPathSummary SummarizeShortestPath(const Instance& inst) {
  const std::size_t n = inst.num_nodes();
  std::vector<double> dist(n, kInf);
  std::vector<int> hops(n, -1);
  std::vector<bool> settled(n, false);
  using Item = std::pair<double, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[inst.source()] = 0.0;
  hops[inst.source()] = 0;
  heap.push({0.0, inst.source()});
  while (!heap.empty()) {
    const auto [du, u] = heap.top();
    heap.pop();
    if (settled[u]) continue;
    settled[u] = true;
    if (inst.IsTarget(u)) return {du, hops[u], u};
    for (const Arc& arc : inst.OutArcs(u)) {
      const double tent = du + arc.weight;
      if (tent < dist[arc.head]) {
        dist[arc.head] = tent;
        hops[arc.head] = hops[u] + 1;
        heap.push({tent, arc.head});
      }
    }
  }
  return {};
}

}  // namespace ssmtsp
