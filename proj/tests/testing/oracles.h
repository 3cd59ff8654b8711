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

// Reference implementations and fixtures shared by the tests. Nothing here
// calls into the search code under test.

#ifndef SSMTSP_TESTS_TESTING_ORACLES_H_
#define SSMTSP_TESTS_TESTING_ORACLES_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "ssmtsp/instance.h"

namespace ssmtsp::testing {

// Flat-scan priority queue: O(n) per operation, (priority, key) order.
class ReferenceQueue {
 public:
  void Insert(NodeId key, double priority);
  std::pair<NodeId, double> RemoveMin();
  void DecreasePrio(NodeId key, double priority);
  bool Contains(NodeId key) const;
  std::optional<double> PriorityOf(NodeId key) const;
  double MinPrio() const;
  std::size_t Size() const { return entries_.size(); }
  bool IsEmpty() const { return entries_.empty(); }

 private:
  std::size_t MinIndex() const;
  std::vector<std::pair<NodeId, double>> entries_;
};

// Distances by relaxing every edge until nothing changes.
std::vector<double> ReferenceDistances(const Instance& inst);
double ReferenceTargetDistance(const Instance& inst);

struct TestEdge {
  NodeId tail;
  NodeId head;
  double weight;
};
Instance MakeGraph(std::size_t n, const std::vector<TestEdge>& edges,
                   const std::vector<NodeId>& targets, NodeId source = 0);

// Unfiltered random instances with 2 <= n <= max_n (targets may be
// unreachable).
std::vector<Instance> SmallRandomInstances(std::size_t count,
                                           std::uint64_t seed,
                                           std::size_t max_n = 200);

// 50 hand-built and tie-heavy instances: the no-savings family, graphs
// with weights from a four-value set, unreachable targets, a source that is
// a target, zero-weight chains and complete graphs.
std::vector<Instance> AdversarialInstances();

// Composite Simpson rule on [lo, hi] with `intervals` (even) panels.
double Simpson(const std::function<double(double)>& f, double lo, double hi,
               int intervals);

// Pr[X_{k+1} <= min_j X_j and X_{k+1} <= P] for X_j ~ U[a, uppers[j]],
// by integrating the density of X_{k+1} against the survival functions.
double KeyLemmaExact(double a, const std::vector<double>& uppers, double p);

}  // namespace ssmtsp::testing

#endif  // SSMTSP_TESTS_TESTING_ORACLES_H_
