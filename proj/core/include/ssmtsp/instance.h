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

// Problem instances: a directed graph with weights in [0,1], a source node
// and a set of target nodes.

#ifndef SSMTSP_INSTANCE_H_
#define SSMTSP_INSTANCE_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ssmtsp/addressable_pq.h"

namespace ssmtsp {

struct Arc {
  NodeId head;
  double weight;

  friend bool operator==(const Arc&, const Arc&) = default;
};

struct InstanceMeta {
  double c = 0.0;  // expected degree
  double f = 0.0;  // expected number of targets
  std::uint64_t seed = 0;
};

// Immutable after construction; safe to share read-only across threads.
class Instance {
 public:
  Instance() = default;

  // `arcs[u]` lists the outgoing arcs of u; they are stored sorted by head
  // id. Throws std::invalid_argument if
  // the graph is malformed (bad ids, self-loops, parallel arcs, weights
  // outside [0,1], source out of range).
  Instance(std::vector<std::vector<Arc>> arcs, NodeId source,
           std::vector<bool> is_target, InstanceMeta meta = {});

  std::size_t num_nodes() const { return num_nodes_; }
  std::size_t num_edges() const { return heads_weights_.size(); }
  NodeId source() const { return source_; }
  const InstanceMeta& meta() const { return meta_; }

  bool IsTarget(NodeId v) const { return is_target_[v] != 0; }
  std::size_t NumTargets() const;

  std::span<const Arc> OutArcs(NodeId u) const {
    return {heads_weights_.data() + offsets_[u],
            heads_weights_.data() + offsets_[u + 1]};
  }

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.num_nodes_ == b.num_nodes_ && a.source_ == b.source_ &&
           a.offsets_ == b.offsets_ && a.heads_weights_ == b.heads_weights_ &&
           a.is_target_ == b.is_target_ && a.meta_.seed == b.meta_.seed;
  }

 private:
  std::size_t num_nodes_ = 0;
  NodeId source_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Arc> heads_weights_;
  std::vector<std::uint8_t> is_target_;
  InstanceMeta meta_;
};

struct GenParams {
  std::size_t n = 1000;
  double c = 8.0;
  double f = 20.0;
  std::uint64_t seed = 0;
  int min_iterations = 10;
};

// Directed G(n, c/n) with U[0,1) weights; every node is a target
// independently with probability f/n. Node 0 is the source. One Bernoulli
// draw per ordered pair, in row-major (tail, head) order. Throws
// std::invalid_argument unless 0 < c < n and 0 < f <= n.
Instance GenerateRandomInstance(const GenParams& params);

// True iff a target is reachable from the source and a pruning run settles
// strictly more than `min_iterations` nodes (the target included).
bool AcceptInstance(const Instance& inst, int min_iterations);

// The first `count` accepted instances of the stream keyed by params.seed.
// Attempt k uses seed DeriveSeed(params.seed, k); the seed stored in each
// instance's meta is that attempt seed.
std::vector<Instance> GenerateAcceptedInstances(const GenParams& params,
                                                std::size_t count,
                                                int jobs = 1);

// Worst-case family where perfect prediction saves nothing. Node layout:
// 0 = s, 1 = u1, 2 = u2, 3 = t (only target), 4.. = fan nodes v_i.
//   s -> u1 (eps), u1 -> v_i (1 - eps/2), s -> u2 ((1+eps)/2),
//   u2 -> t (1 - (1+eps)/2), so D = 1 and d(v_i) = 1 + eps/2.
// eps = 0 gives the perfect-prediction member. Throws unless 0 <= eps < 1
// and fan_out >= 0.
Instance GenerateNoSavingsInstance(double eps, int fan_out);

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Text format:
//   ssmtsp 1 <n> <m> <source> <seed>
//   # c <c> f <f>          (optional)
//   t <node>               (one per target)
//   e <tail> <head> <w>    (weights with 17 significant digits)
void SaveInstance(const Instance& inst, std::ostream& out);
Instance LoadInstance(std::istream& in);
void SaveInstanceFile(const Instance& inst, const std::string& path);
Instance LoadInstanceFile(const std::string& path);

}  // namespace ssmtsp

#endif  // SSMTSP_INSTANCE_H_
