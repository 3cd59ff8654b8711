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

#include "ssmtsp/instance.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "ssmtsp/rng.h"
#include "ssmtsp/sssp.h"

namespace ssmtsp {

Instance::Instance(std::vector<std::vector<Arc>> arcs, NodeId source,
                   std::vector<bool> is_target, InstanceMeta meta)
    : num_nodes_(arcs.size()), source_(source), meta_(meta) {
  if (num_nodes_ == 0) throw std::invalid_argument("instance has no nodes");
  if (source >= num_nodes_) {
    throw std::invalid_argument("source " + std::to_string(source) +
                                " out of range");
  }
  if (is_target.size() != num_nodes_) {
    throw std::invalid_argument("target flag count does not match n");
  }
  is_target_.assign(is_target.begin(), is_target.end());
  std::vector<std::uint8_t> seen(num_nodes_, 0);
  offsets_.reserve(num_nodes_ + 1);
  for (NodeId u = 0; u < num_nodes_; ++u) {
    std::sort(arcs[u].begin(), arcs[u].end(),
              [](const Arc& a, const Arc& b) { return a.head < b.head; });
    for (const Arc& arc : arcs[u]) {
      if (arc.head >= num_nodes_) {
        throw std::invalid_argument("arc (" + std::to_string(u) + "," +
                                    std::to_string(arc.head) +
                                    ") head out of range");
      }
      if (arc.head == u) {
        throw std::invalid_argument("self-loop at node " + std::to_string(u));
      }
      if (!(arc.weight >= 0.0 && arc.weight <= 1.0)) {
        throw std::invalid_argument("arc (" + std::to_string(u) + "," +
                                    std::to_string(arc.head) +
                                    ") weight outside [0,1]");
      }
      if (seen[arc.head]) {
        throw std::invalid_argument("parallel arc (" + std::to_string(u) +
                                    "," + std::to_string(arc.head) + ")");
      }
      seen[arc.head] = 1;
      heads_weights_.push_back(arc);
    }
    for (const Arc& arc : arcs[u]) seen[arc.head] = 0;
    offsets_.push_back(heads_weights_.size());
  }
}

std::size_t Instance::NumTargets() const {
  return static_cast<std::size_t>(
      std::count(is_target_.begin(), is_target_.end(), 1));
}

Instance GenerateRandomInstance(const GenParams& params) {
  const std::size_t n = params.n;
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (!(params.c > 0.0 && params.c < static_cast<double>(n))) {
    throw std::invalid_argument("c must satisfy 0 < c < n");
  }
  if (!(params.f > 0.0 && params.f <= static_cast<double>(n))) {
    throw std::invalid_argument("f must satisfy 0 < f <= n");
  }
  if (params.min_iterations < 0) {
    throw std::invalid_argument("min_iterations must be non-negative");
  }
  Xoshiro256StarStar rng(params.seed);
  const double p = params.c / static_cast<double>(n);
  const double q = params.f / static_cast<double>(n);
  std::vector<std::vector<Arc>> arcs(n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      if (u == v) continue;
      if (rng.Bernoulli(p)) arcs[u].push_back({v, rng.Uniform()});
    }
  }
  std::vector<bool> is_target(n);
  for (std::size_t v = 0; v < n; ++v) is_target[v] = rng.Bernoulli(q);
  return Instance(std::move(arcs), 0, std::move(is_target),
                  {params.c, params.f, params.seed});
}

namespace {

bool TargetReachable(const Instance& inst) {
  std::vector<bool> visited(inst.num_nodes(), false);
  std::vector<NodeId> frontier{inst.source()};
  visited[inst.source()] = true;
  while (!frontier.empty()) {
    const NodeId u = frontier.back();
    frontier.pop_back();
    if (inst.IsTarget(u)) return true;
    for (const Arc& arc : inst.OutArcs(u)) {
      if (!visited[arc.head]) {
        visited[arc.head] = true;
        frontier.push_back(arc.head);
      }
    }
  }
  return false;
}

}  // namespace

bool AcceptInstance(const Instance& inst, int min_iterations) {
  if (!TargetReachable(inst)) return false;
  const PruningResult run = DijkstraPruning(inst);
  return run.stats.settled > static_cast<std::uint64_t>(min_iterations);
}

std::vector<Instance> GenerateAcceptedInstances(const GenParams& params,
                                                std::size_t count, int jobs) {
  jobs = std::max(jobs, 1);
  std::vector<Instance> accepted;
  accepted.reserve(count);
  std::uint64_t next_attempt = 0;
  while (accepted.size() < count) {
    // Attempts are evaluated in blocks; results are consumed in attempt
    // order so the output does not depend on `jobs`.
    const std::size_t block = std::max<std::size_t>(
        static_cast<std::size_t>(jobs), std::min<std::size_t>(
                                            count - accepted.size(), 64));
    std::vector<std::optional<Instance>> results(block);
    auto work = [&](std::size_t worker) {
      for (std::size_t k = worker; k < block; k += jobs) {
        GenParams attempt = params;
        attempt.seed = DeriveSeed(params.seed, next_attempt + k);
        Instance inst = GenerateRandomInstance(attempt);
        if (AcceptInstance(inst, params.min_iterations)) {
          results[k] = std::move(inst);
        }
      }
    };
    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (int w = 0; w < jobs; ++w) threads.emplace_back(work, w);
      for (auto& t : threads) t.join();
    }
    for (auto& result : results) {
      if (result && accepted.size() < count) {
        accepted.push_back(std::move(*result));
      }
    }
    next_attempt += block;
  }
  return accepted;
}

Instance GenerateNoSavingsInstance(double eps, int fan_out) {
  if (!(eps >= 0.0 && eps < 1.0)) {
    throw std::invalid_argument("eps must satisfy 0 <= eps < 1");
  }
  if (fan_out < 0) throw std::invalid_argument("fan_out must be >= 0");
  const std::size_t n = 4 + static_cast<std::size_t>(fan_out);
  std::vector<std::vector<Arc>> arcs(n);
  const double to_u2 = (1.0 + eps) / 2.0;
  arcs[0].push_back({1, eps});
  arcs[0].push_back({2, to_u2});
  arcs[2].push_back({3, 1.0 - to_u2});
  for (int i = 0; i < fan_out; ++i) {
    arcs[1].push_back({static_cast<NodeId>(4 + i), 1.0 - eps / 2.0});
  }
  std::vector<bool> is_target(n, false);
  is_target[3] = true;
  return Instance(std::move(arcs), 0, std::move(is_target));
}

void SaveInstance(const Instance& inst, std::ostream& out) {
  out << "ssmtsp 1 " << inst.num_nodes() << ' ' << inst.num_edges() << ' '
      << inst.source() << ' ' << inst.meta().seed << '\n';
  out << std::setprecision(17);
  out << "# c " << inst.meta().c << " f " << inst.meta().f << '\n';
  for (NodeId v = 0; v < inst.num_nodes(); ++v) {
    if (inst.IsTarget(v)) out << "t " << v << '\n';
  }
  for (NodeId u = 0; u < inst.num_nodes(); ++u) {
    for (const Arc& arc : inst.OutArcs(u)) {
      out << "e " << u << ' ' << arc.head << ' ' << arc.weight << '\n';
    }
  }
}

namespace {

class LineParser {
 public:
  LineParser(std::string_view line, std::size_t line_no)
      : line_(line), line_no_(line_no) {}

  template <typename T>
  T Next(const char* what) {
    while (pos_ < line_.size() && line_[pos_] == ' ') ++pos_;
    const char* begin = line_.data() + pos_;
    const char* end = line_.data() + line_.size();
    T value{};
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin || (ptr != end && *ptr != ' ')) {
      Fail(std::string("bad ") + what);
    }
    pos_ = static_cast<std::size_t>(ptr - line_.data());
    return value;
  }

  void ExpectEnd() {
    while (pos_ < line_.size() && line_[pos_] == ' ') ++pos_;
    if (pos_ != line_.size()) Fail("trailing characters");
  }

  [[noreturn]] void Fail(const std::string& why) const {
    throw ParseError("line " + std::to_string(line_no_) + " ('" +
                     std::string(line_) + "'): " + why);
  }

 private:
  std::string_view line_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

}  // namespace

Instance LoadInstance(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError("empty stream: missing header");
  ++line_no;
  if (line.rfind("ssmtsp ", 0) != 0) {
    throw ParseError("line 1: expected 'ssmtsp' header");
  }
  LineParser header(std::string_view(line).substr(7), line_no);
  if (header.Next<int>("version") != 1) header.Fail("unsupported version");
  const auto n = header.Next<std::size_t>("node count");
  const auto m = header.Next<std::size_t>("edge count");
  const auto source = header.Next<NodeId>("source");
  InstanceMeta meta;
  meta.seed = header.Next<std::uint64_t>("seed");
  header.ExpectEnd();
  if (n == 0) header.Fail("node count must be positive");
  if (source >= n) header.Fail("source out of range");

  std::vector<std::vector<Arc>> arcs(n);
  std::vector<bool> is_target(n, false);
  std::size_t edges = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (line.rfind("# c ", 0) == 0) {
        std::istringstream extra(line.substr(4));
        std::string f_tag;
        extra >> meta.c >> f_tag >> meta.f;
        if (!extra || f_tag != "f") {
          LineParser(line, line_no).Fail("bad meta comment");
        }
      }
      continue;
    }
    if (line.size() < 2 || line[1] != ' ') {
      LineParser(line, line_no).Fail("unknown record");
    }
    LineParser record(std::string_view(line).substr(2), line_no);
    if (line[0] == 't') {
      const auto v = record.Next<NodeId>("target node");
      record.ExpectEnd();
      if (v >= n) record.Fail("target out of range");
      if (is_target[v]) record.Fail("duplicate target");
      is_target[v] = true;
    } else if (line[0] == 'e') {
      const auto tail = record.Next<NodeId>("tail");
      const auto head = record.Next<NodeId>("head");
      const auto weight = record.Next<double>("weight");
      record.ExpectEnd();
      if (tail >= n || head >= n) record.Fail("node id out of range");
      if (tail == head) record.Fail("self-loop");
      if (!(weight >= 0.0 && weight <= 1.0)) record.Fail("weight outside [0,1]");
      for (const Arc& arc : arcs[tail]) {
        if (arc.head == head) record.Fail("duplicate edge");
      }
      arcs[tail].push_back({head, weight});
      ++edges;
    } else {
      record.Fail("unknown record");
    }
  }
  if (edges != m) {
    throw ParseError("header declares " + std::to_string(m) +
                     " edges but stream has " + std::to_string(edges) +
                     " (truncated?)");
  }
  return Instance(std::move(arcs), source, std::move(is_target), meta);
}

void SaveInstanceFile(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  SaveInstance(inst, out);
  if (!out) throw std::runtime_error("write failed: " + path);
}

Instance LoadInstanceFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return LoadInstance(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace ssmtsp
