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

#ifndef SSMTSP_ADDRESSABLE_PQ_H_
#define SSMTSP_ADDRESSABLE_PQ_H_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ssmtsp {

using NodeId = std::uint32_t;

// Raised when a caller breaks a queue precondition (duplicate insert,
// removal from an empty queue, non-decreasing decrease-key, ...).
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

// Operation counters. These are the quantities every experiment measures.
struct PqCounters {
  std::uint64_t inserts = 0;
  std::uint64_t remove_mins = 0;
  std::uint64_t decrease_prios = 0;
  // Sum of queue sizes over all SampleSize() calls.
  std::uint64_t cumulative_size = 0;
};

struct PqEntry {
  NodeId key;
  double priority;
};

// Binary min-heap over node ids 0..capacity-1 with a position index, so that
// DecreasePrio runs in O(log size). Ordering is lexicographic on
// (priority, key): equal priorities are broken towards the smaller node id.
class AddressablePq {
 public:
  explicit AddressablePq(std::size_t capacity);

  void Insert(NodeId key, double priority);
  PqEntry RemoveMin();
  void DecreasePrio(NodeId key, double priority);

  double MinPrio() const;
  bool IsEmpty() const { return heap_.empty(); }
  std::size_t Size() const { return heap_.size(); }
  bool Contains(NodeId key) const {
    return key < position_.size() && position_[key] != kAbsent;
  }
  // Priority of a contained key.
  double PriorityOf(NodeId key) const;

  // cumulative_size += Size().
  void SampleSize() { counters_.cumulative_size += heap_.size(); }

  // Removes every entry without touching the counters.
  void Clear();

  const PqCounters& counters() const { return counters_; }
  std::size_t capacity() const { return position_.size(); }

  // Keys currently stored, in heap-array order.
  std::vector<NodeId> Keys() const;

  // Checks heap order and index consistency in O(size).
  bool Validate() const;

 private:
  static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);

  static bool Less(const PqEntry& a, const PqEntry& b) {
    return a.priority < b.priority ||
           (a.priority == b.priority && a.key < b.key);
  }

  void SiftUp(std::size_t slot);
  void SiftDown(std::size_t slot);
  void Place(std::size_t slot, const PqEntry& entry) {
    heap_[slot] = entry;
    position_[entry.key] = slot;
  }

  std::vector<PqEntry> heap_;
  std::vector<std::size_t> position_;
  PqCounters counters_;
};

}  // namespace ssmtsp

#endif  // SSMTSP_ADDRESSABLE_PQ_H_
