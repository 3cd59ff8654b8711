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

#include "ssmtsp/addressable_pq.h"

#include <cmath>

namespace ssmtsp {

AddressablePq::AddressablePq(std::size_t capacity)
    : position_(capacity, kAbsent) {}

void AddressablePq::Insert(NodeId key, double priority) {
  if (key >= position_.size()) {
    throw ContractViolation("insert: key " + std::to_string(key) +
                            " out of range");
  }
  if (position_[key] != kAbsent) {
    throw ContractViolation("insert: key " + std::to_string(key) +
                            " already present");
  }
  if (std::isnan(priority)) throw ContractViolation("insert: NaN priority");
  heap_.push_back({key, priority});
  position_[key] = heap_.size() - 1;
  SiftUp(heap_.size() - 1);
  ++counters_.inserts;
}

PqEntry AddressablePq::RemoveMin() {
  if (heap_.empty()) throw ContractViolation("remove_min: empty queue");
  const PqEntry top = heap_.front();
  position_[top.key] = kAbsent;
  const PqEntry last = heap_.back();
  heap_.pop_back();
  if (!heap_.empty()) {
    Place(0, last);
    SiftDown(0);
  }
  ++counters_.remove_mins;
  return top;
}

void AddressablePq::DecreasePrio(NodeId key, double priority) {
  if (!Contains(key)) {
    throw ContractViolation("decrease_prio: key " + std::to_string(key) +
                            " not present");
  }
  const std::size_t slot = position_[key];
  if (!(priority < heap_[slot].priority)) {
    throw ContractViolation("decrease_prio: new priority for key " +
                            std::to_string(key) + " is not smaller");
  }
  heap_[slot].priority = priority;
  SiftUp(slot);
  ++counters_.decrease_prios;
}

double AddressablePq::MinPrio() const {
  if (heap_.empty()) throw ContractViolation("min_prio: empty queue");
  return heap_.front().priority;
}

double AddressablePq::PriorityOf(NodeId key) const {
  if (!Contains(key)) {
    throw ContractViolation("priority_of: key " + std::to_string(key) +
                            " not present");
  }
  return heap_[position_[key]].priority;
}

void AddressablePq::Clear() {
  for (const PqEntry& e : heap_) position_[e.key] = kAbsent;
  heap_.clear();
}

std::vector<NodeId> AddressablePq::Keys() const {
  std::vector<NodeId> keys;
  keys.reserve(heap_.size());
  for (const PqEntry& e : heap_) keys.push_back(e.key);
  return keys;
}

bool AddressablePq::Validate() const {
  std::size_t indexed = 0;
  for (std::size_t key = 0; key < position_.size(); ++key) {
    if (position_[key] == kAbsent) continue;
    ++indexed;
    if (position_[key] >= heap_.size() || heap_[position_[key]].key != key) {
      return false;
    }
  }
  if (indexed != heap_.size()) return false;
  for (std::size_t slot = 1; slot < heap_.size(); ++slot) {
    if (Less(heap_[slot], heap_[(slot - 1) / 2])) return false;
  }
  return true;
}

void AddressablePq::SiftUp(std::size_t slot) {
  const PqEntry entry = heap_[slot];
  while (slot > 0) {
    const std::size_t parent = (slot - 1) / 2;
    if (!Less(entry, heap_[parent])) break;
    Place(slot, heap_[parent]);
    slot = parent;
  }
  Place(slot, entry);
}

void AddressablePq::SiftDown(std::size_t slot) {
  const PqEntry entry = heap_[slot];
  const std::size_t size = heap_.size();
  while (true) {
    std::size_t child = 2 * slot + 1;
    if (child >= size) break;
    if (child + 1 < size && Less(heap_[child + 1], heap_[child])) ++child;
    if (!Less(heap_[child], entry)) break;
    Place(slot, heap_[child]);
    slot = child;
  }
  Place(slot, entry);
}

}  // namespace ssmtsp
