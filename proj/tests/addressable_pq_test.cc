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

#include <algorithm>
#include <cmath>
#include <random>
#include <tuple>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "testing/oracles.h"

namespace ssmtsp {
namespace {

TEST(AddressablePqTest, InsertIntoEmpty) {
  AddressablePq pq(10);
  EXPECT_TRUE(pq.IsEmpty());
  EXPECT_EQ(pq.Size(), 0u);
  pq.Insert(3, 0.5);
  EXPECT_EQ(pq.MinPrio(), 0.5);
  EXPECT_EQ(pq.Size(), 1u);
  EXPECT_EQ(pq.counters().inserts, 1u);
}

TEST(AddressablePqTest, RemoveMinPicksSmallest) {
  AddressablePq pq(10);
  pq.Insert(1, 0.2);
  pq.Insert(2, 0.1);
  const PqEntry e = pq.RemoveMin();
  EXPECT_EQ(e.key, 2u);
  EXPECT_EQ(e.priority, 0.1);
}

TEST(AddressablePqTest, TiesBreakBySmallerKey) {
  AddressablePq pq(10);
  pq.Insert(5, 0.3);
  pq.Insert(2, 0.3);
  EXPECT_EQ(pq.RemoveMin().key, 2u);
  EXPECT_EQ(pq.RemoveMin().key, 5u);
}

TEST(AddressablePqTest, DecreaseMovesKeyToFront) {
  AddressablePq pq(10);
  pq.Insert(1, 0.3);
  pq.Insert(4, 0.5);
  pq.Insert(7, 0.9);
  pq.DecreasePrio(7, 0.1);
  EXPECT_EQ(pq.RemoveMin().key, 7u);
  EXPECT_EQ(pq.counters().decrease_prios, 1u);
}

TEST(AddressablePqTest, ContractViolations) {
  AddressablePq pq(4);
  pq.Insert(1, 0.5);
  EXPECT_THROW(pq.DecreasePrio(1, 0.5), ContractViolation);
  EXPECT_THROW(pq.DecreasePrio(1, 0.7), ContractViolation);
  EXPECT_THROW(pq.DecreasePrio(2, 0.1), ContractViolation);
  EXPECT_THROW(pq.Insert(1, 0.1), ContractViolation);
  EXPECT_THROW(pq.Insert(4, 0.1), ContractViolation);
  EXPECT_THROW(pq.Insert(2, std::nan("")), ContractViolation);
  AddressablePq empty(4);
  EXPECT_THROW(empty.RemoveMin(), ContractViolation);
  EXPECT_THROW(empty.MinPrio(), ContractViolation);
}

TEST(AddressablePqTest, CumulativeSizeSamples) {
  AddressablePq pq(10);
  for (int i = 0; i < 3; ++i) pq.SampleSize();
  EXPECT_EQ(pq.counters().cumulative_size, 0u);
  for (NodeId k = 0; k < 5; ++k) pq.Insert(k, 0.1 * k);
  pq.SampleSize();
  pq.SampleSize();
  EXPECT_EQ(pq.counters().cumulative_size, 10u);
}

TEST(AddressablePqTest, DrainOrderMatchesSort) {
  std::mt19937_64 rng(1);
  AddressablePq pq(100);
  std::vector<std::pair<double, NodeId>> expected;
  for (NodeId k = 0; k < 100; ++k) {
    const double p = std::uniform_real_distribution<>(0, 1)(rng);
    pq.Insert(k, p);
    expected.emplace_back(p, k);
  }
  std::sort(expected.begin(), expected.end());
  for (const auto& [p, k] : expected) {
    const PqEntry e = pq.RemoveMin();
    EXPECT_EQ(e.key, k);
    EXPECT_EQ(e.priority, p);
  }
  EXPECT_TRUE(pq.IsEmpty());
}

TEST(AddressablePqTest, ConservationOnInsertRemoveScripts) {
  std::mt19937_64 rng(2);
  AddressablePq pq(64);
  NodeId next = 0;
  for (int step = 0; step < 500; ++step) {
    if (next < 64 && (pq.IsEmpty() || rng() % 2 == 0)) {
      pq.Insert(next++, std::uniform_real_distribution<>(0, 1)(rng));
    } else if (!pq.IsEmpty()) {
      pq.RemoveMin();
    }
    EXPECT_EQ(pq.Size(),
              pq.counters().inserts - pq.counters().remove_mins);
  }
}

// Random scripts of inserts, decreases and removals replayed on both queues.
TEST(AddressablePqTest, MatchesReferenceQueueOnRandomScripts) {
  std::mt19937_64 rng(3);
  for (int script = 0; script < 1000; ++script) {
    const NodeId capacity = 1 + static_cast<NodeId>(rng() % 40);
    const int ops = 1 + static_cast<int>(rng() % 200);
    // Coarse priorities so that ties are frequent.
    auto draw = [&] { return static_cast<double>(rng() % 16) / 16.0; };
    AddressablePq pq(capacity);
    testing::ReferenceQueue ref;
    for (int op = 0; op < ops; ++op) {
      const int kind = static_cast<int>(rng() % 3);
      const NodeId key = static_cast<NodeId>(rng() % capacity);
      if (kind == 0 && !ref.Contains(key)) {
        const double p = draw();
        pq.Insert(key, p);
        ref.Insert(key, p);
      } else if (kind == 1 && ref.Contains(key)) {
        const double p = *ref.PriorityOf(key) - (1 + rng() % 4) / 16.0;
        pq.DecreasePrio(key, p);
        ref.DecreasePrio(key, p);
      } else if (!ref.IsEmpty()) {
        const PqEntry got = pq.RemoveMin();
        const auto want = ref.RemoveMin();
        ASSERT_EQ(got.key, want.first) << "script " << script;
        ASSERT_EQ(got.priority, want.second);
      }
      ASSERT_EQ(pq.Size(), ref.Size());
      ASSERT_EQ(pq.IsEmpty(), ref.IsEmpty());
      if (!ref.IsEmpty()) ASSERT_EQ(pq.MinPrio(), ref.MinPrio());
      ASSERT_TRUE(pq.Validate()) << "script " << script << " op " << op;
      ASSERT_EQ(pq.Contains(key), ref.Contains(key));
    }
  }
}

TEST(AddressablePqTest, ClearKeepsCounters) {
  AddressablePq pq(4);
  pq.Insert(0, 0.1);
  pq.Insert(1, 0.2);
  pq.Clear();
  EXPECT_TRUE(pq.IsEmpty());
  EXPECT_FALSE(pq.Contains(0));
  EXPECT_EQ(pq.counters().inserts, 2u);
  pq.Insert(0, 0.3);
  EXPECT_EQ(pq.MinPrio(), 0.3);
}

}  // namespace
}  // namespace ssmtsp
