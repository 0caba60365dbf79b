// Copyright 2026 The brickqec Authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "brickqec/brickwork.hpp"

using namespace brickqec;

TEST_CASE("schedule for n=4") {
  BrickworkSpec spec{{1, 2, 2}, 1};
  auto sched = build_schedule(spec);
  REQUIRE(sched.size() == 2);
  CHECK(sched[0].x == 0);
  CHECK(sched[0].y == 1);
  CHECK(sched[1].x == 2);
  CHECK(sched[1].y == 3);

  spec.depth = 2;
  sched = build_schedule(spec);
  REQUIRE(sched.size() == 4);
  CHECK(sched[2].x == 1);
  CHECK(sched[2].y == 2);
  CHECK(sched[3].x == 3);
  CHECK(sched[3].y == 0);
}

TEST_CASE("depth zero gives an empty schedule and the identity circuit") {
  BrickworkSpec spec{{1, 2, 2}, 0};
  CHECK(build_schedule(spec).empty());
  Rng rng(1);
  CHECK(sample_circuit(spec, rng).is_identity());
}

TEST_CASE("every qubit appears exactly once per layer") {
  for (int m : {2, 3, 5}) {
    BrickworkSpec spec{{1, 2, m}, 6};
    const int n = spec.layout.n();
    auto sched = build_schedule(spec);
    CHECK(static_cast<long long>(sched.size()) == spec.gate_count());
    for (int layer = 0; layer < spec.depth; ++layer) {
      std::set<int> seen;
      for (const auto& slot : sched)
        if (slot.layer == layer) {
          CHECK(seen.insert(slot.x).second);
          CHECK(seen.insert(slot.y).second);
        }
      CHECK(static_cast<int>(seen.size()) == n);
    }
  }
}

TEST_CASE("odd n is rejected") {
  CHECK_THROWS_AS(BlockLayout({1, 3, 1}).validate(), std::invalid_argument);
}

TEST_CASE("logical positions") {
  CHECK(BlockLayout{1, 2, 2}.logical_positions() == std::vector<int>{0, 2});
  CHECK(BlockLayout{2, 5, 2}.logical_positions() == std::vector<int>{0, 1, 5, 6});
  CHECK(BlockLayout{4, 5, 2}.logical_positions() == std::vector<int>{0, 1, 2, 3, 5, 6, 7, 8});
  CHECK_THROWS_AS(BlockLayout({2, 2, 2}).validate(), std::invalid_argument);
}

TEST_CASE("same seed reproduces the circuit") {
  BrickworkSpec spec{{1, 2, 3}, 4};
  Rng rng1 = stream_rng(42, 0);
  Rng rng2 = stream_rng(42, 0);
  CHECK(sample_circuit(spec, rng1) == sample_circuit(spec, rng2));
  Rng rng3 = stream_rng(42, 1);
  CHECK_FALSE(sample_circuit(spec, rng1) == sample_circuit(spec, rng3));
}

TEST_CASE("light cone: conjugated single-qubit support grows at most 2 per layer") {
  for (int depth : {1, 2, 3}) {
    BrickworkSpec spec{{1, 2, 4}, depth};
    Rng rng = stream_rng(7, depth);
    CliffordTableau u = sample_circuit(spec, rng);
    for (int q = 0; q < spec.layout.n(); ++q) {
      for (char letter : {'X', 'Z'}) {
        PauliOperator image = u.conjugate(PauliOperator::single(spec.layout.n(), q, letter));
        CHECK(image.weight() <= 2 * depth);
      }
    }
  }
}

TEST_CASE("gate record matches the tableau") {
  BrickworkSpec spec{{1, 2, 2}, 2};
  Rng rng = stream_rng(3, 0);
  SampledCircuit circuit = sample_circuit_with_gates(spec, rng);
  CliffordTableau replay = CliffordTableau::identity(spec.layout.n());
  const auto& table = two_qubit_clifford_table();
  for (size_t i = 0; i < circuit.slots.size(); ++i)
    replay.apply_gate(table[circuit.gate_indices[i]], circuit.slots[i].x, circuit.slots[i].y);
  CHECK(replay == circuit.tableau);
}
