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

#include "brickqec/codecheck.hpp"

using namespace brickqec;

TEST_CASE("low-weight enumeration counts") {
  int count = 0;
  for_each_low_weight_pauli(4, 2, [&](const PauliOperator& p) {
    CHECK(p.weight() >= 1);
    CHECK(p.weight() <= 2);
    ++count;
    return true;
  });
  CHECK(count == 3 * 4 + 9 * 6);  // 3^1 C(4,1) + 3^2 C(4,2)
}

TEST_CASE("identity encoder has distance 1") {
  BlockLayout layout{1, 2, 2};
  CliffordTableau u = CliffordTableau::identity(4);
  FailureWitness witness;
  CHECK_FALSE(is_code(u, layout, 1, &witness));
  CHECK(witness.mu.weight() == 1);
  // The witness back-propagates to a logical-supported Pauli.
  bool logical_support =
      ((witness.backprop.x_mask | witness.backprop.z_mask) & layout.logical_mask()) != 0;
  CHECK(logical_support);
  DistanceReport report = code_distance(u, layout, 3);
  CHECK(report.exact);
  CHECK(report.distance == 1);
  CHECK_FALSE(forward_enumeration_check(u, layout, 1));
  CHECK_THROWS_AS(is_code(u, layout, 0), std::invalid_argument);
}

TEST_CASE("[[4,2,2]] encoder: valid tableau, distance exactly 2") {
  CliffordTableau u = four_two_two_encoder();
  REQUIRE(u.is_symplectic());
  BlockLayout layout{2, 4, 1};
  CHECK(is_code(u, layout, 1));
  CHECK_FALSE(is_code(u, layout, 2));
  CHECK(forward_enumeration_check(u, layout, 1));
  CHECK_FALSE(forward_enumeration_check(u, layout, 2));
  DistanceReport report = code_distance(u, layout, 4);
  CHECK(report.exact);
  CHECK(report.distance == 2);
  REQUIRE(report.witness.has_value());
  CHECK(report.witness->mu.weight() == 2);
}

TEST_CASE("weight-1 stabilizer does not disqualify a distance-2 code") {
  // [[4,2,2]] padded with two untouched ancilla qubits: the stabilizers Z_4
  // and Z_5 have weight 1, but the code still reports distance 2 because
  // back-propagated stabilizers carry an identity logical part.
  CliffordTableau u = CliffordTableau::from_image_strings({
      "+XXIIII", "+XIXIII", "+XXXIII", "+IIIZII", "+IIIIXI", "+IIIIIX",
      "+ZIZIII", "+ZZIIII", "+ZZZZII", "+XXXXII", "+IIIIZI", "+IIIIIZ",
  });
  REQUIRE(u.is_symplectic());
  BlockLayout layout{2, 6, 1};
  REQUIRE(layout.logical_positions() == std::vector<int>{0, 1});
  CHECK(is_code(u, layout, 1));
  DistanceReport report = code_distance(u, layout, 4);
  CHECK(report.distance == 2);
  CHECK(forward_enumeration_check(u, layout, 1));
}

TEST_CASE("monotonicity in d") {
  Rng rng = stream_rng(55, 0);
  BrickworkSpec spec{{1, 2, 3}, 2};
  for (int trial = 0; trial < 20; ++trial) {
    CliffordTableau u = sample_circuit(spec, rng);
    bool prev = true;
    for (int d = 1; d <= 4; ++d) {
      bool now = is_code(u, spec.layout, d);
      if (!prev) CHECK_FALSE(now);
      prev = now;
    }
  }
}

TEST_CASE("backprop agrees with forward enumeration on random circuits") {
  BrickworkSpec spec{{1, 2, 3}, 2};
  for (int trial = 0; trial < 50; ++trial) {
    Rng rng = stream_rng(77, trial);
    CliffordTableau u = sample_circuit(spec, rng);
    for (int d = 1; d <= 3; ++d)
      CHECK(is_code(u, spec.layout, d) == forward_enumeration_check(u, spec.layout, d));
  }
}

TEST_CASE("distance respects the light cone") {
  for (int depth : {1, 2}) {
    BrickworkSpec spec{{1, 2, 3}, depth};
    for (int trial = 0; trial < 20; ++trial) {
      Rng rng = stream_rng(99 + depth, trial);
      CliffordTableau u = sample_circuit(spec, rng);
      DistanceReport report = code_distance(u, spec.layout, 2 * depth);
      CHECK(report.exact);
      CHECK(report.distance <= 2 * depth);
    }
  }
}

TEST_CASE("failure probability at depth 0 is 1") {
  BrickworkSpec spec{{1, 2, 2}, 0};
  MCEstimate est = estimate_failure_probability(spec, 1, 50, 5);
  CHECK(est.mean == 1.0);
  CHECK(est.stderr_of_mean == 0.0);
}

TEST_CASE("failure estimates are deterministic under any worker count") {
  BrickworkSpec spec{{1, 2, 3}, 2};
  MCEstimate one = estimate_failure_probability(spec, 1, 200, 11, 1);
  MCEstimate four = estimate_failure_probability(spec, 1, 200, 11, 4);
  CHECK(one.mean == four.mean);
  CHECK(one.stderr_of_mean == four.stderr_of_mean);
}

TEST_CASE("forward enumeration guard") {
  BlockLayout layout{1, 2, 3};
  CliffordTableau u = CliffordTableau::identity(6);
  CHECK_THROWS_AS(forward_enumeration_check(u, layout, 1, nullptr, 16), std::length_error);
}
