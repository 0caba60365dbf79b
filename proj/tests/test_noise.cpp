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

#include "brickqec/noise.hpp"

using namespace brickqec;

TEST_CASE("noise strengths") {
  CHECK(NoiseModel::pauli(1, 0, 0, 0).strength_f() == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(NoiseModel::pauli(0.25, 0.25, 0.25, 0.25).strength_f() == doctest::Approx(2.0));
  CHECK(NoiseModel::erasure(1.0 / 3.0).strength_f() == doctest::Approx(1.0));
  CHECK(NoiseModel::erasure(0.0).strength_f() == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(NoiseModel::erasure(1.0).strength_f() == doctest::Approx(2.0));
}

TEST_CASE("lambda of f") {
  CHECK(lambda_of_f(0.0) == 0.5);
  CHECK(lambda_of_f(1.0) == 1.0);
  CHECK(lambda_of_f(2.0) == 2.0);
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(NoiseModel::pauli(0.5, 0.5, 0.5, -0.5), std::invalid_argument);
  CHECK_THROWS_AS(NoiseModel::pauli(0.5, 0.1, 0.1, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(NoiseModel::erasure(1.5), std::invalid_argument);
}

TEST_CASE("depolarizing root solve hits the requested strength") {
  for (double f : {0.0, 0.3, 1.0, 1.7, 2.0}) {
    NoiseModel model = depolarizing_with_strength(f);
    CHECK(model.strength_f() == doctest::Approx(f).epsilon(1e-10));
  }
}
