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

#pragma once

#include <array>

namespace brickqec {

/// Single-qubit noise applied i.i.d. on every qubit. Either a Pauli channel
/// with probabilities (p_I, p_X, p_Y, p_Z) or an erasure channel with
/// probability p. Both reduce to a strength f in [0, 2]:
///   Pauli:   f = 2 log2(sqrt(p_I) + sqrt(p_X) + sqrt(p_Y) + sqrt(p_Z))
///   erasure: f = log2(1 + 3p)
struct NoiseModel {
  enum class Kind { kPauli, kErasure };

  Kind kind = Kind::kPauli;
  std::array<double, 4> p{1.0, 0.0, 0.0, 0.0};  // I, X, Y, Z
  double erasure_p = 0.0;

  static NoiseModel pauli(double pi, double px, double py, double pz);
  static NoiseModel depolarizing(double p);
  static NoiseModel erasure(double p);

  void validate() const;
  double strength_f() const;
};

/// lambda = 2^(f-1) for f in [0, 2].
double lambda_of_f(double f);

/// Depolarizing channel whose strength equals `f` (bisection on the
/// depolarizing family, f in [0, 2]).
NoiseModel depolarizing_with_strength(double f);

}  // namespace brickqec
