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

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "brickqec/brickwork.hpp"
#include "brickqec/tableau.hpp"

namespace brickqec {

/// A low-weight physical Pauli whose back-propagated form acts nontrivially
/// on the logical positions while staying Z-type on the ancillas; its
/// existence disqualifies the encoder at the corresponding distance.
struct FailureWitness {
  PauliOperator mu;        // physical error
  PauliOperator backprop;  // U† sigma_mu U
};

/// Encoder distance verdict. When exact is false the distance is only known
/// to exceed the search cap (reported value = cap + 1).
struct DistanceReport {
  enum class Method { kBackprop, kEnumerate };

  int distance = 0;
  bool exact = true;
  std::optional<FailureWitness> witness;
  Method method = Method::kBackprop;
};

/// True iff no Pauli of weight in [1, d] back-propagates through U to a
/// Pauli that is Z-type on every ancilla position and non-identity on the
/// logical positions. Back-propagated stabilizers (identity logical part) do
/// not disqualify the code, so degenerate codes are accepted.
bool is_code(const CliffordTableau& encoder, const BlockLayout& layout, int d,
             FailureWitness* witness = nullptr);

/// Smallest w <= cap at which is_code fails, with witness; exact = false and
/// distance = cap + 1 when no failure is found.
DistanceReport code_distance(const CliffordTableau& encoder, const BlockLayout& layout, int cap);

/// Same verdict as is_code, computed in the forward direction: conjugates
/// every logical/ancilla-Z pair through U and checks the minimum image
/// weight. This is the oracle for is_code; cost 4^k * 2^(n-k).
bool forward_enumeration_check(const CliffordTableau& encoder, const BlockLayout& layout, int d,
                               FailureWitness* witness = nullptr,
                               uint64_t guard = uint64_t(1) << 24);

/// Mean and standard error of a Monte Carlo estimate.
struct MCEstimate {
  double mean = 0.0;
  double stderr_of_mean = 0.0;
  long long count = 0;
  uint64_t seed = 0;
};

/// Fraction of `samples` independently sampled circuits that fail is_code at
/// distance parameter d. Sample i uses rng stream (seed, i), so the estimate
/// does not depend on the worker count.
MCEstimate estimate_failure_probability(const BrickworkSpec& spec, int d, long long samples,
                                        uint64_t seed, int workers = 1);

/// Enumerates Pauli patterns of weight 1..max_weight in order of increasing
/// weight; stops early when fn returns false.
void for_each_low_weight_pauli(int n, int max_weight,
                               const std::function<bool(const PauliOperator&)>& fn);

/// Encoder of the [[4,2,2]] code (stabilizers XXXX and ZZZZ) with logical
/// positions {0, 1}; used by tests and as a worked example.
CliffordTableau four_two_two_encoder();

}  // namespace brickqec
