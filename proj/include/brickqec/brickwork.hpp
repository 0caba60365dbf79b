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
#include <vector>

#include "brickqec/rng.hpp"
#include "brickqec/tableau.hpp"

namespace brickqec {

/// Interleaved qubit layout: m blocks, each holding a logical qubits followed
/// by b - a ancilla qubits. Logical positions are { i : i mod b < a }.
struct BlockLayout {
  int a = 1;  // logical qubits per block
  int b = 2;  // block size
  int m = 1;  // block count

  int n() const { return b * m; }
  int k() const { return a * m; }
  double rate() const { return static_cast<double>(a) / b; }

  void validate() const;

  std::vector<int> logical_positions() const;
  uint64_t logical_mask() const;
};

/// One scheduled gate: layer index (0-based) and the qubit pair (x, y) with
/// y = x + 1 mod n.
struct GateSlot {
  int layer = 0;
  int x = 0;
  int y = 0;
};

/// Brickwork circuit shape on a ring: depth layers of nearest-neighbor
/// 2-qubit gates, n * depth / 2 gates in total.
struct BrickworkSpec {
  BlockLayout layout;
  int depth = 1;

  long long gate_count() const { return static_cast<long long>(layout.n()) * depth / 2; }
  void validate() const;
};

/// Periodic schedule. Even-indexed layers pair (0,1),(2,3),...; odd-indexed
/// layers pair (1,2),(3,4),...,(n-1,0). Within a layer, gates are applied one
/// at a time in order of increasing first qubit.
std::vector<GateSlot> build_schedule(const BrickworkSpec& spec);

/// Applies gate_count() independently uniform 2-qubit Cliffords along the
/// schedule, starting from the identity tableau.
CliffordTableau sample_circuit(const BrickworkSpec& spec, Rng& rng);

/// As sample_circuit, but also records the drawn group-table index per slot
/// (used by the dense verifier).
struct SampledCircuit {
  CliffordTableau tableau;
  std::vector<GateSlot> slots;
  std::vector<uint32_t> gate_indices;
};
SampledCircuit sample_circuit_with_gates(const BrickworkSpec& spec, Rng& rng);

}  // namespace brickqec
