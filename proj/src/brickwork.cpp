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

#include "brickqec/brickwork.hpp"

#include <stdexcept>

namespace brickqec {

void BlockLayout::validate() const {
  if (a <= 0 || b <= 0 || m <= 0)
    throw std::invalid_argument("layout: a, b, m must be positive");
  if (a >= b) throw std::invalid_argument("layout: requires 0 < a < b");
  if (n() > 64) throw std::invalid_argument("layout: n = b*m exceeds 64 qubits");
  if (n() % 2 != 0)
    throw std::invalid_argument("layout: n = b*m must be even (ring brickwork)");
}

std::vector<int> BlockLayout::logical_positions() const {
  validate();
  std::vector<int> out;
  out.reserve(k());
  for (int i = 0; i < n(); ++i)
    if (i % b < a) out.push_back(i);
  return out;
}

uint64_t BlockLayout::logical_mask() const {
  uint64_t mask = 0;
  for (int i : logical_positions()) mask |= 1ull << i;
  return mask;
}

void BrickworkSpec::validate() const {
  layout.validate();
  if (depth < 0) throw std::invalid_argument("spec: depth must be >= 0");
}

std::vector<GateSlot> build_schedule(const BrickworkSpec& spec) {
  spec.validate();
  const int n = spec.layout.n();
  std::vector<GateSlot> schedule;
  schedule.reserve(static_cast<size_t>(spec.gate_count()));
  for (int layer = 0; layer < spec.depth; ++layer) {
    const int offset = layer % 2;
    for (int x = offset; x < n + offset - 1; x += 2)
      schedule.push_back({layer, x % n, (x + 1) % n});
  }
  return schedule;
}

CliffordTableau sample_circuit(const BrickworkSpec& spec, Rng& rng) {
  CliffordTableau t = CliffordTableau::identity(spec.layout.n());
  for (const GateSlot& slot : build_schedule(spec))
    t.apply_gate(sample_two_qubit_clifford(rng), slot.x, slot.y);
  return t;
}

SampledCircuit sample_circuit_with_gates(const BrickworkSpec& spec, Rng& rng) {
  SampledCircuit out;
  out.tableau = CliffordTableau::identity(spec.layout.n());
  out.slots = build_schedule(spec);
  out.gate_indices.reserve(out.slots.size());
  for (const GateSlot& slot : out.slots) {
    TwoQubitClifford g = sample_two_qubit_clifford(rng);
    out.gate_indices.push_back(g.index);
    out.tableau.apply_gate(g, slot.x, slot.y);
  }
  return out;
}

}  // namespace brickqec
