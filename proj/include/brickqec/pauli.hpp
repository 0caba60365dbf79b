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

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

namespace brickqec {

/// n-qubit Pauli operator, stored as i^phase * (tensor of I/X/Y/Z letters).
/// Bit q of x_mask/z_mask set <=> X resp. Z component on qubit q; the letter
/// Y corresponds to both bits set. Hermitian Paulis carry phase 0 or 2.
struct PauliOperator {
  int n = 0;
  uint64_t x_mask = 0;
  uint64_t z_mask = 0;
  int phase = 0;  // exponent of i, mod 4

  PauliOperator() = default;
  explicit PauliOperator(int num_qubits);

  static PauliOperator identity(int num_qubits) { return PauliOperator(num_qubits); }
  static PauliOperator single(int num_qubits, int qubit, char letter);
  /// Parses the canonical text form, e.g. "+XIZY", "-ZZ", "+iY".
  static PauliOperator from_string(std::string_view text);

  /// Number of qubits acted on nontrivially.
  int weight() const { return std::popcount(x_mask | z_mask); }
  bool is_identity() const { return (x_mask | z_mask) == 0; }

  char letter_at(int qubit) const;
  void set_letter(int qubit, char letter);

  bool commutes_with(const PauliOperator& other) const;

  /// Exact operator product with tracked phase.
  PauliOperator& operator*=(const PauliOperator& rhs);
  friend PauliOperator operator*(PauliOperator lhs, const PauliOperator& rhs) {
    lhs *= rhs;
    return lhs;
  }

  bool operator==(const PauliOperator&) const = default;

  std::string str() const;
};

}  // namespace brickqec
