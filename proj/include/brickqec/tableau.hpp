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
#include <string>
#include <vector>

#include "brickqec/pauli.hpp"
#include "brickqec/rng.hpp"

namespace brickqec {

struct TwoQubitClifford;

/// Clifford unitary U represented by the conjugates of the 2n Pauli
/// generators: x_images[q] = U X_q U†, z_images[q] = U Z_q U†.
struct CliffordTableau {
  int n = 0;
  std::vector<PauliOperator> x_images;
  std::vector<PauliOperator> z_images;

  static CliffordTableau identity(int n);
  /// Builds from explicit generator images and validates the symplectic
  /// condition.
  static CliffordTableau from_images(std::vector<PauliOperator> xs,
                                     std::vector<PauliOperator> zs);
  static CliffordTableau from_image_strings(const std::vector<std::string>& images);

  /// Images preserve commutation: x_images[q] anticommutes with z_images[q]
  /// and commutes with every other image.
  bool is_symplectic() const;
  bool is_identity() const;

  /// U P U† with tracked phase.
  PauliOperator conjugate(const PauliOperator& p) const;
  /// U† P U; inverse of conjugate.
  PauliOperator conjugate_inverse(const PauliOperator& p) const;

  /// Tableau of U†.
  CliffordTableau inverse() const;

  /// Left-composes an embedded two-qubit gate: this <- (g on {x, y}) ∘ this.
  void apply_gate(const TwoQubitClifford& g, int x, int y);

  /// Generator-image strings in the order X_0..X_{n-1}, Z_0..Z_{n-1}.
  std::vector<std::string> image_strings() const;

  bool operator==(const CliffordTableau&) const = default;
};

struct TwoQubitClifford {
  CliffordTableau tableau;
  uint32_t index = 0;  // position in the canonical group table
};

/// The 2-qubit Clifford group modulo global phase, enumerated once in a fixed
/// canonical order. Exactly 11520 elements (720 symplectic images x 16 sign
/// choices).
const std::vector<TwoQubitClifford>& two_qubit_clifford_table();

/// Index of a 2-qubit tableau in the canonical table.
uint32_t two_qubit_clifford_index(const CliffordTableau& t);

/// Uniform over the 11520-element table.
TwoQubitClifford sample_two_qubit_clifford(Rng& rng);

/// The 1-qubit Clifford group modulo global phase (24 elements).
const std::vector<CliffordTableau>& one_qubit_clifford_table();

// Named gates used by tests and encoder constructions.
CliffordTableau hadamard_tableau();
CliffordTableau phase_gate_tableau();
CliffordTableau cnot_tableau();  // control 0, target 1

}  // namespace brickqec
