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

#include "brickqec/pauli.hpp"

#include <stdexcept>

namespace brickqec {

namespace {

// Exponent of i in sigma_a * sigma_b, with 2-bit letter codes x + 2z
// (I=0, X=1, Z=2, Y=3). E.g. X*Z = -iY -> 3, Y*Z = iX -> 1.
constexpr int kProductPhase[4][4] = {
    {0, 0, 0, 0},  // I*
    {0, 0, 3, 1},  // X*
    {0, 1, 0, 3},  // Z*
    {0, 3, 1, 0},  // Y*
};

int letter_code(char letter) {
  switch (letter) {
    case 'I': return 0;
    case 'X': return 1;
    case 'Z': return 2;
    case 'Y': return 3;
    default: throw std::invalid_argument(std::string("invalid Pauli letter: ") + letter);
  }
}

constexpr char kCodeLetter[4] = {'I', 'X', 'Z', 'Y'};

}  // namespace

PauliOperator::PauliOperator(int num_qubits) : n(num_qubits) {
  if (num_qubits < 0 || num_qubits > 64)
    throw std::invalid_argument("PauliOperator: qubit count must be in [0, 64]");
}

PauliOperator PauliOperator::single(int num_qubits, int qubit, char letter) {
  PauliOperator p(num_qubits);
  if (qubit < 0 || qubit >= num_qubits)
    throw std::invalid_argument("PauliOperator::single: qubit out of range");
  p.set_letter(qubit, letter);
  return p;
}

char PauliOperator::letter_at(int qubit) const {
  int code = static_cast<int>((x_mask >> qubit) & 1) | (static_cast<int>((z_mask >> qubit) & 1) << 1);
  return kCodeLetter[code];
}

void PauliOperator::set_letter(int qubit, char letter) {
  int code = letter_code(letter);
  uint64_t bit = 1ull << qubit;
  x_mask = (x_mask & ~bit) | ((code & 1) ? bit : 0);
  z_mask = (z_mask & ~bit) | ((code & 2) ? bit : 0);
}

bool PauliOperator::commutes_with(const PauliOperator& other) const {
  if (n != other.n) throw std::invalid_argument("Pauli commutation: qubit count mismatch");
  uint64_t crossings = (x_mask & other.z_mask) ^ (z_mask & other.x_mask);
  return (std::popcount(crossings) & 1) == 0;
}

PauliOperator& PauliOperator::operator*=(const PauliOperator& rhs) {
  if (n != rhs.n) throw std::invalid_argument("Pauli product: qubit count mismatch");
  int extra = 0;
  // Only qubits where both factors act can contribute a phase.
  uint64_t overlap = (x_mask | z_mask) & (rhs.x_mask | rhs.z_mask);
  while (overlap) {
    int q = std::countr_zero(overlap);
    overlap &= overlap - 1;
    int a = static_cast<int>((x_mask >> q) & 1) | (static_cast<int>((z_mask >> q) & 1) << 1);
    int b = static_cast<int>((rhs.x_mask >> q) & 1) | (static_cast<int>((rhs.z_mask >> q) & 1) << 1);
    extra += kProductPhase[a][b];
  }
  phase = (phase + rhs.phase + extra) & 3;
  x_mask ^= rhs.x_mask;
  z_mask ^= rhs.z_mask;
  return *this;
}

PauliOperator PauliOperator::from_string(std::string_view text) {
  size_t pos = 0;
  int phase = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    phase = (text[pos] == '-') ? 2 : 0;
    ++pos;
    if (pos < text.size() && text[pos] == 'i') {
      phase = (phase + 1) & 3;
      ++pos;
    }
  }
  PauliOperator p(static_cast<int>(text.size() - pos));
  for (int q = 0; pos < text.size(); ++pos, ++q) p.set_letter(q, text[pos]);
  p.phase = phase;
  return p;
}

std::string PauliOperator::str() const {
  static const char* kPrefix[4] = {"+", "+i", "-", "-i"};
  std::string out = kPrefix[phase & 3];
  for (int q = 0; q < n; ++q) out.push_back(letter_at(q));
  return out;
}

}  // namespace brickqec
