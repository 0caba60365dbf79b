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

#include "brickqec/tableau.hpp"

#include <stdexcept>
#include <unordered_map>

namespace brickqec {

namespace {

void require_same_n(int a, int b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string(what) + ": qubit count mismatch");
}

// The Hermitian Pauli sigma with masks (x, z) factors per qubit, so
// sigma = i^{popcount(x & z)} * X^x * Z^z when written as an all-X block
// followed by an all-Z block.
int xz_order_phase(const PauliOperator& p) {
  return std::popcount(p.x_mask & p.z_mask) & 3;
}

}  // namespace

CliffordTableau CliffordTableau::identity(int n) {
  CliffordTableau t;
  t.n = n;
  t.x_images.reserve(n);
  t.z_images.reserve(n);
  for (int q = 0; q < n; ++q) {
    t.x_images.push_back(PauliOperator::single(n, q, 'X'));
    t.z_images.push_back(PauliOperator::single(n, q, 'Z'));
  }
  return t;
}

CliffordTableau CliffordTableau::from_images(std::vector<PauliOperator> xs,
                                             std::vector<PauliOperator> zs) {
  CliffordTableau t;
  if (xs.size() != zs.size()) throw std::invalid_argument("from_images: size mismatch");
  t.n = static_cast<int>(xs.size());
  t.x_images = std::move(xs);
  t.z_images = std::move(zs);
  for (const auto& p : t.x_images) require_same_n(p.n, t.n, "from_images");
  for (const auto& p : t.z_images) require_same_n(p.n, t.n, "from_images");
  if (!t.is_symplectic())
    throw std::invalid_argument("from_images: images violate the symplectic condition");
  return t;
}

CliffordTableau CliffordTableau::from_image_strings(const std::vector<std::string>& images) {
  if (images.size() % 2 != 0)
    throw std::invalid_argument("from_image_strings: need 2n image strings");
  size_t n = images.size() / 2;
  std::vector<PauliOperator> xs, zs;
  for (size_t q = 0; q < n; ++q) xs.push_back(PauliOperator::from_string(images[q]));
  for (size_t q = 0; q < n; ++q) zs.push_back(PauliOperator::from_string(images[n + q]));
  return from_images(std::move(xs), std::move(zs));
}

bool CliffordTableau::is_symplectic() const {
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (x_images[i].commutes_with(z_images[j]) != (i != j)) return false;
      if (j > i) {
        if (!x_images[i].commutes_with(x_images[j])) return false;
        if (!z_images[i].commutes_with(z_images[j])) return false;
      }
    }
  }
  return true;
}

bool CliffordTableau::is_identity() const {
  for (int q = 0; q < n; ++q) {
    if (x_images[q] != PauliOperator::single(n, q, 'X')) return false;
    if (z_images[q] != PauliOperator::single(n, q, 'Z')) return false;
  }
  return true;
}

PauliOperator CliffordTableau::conjugate(const PauliOperator& p) const {
  require_same_n(p.n, n, "conjugate");
  // P = i^{p.phase + c} * prod_q X_q^{x_q} * prod_q Z_q^{z_q} with
  // c = popcount(x & z); conjugation maps each generator to its image.
  PauliOperator acc = PauliOperator::identity(n);
  uint64_t xs = p.x_mask;
  while (xs) {
    int q = std::countr_zero(xs);
    xs &= xs - 1;
    acc *= x_images[q];
  }
  uint64_t zs = p.z_mask;
  while (zs) {
    int q = std::countr_zero(zs);
    zs &= zs - 1;
    acc *= z_images[q];
  }
  acc.phase = (acc.phase + p.phase + xz_order_phase(p)) & 3;
  return acc;
}

PauliOperator CliffordTableau::conjugate_inverse(const PauliOperator& p) const {
  require_same_n(p.n, n, "conjugate_inverse");
  // Q = U† P U written as i^q * prod X_q^{a_q} * prod Z_q^{b_q}. The bits are
  // fixed by symplectic coordinates: a_q = 1 iff P anticommutes with the
  // image of Z_q, b_q = 1 iff P anticommutes with the image of X_q.
  PauliOperator q(n);
  for (int j = 0; j < n; ++j) {
    if (!p.commutes_with(z_images[j])) q.x_mask |= 1ull << j;
    if (!p.commutes_with(x_images[j])) q.z_mask |= 1ull << j;
  }
  // Reconstruct P from the images to recover the phase.
  PauliOperator acc = PauliOperator::identity(n);
  uint64_t xs = q.x_mask;
  while (xs) {
    int j = std::countr_zero(xs);
    xs &= xs - 1;
    acc *= x_images[j];
  }
  uint64_t zs = q.z_mask;
  while (zs) {
    int j = std::countr_zero(zs);
    zs &= zs - 1;
    acc *= z_images[j];
  }
  if (acc.x_mask != p.x_mask || acc.z_mask != p.z_mask)
    throw std::logic_error("conjugate_inverse: tableau is not symplectic");
  q.phase = (p.phase - xz_order_phase(q) - acc.phase) & 3;
  return q;
}

CliffordTableau CliffordTableau::inverse() const {
  CliffordTableau inv;
  inv.n = n;
  inv.x_images.reserve(n);
  inv.z_images.reserve(n);
  for (int q = 0; q < n; ++q)
    inv.x_images.push_back(conjugate_inverse(PauliOperator::single(n, q, 'X')));
  for (int q = 0; q < n; ++q)
    inv.z_images.push_back(conjugate_inverse(PauliOperator::single(n, q, 'Z')));
  return inv;
}

void CliffordTableau::apply_gate(const TwoQubitClifford& g, int x, int y) {
  if (x == y || x < 0 || y < 0 || x >= n || y >= n)
    throw std::invalid_argument("apply_gate: qubits out of range or equal");
  const uint64_t bx = 1ull << x;
  const uint64_t by = 1ull << y;
  auto conj_local = [&](PauliOperator& p) {
    int lx = static_cast<int>((p.x_mask >> x) & 1) | (static_cast<int>((p.x_mask >> y) & 1) << 1);
    int lz = static_cast<int>((p.z_mask >> x) & 1) | (static_cast<int>((p.z_mask >> y) & 1) << 1);
    if ((lx | lz) == 0) return;
    PauliOperator local(2);
    local.x_mask = static_cast<uint64_t>(lx);
    local.z_mask = static_cast<uint64_t>(lz);
    PauliOperator out = g.tableau.conjugate(local);
    p.x_mask = (p.x_mask & ~(bx | by)) | ((out.x_mask & 1) ? bx : 0) | ((out.x_mask & 2) ? by : 0);
    p.z_mask = (p.z_mask & ~(bx | by)) | ((out.z_mask & 1) ? bx : 0) | ((out.z_mask & 2) ? by : 0);
    p.phase = (p.phase + out.phase) & 3;
  };
  for (auto& p : x_images) conj_local(p);
  for (auto& p : z_images) conj_local(p);
}

std::vector<std::string> CliffordTableau::image_strings() const {
  std::vector<std::string> out;
  out.reserve(2 * n);
  for (const auto& p : x_images) out.push_back(p.str());
  for (const auto& p : z_images) out.push_back(p.str());
  return out;
}

namespace {

// 4-bit code of a 2-qubit Pauli: x bits in the low half, z bits in the high
// half.
bool codes_anticommute(int c1, int c2) {
  int x1 = c1 & 3, z1 = c1 >> 2;
  int x2 = c2 & 3, z2 = c2 >> 2;
  return (std::popcount(static_cast<unsigned>((x1 & z2) ^ (z1 & x2))) & 1) != 0;
}

PauliOperator pauli_from_code(int code, int sign_bit) {
  PauliOperator p(2);
  p.x_mask = static_cast<uint64_t>(code & 3);
  p.z_mask = static_cast<uint64_t>(code >> 2);
  p.phase = sign_bit ? 2 : 0;
  return p;
}

uint32_t pack_key(int cx0, int cz0, int cx1, int cz1, int signs) {
  return static_cast<uint32_t>(cx0) | (static_cast<uint32_t>(cz0) << 4) |
         (static_cast<uint32_t>(cx1) << 8) | (static_cast<uint32_t>(cz1) << 12) |
         (static_cast<uint32_t>(signs) << 16);
}

struct GroupTable {
  std::vector<TwoQubitClifford> elements;
  std::unordered_map<uint32_t, uint32_t> index_of;
};

const GroupTable& group_table() {
  static const GroupTable table = [] {
    GroupTable t;
    t.elements.reserve(11520);
    for (int cx0 = 1; cx0 < 16; ++cx0) {
      for (int cz0 = 1; cz0 < 16; ++cz0) {
        if (!codes_anticommute(cx0, cz0)) continue;
        for (int cx1 = 1; cx1 < 16; ++cx1) {
          if (codes_anticommute(cx1, cx0) || codes_anticommute(cx1, cz0)) continue;
          for (int cz1 = 1; cz1 < 16; ++cz1) {
            if (codes_anticommute(cz1, cx0) || codes_anticommute(cz1, cz0)) continue;
            if (!codes_anticommute(cz1, cx1)) continue;
            for (int signs = 0; signs < 16; ++signs) {
              TwoQubitClifford g;
              g.tableau.n = 2;
              g.tableau.x_images = {pauli_from_code(cx0, signs & 1),
                                    pauli_from_code(cx1, (signs >> 1) & 1)};
              g.tableau.z_images = {pauli_from_code(cz0, (signs >> 2) & 1),
                                    pauli_from_code(cz1, (signs >> 3) & 1)};
              g.index = static_cast<uint32_t>(t.elements.size());
              t.index_of.emplace(pack_key(cx0, cz0, cx1, cz1, signs), g.index);
              t.elements.push_back(std::move(g));
            }
          }
        }
      }
    }
    if (t.elements.size() != 11520)
      throw std::logic_error("two-qubit Clifford enumeration produced wrong group order");
    return t;
  }();
  return table;
}

}  // namespace

const std::vector<TwoQubitClifford>& two_qubit_clifford_table() {
  return group_table().elements;
}

uint32_t two_qubit_clifford_index(const CliffordTableau& t) {
  if (t.n != 2) throw std::invalid_argument("two_qubit_clifford_index: n != 2");
  auto code = [](const PauliOperator& p) {
    return static_cast<int>(p.x_mask & 3) | (static_cast<int>(p.z_mask & 3) << 2);
  };
  auto sign = [](const PauliOperator& p) { return (p.phase >> 1) & 1; };
  int signs = sign(t.x_images[0]) | (sign(t.x_images[1]) << 1) | (sign(t.z_images[0]) << 2) |
              (sign(t.z_images[1]) << 3);
  uint32_t key = pack_key(code(t.x_images[0]), code(t.z_images[0]), code(t.x_images[1]),
                          code(t.z_images[1]), signs);
  auto it = group_table().index_of.find(key);
  if (it == group_table().index_of.end())
    throw std::invalid_argument("two_qubit_clifford_index: not a canonical 2-qubit tableau");
  return it->second;
}

TwoQubitClifford sample_two_qubit_clifford(Rng& rng) {
  const auto& table = two_qubit_clifford_table();
  return table[rng.below(table.size())];
}

const std::vector<CliffordTableau>& one_qubit_clifford_table() {
  static const std::vector<CliffordTableau> table = [] {
    std::vector<CliffordTableau> t;
    for (int cx = 1; cx < 4; ++cx) {
      for (int cz = 1; cz < 4; ++cz) {
        if (cx == cz) continue;  // distinct non-identity letters anticommute
        for (int signs = 0; signs < 4; ++signs) {
          CliffordTableau g;
          g.n = 1;
          PauliOperator px(1), pz(1);
          px.x_mask = cx & 1;
          px.z_mask = cx >> 1;
          px.phase = (signs & 1) ? 2 : 0;
          pz.x_mask = cz & 1;
          pz.z_mask = cz >> 1;
          pz.phase = (signs & 2) ? 2 : 0;
          g.x_images = {px};
          g.z_images = {pz};
          t.push_back(std::move(g));
        }
      }
    }
    if (t.size() != 24) throw std::logic_error("one-qubit Clifford enumeration broken");
    return t;
  }();
  return table;
}

CliffordTableau hadamard_tableau() {
  return CliffordTableau::from_image_strings({"+Z", "+X"});
}

CliffordTableau phase_gate_tableau() {
  return CliffordTableau::from_image_strings({"+Y", "+Z"});
}

CliffordTableau cnot_tableau() {
  return CliffordTableau::from_image_strings({"+XX", "+IX", "+ZI", "+ZZ"});
}

}  // namespace brickqec
