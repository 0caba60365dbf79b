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

#include <map>
#include <set>

#include "brickqec/dense.hpp"
#include "brickqec/rng.hpp"
#include "brickqec/tableau.hpp"

using namespace brickqec;

namespace {

CliffordTableau random_tableau(int n, Rng& rng, int gates = 20) {
  CliffordTableau t = CliffordTableau::identity(n);
  for (int i = 0; i < gates; ++i) {
    int x = static_cast<int>(rng.below(n));
    int y = (x + 1 + static_cast<int>(rng.below(n - 1))) % n;
    t.apply_gate(sample_two_qubit_clifford(rng), x, y);
  }
  return t;
}

PauliOperator random_pauli(int n, Rng& rng) {
  PauliOperator p(n);
  p.x_mask = rng.below(1ull << n);
  p.z_mask = rng.below(1ull << n);
  p.phase = static_cast<int>(rng.below(4));
  return p;
}

}  // namespace

TEST_CASE("identity tableau conjugation is the identity map") {
  auto t = CliffordTableau::identity(4);
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    PauliOperator p = random_pauli(4, rng);
    CHECK(t.conjugate(p) == p);
    CHECK(t.conjugate_inverse(p) == p);
  }
}

TEST_CASE("named gate conjugations") {
  CHECK(hadamard_tableau().conjugate(PauliOperator::from_string("X")).str() == "+Z");
  CHECK(hadamard_tableau().conjugate(PauliOperator::from_string("Z")).str() == "+X");
  CHECK(hadamard_tableau().conjugate(PauliOperator::from_string("Y")).str() == "-Y");
  CHECK(phase_gate_tableau().conjugate(PauliOperator::from_string("X")).str() == "+Y");
  CHECK(cnot_tableau().conjugate(PauliOperator::from_string("XI")).str() == "+XX");
  CHECK(cnot_tableau().conjugate_inverse(PauliOperator::from_string("XX")).str() == "+XI");
  CHECK(cnot_tableau().conjugate(PauliOperator::from_string("YY")).str() == "-XZ");
}

TEST_CASE("conjugate distributes over products") {
  Rng rng(5);
  CliffordTableau t = random_tableau(5, rng);
  for (int trial = 0; trial < 100; ++trial) {
    PauliOperator a = random_pauli(5, rng);
    PauliOperator b = random_pauli(5, rng);
    CHECK(t.conjugate(a * b) == t.conjugate(a) * t.conjugate(b));
  }
}

TEST_CASE("conjugate_inverse round trips") {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    CliffordTableau t = random_tableau(4, rng);
    PauliOperator p = random_pauli(4, rng);
    CHECK(t.conjugate(t.conjugate_inverse(p)) == p);
    CHECK(t.conjugate_inverse(t.conjugate(p)) == p);
  }
}

TEST_CASE("inverse composes to the identity") {
  Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    CliffordTableau t = random_tableau(4, rng);
    CliffordTableau inv = t.inverse();
    CHECK(inv.is_symplectic());
    for (int q = 0; q < 4; ++q) {
      CHECK(t.conjugate(inv.x_images[q]) == PauliOperator::single(4, q, 'X'));
      CHECK(t.conjugate(inv.z_images[q]) == PauliOperator::single(4, q, 'Z'));
    }
  }
}

TEST_CASE("sampled tableaux are symplectic and invert to the identity") {
  Rng rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    TwoQubitClifford g = sample_two_qubit_clifford(rng);
    CHECK(g.tableau.is_symplectic());
    CliffordTableau t = CliffordTableau::identity(2);
    t.apply_gate(g, 0, 1);
    CHECK(t == g.tableau);
    CliffordTableau inv = g.tableau.inverse();
    TwoQubitClifford ginv{inv, 0};
    t.apply_gate(ginv, 0, 1);
    CHECK(t.is_identity());
  }
}

TEST_CASE("group table has 11520 distinct canonical forms") {
  const auto& table = two_qubit_clifford_table();
  REQUIRE(table.size() == 11520);
  std::set<std::vector<std::string>> forms;
  for (const auto& g : table) forms.insert(g.tableau.image_strings());
  CHECK(forms.size() == 11520);
  CHECK(two_qubit_clifford_index(table[321].tableau) == 321);
}

TEST_CASE("sampler covers every canonical form at 1e6 draws") {
  Rng rng(17);
  std::vector<uint32_t> hits(11520, 0);
  for (int i = 0; i < 1000000; ++i) ++hits[sample_two_qubit_clifford(rng).index];
  for (uint32_t h : hits) {
    REQUIRE(h > 0);
  }
}

TEST_CASE("applying the identity gate changes nothing") {
  CliffordTableau id2 = CliffordTableau::identity(2);
  TwoQubitClifford identity_gate{id2, two_qubit_clifford_index(id2)};
  Rng rng(37);
  CliffordTableau t = random_tableau(4, rng);
  CliffordTableau before = t;
  t.apply_gate(identity_gate, 2, 0);
  CHECK(t == before);
}

TEST_CASE("applying a gate then its inverse restores the tableau") {
  Rng rng(19);
  CliffordTableau t = random_tableau(5, rng);
  CliffordTableau before = t;
  TwoQubitClifford g = sample_two_qubit_clifford(rng);
  TwoQubitClifford ginv{g.tableau.inverse(), 0};
  t.apply_gate(g, 1, 3);
  t.apply_gate(ginv, 1, 3);
  CHECK(t == before);
}

TEST_CASE("embedded gate matches dense conjugation at n=3") {
  Rng rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    TwoQubitClifford g = sample_two_qubit_clifford(rng);
    int x = static_cast<int>(rng.below(3));
    int y = (x + 1 + static_cast<int>(rng.below(2))) % 3;
    CliffordTableau t = CliffordTableau::identity(3);
    t.apply_gate(g, x, y);
    REQUIRE(t.is_symplectic());
    Mat u = tableau_to_dense(t);
    for (int q = 0; q < 3; ++q) {
      for (char letter : {'X', 'Z'}) {
        PauliOperator p = PauliOperator::single(3, q, letter);
        Mat lhs = u * dense_pauli(p) * u.adjoint();
        Mat rhs = dense_pauli(t.conjugate(p));
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-10);
      }
    }
    // Generators supported away from {x, y} are untouched.
    for (int q = 0; q < 3; ++q) {
      if (q == x || q == y) continue;
      CHECK(t.x_images[q] == PauliOperator::single(3, q, 'X'));
      CHECK(t.z_images[q] == PauliOperator::single(3, q, 'Z'));
    }
  }
}

TEST_CASE("uniformity: chi-square over all 11520 canonical forms") {
  // 10^7 draws binned by recomputed canonical index. Expected count ~868 per
  // bin; the statistic has mean 11519 and sd ~152, so a 5-sigma window is
  // [10760, 12279].
  Rng rng(29);
  std::vector<uint64_t> hits(11520, 0);
  const long long draws = 10000000;
  for (long long i = 0; i < draws; ++i) {
    const TwoQubitClifford& g = sample_two_qubit_clifford(rng);
    ++hits[two_qubit_clifford_index(g.tableau)];
  }
  const double expected = static_cast<double>(draws) / 11520.0;
  double chi2 = 0.0;
  for (uint64_t h : hits) {
    double delta = static_cast<double>(h) - expected;
    chi2 += delta * delta / expected;
  }
  CHECK(chi2 > 11519.0 - 5.0 * 151.8);
  CHECK(chi2 < 11519.0 + 5.0 * 151.8);
}

TEST_CASE("dimension mismatch is rejected") {
  auto t = CliffordTableau::identity(3);
  Rng rng(1);
  TwoQubitClifford g = sample_two_qubit_clifford(rng);
  CHECK_THROWS_AS(t.conjugate(PauliOperator::identity(2)), std::invalid_argument);
  CHECK_THROWS_AS(t.apply_gate(g, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(t.apply_gate(g, 0, 3), std::invalid_argument);
}
