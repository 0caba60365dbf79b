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

#include <complex>

#include <Eigen/Dense>

#include "brickqec/pauli.hpp"
#include "brickqec/tableau.hpp"

namespace brickqec {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

/// Basis convention throughout: qubit q is bit q of the basis index, so
/// basis state |c> assigns bit (c >> q) & 1 to qubit q.
Mat dense_pauli(const PauliOperator& p);

/// out = sigma * in without materializing the matrix (signed permutation).
Vec apply_pauli(const PauliOperator& p, const Vec& in);

Mat kron(const Mat& a, const Mat& b);

/// Swap of the two copies of a dim-dimensional space: S |i,j> = |j,i>, with
/// the first copy on the high index bits (kron convention).
Mat swap_operator(int dim);

/// Dense unitary realizing the tableau, unique up to global phase; the phase
/// is fixed by making the largest-magnitude amplitude of U|0...0> real
/// positive. Guarded to n <= 5.
Mat tableau_to_dense(const CliffordTableau& t);

}  // namespace brickqec
