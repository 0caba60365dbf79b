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

#include "brickqec/dense.hpp"

#include <bit>
#include <stdexcept>

namespace brickqec {

namespace {

using Complex = std::complex<double>;

constexpr Complex kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// Amplitude of sigma |c>: sigma |c> = i^(phase + popcount(x&z)) *
// (-1)^popcount(z & c) |c ^ x>.
Complex pauli_amplitude(const PauliOperator& p, uint64_t c) {
  int ph = (p.phase + std::popcount(p.x_mask & p.z_mask)) & 3;
  if (std::popcount(p.z_mask & c) & 1) ph = (ph + 2) & 3;
  return kPhases[ph];
}

}  // namespace

Mat dense_pauli(const PauliOperator& p) {
  const uint64_t dim = uint64_t(1) << p.n;
  Mat m = Mat::Zero(dim, dim);
  for (uint64_t c = 0; c < dim; ++c) m(c ^ p.x_mask, c) = pauli_amplitude(p, c);
  return m;
}

Vec apply_pauli(const PauliOperator& p, const Vec& in) {
  const uint64_t dim = uint64_t(1) << p.n;
  if (static_cast<uint64_t>(in.size()) != dim)
    throw std::invalid_argument("apply_pauli: dimension mismatch");
  Vec out(dim);
  for (uint64_t c = 0; c < dim; ++c) out(c ^ p.x_mask) = pauli_amplitude(p, c) * in(c);
  return out;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Mat swap_operator(int dim) {
  Mat s = Mat::Zero(static_cast<Eigen::Index>(dim) * dim, static_cast<Eigen::Index>(dim) * dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) s(static_cast<Eigen::Index>(j) * dim + i, static_cast<Eigen::Index>(i) * dim + j) = 1.0;
  return s;
}

Mat tableau_to_dense(const CliffordTableau& t) {
  if (t.n > 5) throw std::length_error("tableau_to_dense: guarded to n <= 5");
  const uint64_t dim = uint64_t(1) << t.n;

  // |psi0> = U|0...0> is the unique state stabilized by the signed images of
  // Z_0..Z_{n-1}; project onto their joint +1 eigenspace.
  Mat projector = Mat::Identity(dim, dim);
  for (int q = 0; q < t.n; ++q)
    projector = 0.5 * (projector + dense_pauli(t.z_images[q]) * projector);

  Eigen::Index best = 0;
  double best_norm = -1.0;
  for (Eigen::Index col = 0; col < projector.cols(); ++col) {
    double norm = projector.col(col).norm();
    if (norm > best_norm) {
      best_norm = norm;
      best = col;
    }
  }
  if (best_norm < 1e-9) throw std::logic_error("tableau_to_dense: projector vanished");
  Vec psi0 = projector.col(best) / best_norm;
  Eigen::Index peak;
  psi0.cwiseAbs().maxCoeff(&peak);
  psi0 *= std::abs(psi0(peak)) / psi0(peak);

  // Column x of U is U|x> = (U X^x U†) U|0> = (product of X images) |psi0>.
  Mat u(dim, dim);
  for (uint64_t x = 0; x < dim; ++x) {
    PauliOperator image = PauliOperator::identity(t.n);
    uint64_t bits = x;
    while (bits) {
      int q = std::countr_zero(bits);
      bits &= bits - 1;
      image *= t.x_images[q];
    }
    u.col(x) = apply_pauli(image, psi0);
  }
  return u;
}

}  // namespace brickqec
