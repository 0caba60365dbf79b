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

#include <array>
#include <utility>
#include <vector>

#include "brickqec/brickwork.hpp"
#include "brickqec/codecheck.hpp"
#include "brickqec/dense.hpp"
#include "brickqec/noise.hpp"
#include "brickqec/rng.hpp"

namespace brickqec {

/// Channel in Kraus form; sum_i K_i† K_i = identity.
struct ChannelRep {
  int in_dim = 0;
  int out_dim = 0;
  std::vector<Mat> kraus;

  Mat apply(const Mat& rho) const;
  Mat apply_adjoint(const Mat& x) const;
  /// Max-norm deviation of sum K†K from the identity.
  double completeness_defect() const;
};

/// Coefficients (alpha, beta) of the second-order Haar twirl of O on a
/// two-copy space: E[U⊗U O U†⊗U†] = alpha I + beta S.
std::pair<double, double> haar_second_moment_coeffs(const Mat& o);

struct TwirlEstimate {
  Mat mean;
  /// Frobenius norm of the entrywise standard errors.
  double stderr_frobenius = 0.0;
};

/// Sample mean of U^⊗2 O (U†)^⊗2 over N uniform Cliffords; d in {2, 4}.
TwirlEstimate clifford_twirl_empirical(const Mat& o, int d, long long samples, Rng& rng);

/// Complementary channel of i.i.d. single-qubit Pauli noise, mapping the
/// n-qubit system to a 4^n-dimensional environment: <mu|out|nu> =
/// tr(K_mu rho K_nu†) with K_mu = sqrt(p_mu) sigma_mu per qubit.
ChannelRep pauli_complementary_channel(const std::array<double, 4>& p, int n);

/// The complementary channel sandwiched with tau_E^(-1/4) on both sides,
/// where tau_E is the environment state of the maximally mixed input; the
/// inverse fourth root is taken on the support of tau_E.
ChannelRep tilde_channel(const std::array<double, 4>& p, int n);

/// Single-qubit two-copy object (Ntilde†)^⊗2 (S_E); its trace is 4 and its
/// overlap with the system swap is 4 * 2^(f-1).
Mat tilde_two_copy_object(const std::array<double, 4>& p);

/// Monte Carlo estimate of the second-moment quantity
/// 2^k E[tr((Ntilde(U rho U†))^2)] over sampled brickwork circuits, each
/// realized as a dense unitary from its tableau. Guarded to n <= 5; depth >= 1.
MCEstimate second_moment_sample(const BrickworkSpec& spec, const std::array<double, 4>& p,
                                long long samples, uint64_t seed, int workers = 1);

}  // namespace brickqec
