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

#include "brickqec/channels.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "brickqec/parallel.hpp"

namespace brickqec {

namespace {

using Complex = std::complex<double>;

// Multi-index mu over {I, X, Z, Y}^n packed base 4, qubit 0 in the low bits;
// letter code x + 2z matches PauliOperator.
PauliOperator pauli_of_multi_index(uint64_t mu, int n) {
  PauliOperator p(n);
  for (int q = 0; q < n; ++q) {
    int code = static_cast<int>((mu >> (2 * q)) & 3);
    if (code & 1) p.x_mask |= 1ull << q;
    if (code & 2) p.z_mask |= 1ull << q;
  }
  return p;
}

double multi_index_probability(const std::array<double, 4>& p, uint64_t mu, int n) {
  // p is given in (I, X, Y, Z) order; letter codes are I=0, X=1, Z=2, Y=3.
  static constexpr int kCodeToChannelSlot[4] = {0, 1, 3, 2};
  double prob = 1.0;
  for (int q = 0; q < n; ++q)
    prob *= p[kCodeToChannelSlot[(mu >> (2 * q)) & 3]];
  return prob;
}

Complex pauli_row_amplitude(const PauliOperator& sigma, uint64_t s) {
  // <s| sigma = conj(amp) <s ^ x| with amp the amplitude of sigma|s>.
  static constexpr Complex kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  int ph = (sigma.phase + std::popcount(sigma.x_mask & sigma.z_mask)) & 3;
  if (std::popcount(sigma.z_mask & s) & 1) ph = (ph + 2) & 3;
  return std::conj(kPhases[ph]);
}

ChannelRep complementary_with_row_scale(const std::array<double, 4>& p, int n,
                                        double exponent) {
  if (n < 1 || n > 5) throw std::length_error("complementary channel guarded to 1 <= n <= 5");
  NoiseModel::pauli(p[0], p[1], p[2], p[3]);  // validates
  const uint64_t env_dim = uint64_t(1) << (2 * n);
  const uint64_t sys_dim = uint64_t(1) << n;
  ChannelRep rep;
  rep.in_dim = static_cast<int>(sys_dim);
  rep.out_dim = static_cast<int>(env_dim);
  rep.kraus.reserve(sys_dim);
  for (uint64_t s = 0; s < sys_dim; ++s) {
    Mat m = Mat::Zero(env_dim, sys_dim);
    for (uint64_t mu = 0; mu < env_dim; ++mu) {
      double prob = multi_index_probability(p, mu, n);
      if (prob == 0.0) continue;
      PauliOperator sigma = pauli_of_multi_index(mu, n);
      m(mu, s ^ sigma.x_mask) = std::pow(prob, exponent) * pauli_row_amplitude(sigma, s);
    }
    rep.kraus.push_back(std::move(m));
  }
  return rep;
}

}  // namespace

Mat ChannelRep::apply(const Mat& rho) const {
  Mat out = Mat::Zero(out_dim, out_dim);
  for (const Mat& k : kraus) out += k * rho * k.adjoint();
  return out;
}

Mat ChannelRep::apply_adjoint(const Mat& x) const {
  Mat out = Mat::Zero(in_dim, in_dim);
  for (const Mat& k : kraus) out += k.adjoint() * x * k;
  return out;
}

double ChannelRep::completeness_defect() const {
  Mat sum = Mat::Zero(in_dim, in_dim);
  for (const Mat& k : kraus) sum += k.adjoint() * k;
  return (sum - Mat::Identity(in_dim, in_dim)).cwiseAbs().maxCoeff();
}

std::pair<double, double> haar_second_moment_coeffs(const Mat& o) {
  const auto dim2 = o.rows();
  if (o.cols() != dim2) throw std::invalid_argument("haar coeffs: matrix must be square");
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(dim2))));
  if (d * d != dim2)
    throw std::invalid_argument("haar coeffs: dimension must be a perfect square");
  const Mat s = swap_operator(static_cast<int>(d));
  const double tr_o = o.trace().real();
  const double tr_so = (s * o).trace().real();
  const double dd = static_cast<double>(d);
  const double denom = dd * dd - 1.0;
  double alpha = tr_o / denom - tr_so / (dd * denom);
  double beta = tr_so / denom - tr_o / (dd * denom);
  return {alpha, beta};
}

TwirlEstimate clifford_twirl_empirical(const Mat& o, int d, long long samples, Rng& rng) {
  if (d != 2 && d != 4) throw std::invalid_argument("twirl: d must be 2 or 4");
  if (o.rows() != d * d || o.cols() != d * d)
    throw std::invalid_argument("twirl: O must act on the two-copy space");
  Mat sum = Mat::Zero(d * d, d * d);
  Eigen::MatrixXd sumsq = Eigen::MatrixXd::Zero(d * d, d * d);
  for (long long i = 0; i < samples; ++i) {
    Mat u = d == 2 ? tableau_to_dense(one_qubit_clifford_table()[rng.below(24)])
                   : tableau_to_dense(sample_two_qubit_clifford(rng).tableau);
    Mat uu = kron(u, u);
    Mat term = uu * o * uu.adjoint();
    sum += term;
    sumsq += term.cwiseAbs2();
  }
  TwirlEstimate est;
  est.mean = sum / static_cast<double>(samples);
  if (samples > 1) {
    double total_var = 0.0;
    for (Eigen::Index r = 0; r < sum.rows(); ++r) {
      for (Eigen::Index c = 0; c < sum.cols(); ++c) {
        double mean_sq = std::norm(est.mean(r, c));
        double var = sumsq(r, c) / samples - mean_sq;
        total_var += std::max(var, 0.0) / (samples - 1);
      }
    }
    est.stderr_frobenius = std::sqrt(total_var);
  }
  return est;
}

ChannelRep pauli_complementary_channel(const std::array<double, 4>& p, int n) {
  return complementary_with_row_scale(p, n, 0.5);
}

ChannelRep tilde_channel(const std::array<double, 4>& p, int n) {
  // tau_E is diagonal with entries prod_i p_{mu_i}; the sandwich
  // tau^(-1/4) K tau^(-1/4)-style scaling turns sqrt(p) rows into p^(1/4)
  // rows, with zero rows kept at zero (pseudo-inverse on the support).
  return complementary_with_row_scale(p, n, 0.25);
}

Mat tilde_two_copy_object(const std::array<double, 4>& p) {
  const ChannelRep tilde = tilde_channel(p, 1);
  const Mat s_env = swap_operator(4);
  Mat out = Mat::Zero(4, 4);
  for (const Mat& a : tilde.kraus)
    for (const Mat& b : tilde.kraus) out += kron(a, b).adjoint() * s_env * kron(a, b);
  return out;
}

MCEstimate second_moment_sample(const BrickworkSpec& spec, const std::array<double, 4>& p,
                                long long samples, uint64_t seed, int workers) {
  spec.validate();
  const int n = spec.layout.n();
  const int k = spec.layout.k();
  if (n > 5) throw std::length_error("second_moment_sample: dense verifier guarded to n <= 5");
  if (spec.depth < 1)
    throw std::invalid_argument("second_moment_sample: depth >= 1 required (1-design regime)");
  if (samples < 1) throw std::invalid_argument("second_moment_sample: samples >= 1");
  NoiseModel::pauli(p[0], p[1], p[2], p[3]);  // validates

  const uint64_t sys_dim = uint64_t(1) << n;
  const uint64_t ref_dim = uint64_t(1) << k;
  const uint64_t env_dim = uint64_t(1) << (2 * n);
  const auto logical = spec.layout.logical_positions();

  // |psi> = 2^(-k/2) sum_x |e(x)>_S |x>_R as a 2^n x 2^k matrix.
  Mat psi = Mat::Zero(sys_dim, ref_dim);
  const double amp = std::pow(0.5, 0.5 * k);
  for (uint64_t x = 0; x < ref_dim; ++x) {
    uint64_t embedded = 0;
    for (int i = 0; i < k; ++i)
      if ((x >> i) & 1) embedded |= 1ull << logical[i];
    psi(embedded, x) = amp;
  }

  // Quarter powers of the per-letter probabilities, in letter-code order.
  static constexpr int kCodeToChannelSlot[4] = {0, 1, 3, 2};
  std::array<double, 4> quarter{};
  for (int code = 0; code < 4; ++code) quarter[code] = std::pow(p[kCodeToChannelSlot[code]], 0.25);

  std::vector<double> values(samples, 0.0);
  parallel_for_index(samples, workers, [&](long long i) {
    Rng rng = stream_rng(seed, static_cast<uint64_t>(i));
    CliffordTableau tableau = sample_circuit(spec, rng);
    Mat u = tableau_to_dense(tableau);
    Mat psi_evolved = u * psi;

    // Column s of W is (Mtilde_s ⊗ I_R)|psi'>, flattened over (mu, r); row mu
    // of Mtilde_s picks amplitude psi'(s ^ x_mu, r) scaled by p_mu^(1/4).
    Mat w = Mat::Zero(static_cast<Eigen::Index>(env_dim * ref_dim), sys_dim);
    for (uint64_t mu = 0; mu < env_dim; ++mu) {
      double scale = 1.0;
      uint64_t x_mu = 0;
      for (int q = 0; q < n; ++q) {
        int code = static_cast<int>((mu >> (2 * q)) & 3);
        scale *= quarter[code];
        if (code & 1) x_mu |= 1ull << q;
      }
      if (scale == 0.0) continue;
      PauliOperator sigma = pauli_of_multi_index(mu, n);
      for (uint64_t s = 0; s < sys_dim; ++s) {
        Complex coeff = scale * pauli_row_amplitude(sigma, s);
        for (uint64_t r = 0; r < ref_dim; ++r)
          w(static_cast<Eigen::Index>(mu * ref_dim + r), s) = coeff * psi_evolved(s ^ x_mu, r);
      }
    }
    Mat gram = w.adjoint() * w;
    values[i] = std::exp2(static_cast<double>(k)) * gram.cwiseAbs2().sum();
  });

  MCEstimate est;
  est.count = samples;
  est.seed = seed;
  double sum = 0.0;
  for (double v : values) sum += v;
  est.mean = sum / static_cast<double>(samples);
  if (samples > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - est.mean) * (v - est.mean);
    est.stderr_of_mean = std::sqrt(ss / (samples - 1) / samples);
  }
  return est;
}

}  // namespace brickqec
