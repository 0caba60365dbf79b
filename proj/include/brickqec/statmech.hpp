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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "brickqec/brickwork.hpp"
#include "brickqec/noise.hpp"

namespace brickqec {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Final-time weighting of a configuration with w sites in the S state:
///   aqec: lambda^w
///   qec:  2^-w * sum_{j=1..min(d,w)} 3^j binom(w, j)   (0 at w = 0)
struct FinalWeighting {
  enum class Kind { kAqec, kQec };

  Kind kind = Kind::kAqec;
  double lambda = 1.0;
  int d = 1;

  static FinalWeighting aqec(double lambda);
  static FinalWeighting qec(int d);

  double value(int w) const;
  Rational exact_value(int w) const;  // requires exact_supported()
  /// Exact arithmetic needs a dyadic lambda (f in {0, 1, 2}); qec weights are
  /// always exact.
  bool exact_supported() const;

  std::string name() const { return kind == Kind::kAqec ? "aqec" : "qec"; }
};

/// Dense weight vector over configurations {I, S}^n, indexed by bitmask
/// (bit i set <=> site i is S).
template <typename Scalar>
struct ConfigWeights {
  int n = 0;
  std::vector<Scalar> w;
};

struct StatmechOptions {
  int max_qubits = 26;           // guards the 2^n table
  bool exact = false;            // compute an exact rational value as well
  double transfer_factor = 0.4;  // gate hop weight; a value other than 2/5
                                 // models a corrupted implementation and is
                                 // only used by the self-test mutation hook
};

struct PartitionResult {
  double value = 0.0;
  std::optional<Rational> exact;
  int n = 0, k = 0, a = 0, b = 0, m = 0, depth = 0;
  long long gates = 0;
  double f = 0.0;       // log2(lambda) + 1 for aqec; NaN for qec
  double lambda = 0.0;  // aqec only; NaN for qec
  FinalWeighting weighting;
  bool below_one_design = false;  // depth 0: computable, but outside the
                                  // regime where the error bound applies
};

template <typename Scalar>
ConfigWeights<Scalar> init_config_vector(const BlockLayout& layout);

/// One gate of the transfer dynamics on the adjacent pair (x, y): masks equal
/// at (x, y) keep their weight; each of the two equal-bit masks additionally
/// receives factor * (mass of the two unequal-bit masks agreeing elsewhere);
/// unequal-bit masks drop to zero.
template <typename Scalar>
void apply_gate_transfer(ConfigWeights<Scalar>& v, int x, int y, const Scalar& factor);

/// Exact evaluation of the partition function by schedule-ordered transfer
/// dynamics. value = 3^k * (2^n / 3^n) * sum_mask finalweight(|mask|) * v[mask].
PartitionResult partition_function(const BrickworkSpec& spec, const FinalWeighting& weighting,
                                   const StatmechOptions& opts = {});

/// Partition-function value after each gate (gate_count() + 1 entries,
/// starting with the gateless value).
std::vector<double> partition_function_trace(const BrickworkSpec& spec,
                                             const FinalWeighting& weighting,
                                             const StatmechOptions& opts = {});

/// Infinite-depth closed forms.
double z_infinity_aqec(int n, int k, double f);
double z_infinity_qec(int n, int k, int d);

/// (max(Z - 1, 0))^(1/4); clamps the floating-point underflow of Z - 1.
double choi_error_bound(double z);

/// Depth-dependent upper bound on the aqec partition function:
/// z_infinity_aqec * exp(n C r^D) with C = 10 * 3^(2b) * 2^b and
/// r = (2/5)(2^R + 2^-R), R = k/n. Requires f <= 1 - k/n.
double aqec_depth_bound(int n, int k, int b, int depth, double f);

/// Depth-dependent upper bound on the qec partition function:
/// z_infinity_qec + exp(ln d + d ln A + ln n + ln C + D ln r + n C r^D) with
/// A = max{2^(2-f), 3 / (f ln 2)} and f = 1 - k/n in (0, 1).
double qec_depth_bound(int n, int k, int b, int d, int depth);

/// Asymptotic error-decay rate n^((1 - c |log2 r|) / 4); requires
/// c > 1 / |log2 r| so the exponent is negative.
double choi_error_scaling(double n, double c, double r);

/// Both sides of the uniform cap on the rescaled qec final weight:
/// lhs = 2^(-f w) * sum_{j=1..min(d,w)} 3^j binom(w, j), rhs = d A^d.
struct WeightCapSides {
  double lhs = 0.0;
  double rhs = 0.0;
};
WeightCapSides qec_weight_cap(int w, int d, double f);

/// One row of the exact-threshold scan.
struct ThresholdRow {
  int n = 0, k = 0, d = 0, depth = 0;
  double z_inf_qec = 0.0;
  double bound = 0.0;
  bool below_one = false;
  std::optional<bool> linear_rate_ok;  // only for linear d(n) = c * n
};

/// Evaluates qec_depth_bound at depth = ceil(alpha * d(n)) for each n. For a
/// linear distance profile d(n) = c * n, also reports whether the rate
/// constraint c log2(3) + H(c) + a/b < 1 holds.
std::vector<ThresholdRow> scan_exact_threshold(const std::vector<int>& n_list, int a, int b,
                                               const std::function<int(int)>& d_of_n,
                                               double alpha,
                                               std::optional<double> linear_c = std::nullopt);

/// Smallest integer alpha in [1, limit] whose scan column is strictly
/// decreasing and ends below 1; returns limit if none qualifies.
int choose_scan_alpha(const std::vector<int>& n_list, int a, int b,
                      const std::function<int(int)>& d_of_n, int limit = 64);

}  // namespace brickqec
