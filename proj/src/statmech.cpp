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

#include "brickqec/statmech.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace brickqec {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

// Neumaier-compensated accumulator for the 2^n-term final reductions.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double v) {
    double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }
  double total() const { return sum + comp; }
};

double binom_double(int n, int j) {
  double b = 1.0;
  for (int i = 1; i <= j; ++i) b *= static_cast<double>(n - i + 1) / i;
  return b;
}

BigInt binom_exact(int n, int j) {
  BigInt b = 1;
  for (int i = 1; i <= j; ++i) {
    b *= n - i + 1;
    b /= i;
  }
  return b;
}

// 3^k * 2^n / 3^n; exact in double for n <= 64 is not guaranteed, so keep the
// pieces separate.
double prefactor(int n, int k) {
  return std::exp2(static_cast<double>(n)) * std::pow(3.0, static_cast<double>(k - n));
}

Rational prefactor_exact(int n, int k) {
  Rational r = Rational(BigInt(1) << n);
  BigInt pow3 = 1;
  for (int i = 0; i < n - k; ++i) pow3 *= 3;
  return r / Rational(pow3);
}

std::optional<Rational> dyadic_lambda(double lambda) {
  if (lambda == 0.5) return Rational(1, 2);
  if (lambda == 1.0) return Rational(1);
  if (lambda == 2.0) return Rational(2);
  return std::nullopt;
}

double ln_depth_constant(int b) {  // ln C with C = 10 * 3^(2b) * 2^b
  return std::log(10.0) + 2.0 * b * std::log(3.0) + b * std::log(2.0);
}

double hop_rate(double rate) {  // r = (2/5)(2^R + 2^-R)
  return 0.4 * (std::exp2(rate) + std::exp2(-rate));
}

}  // namespace

FinalWeighting FinalWeighting::aqec(double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("weighting: lambda must be > 0");
  FinalWeighting w;
  w.kind = Kind::kAqec;
  w.lambda = lambda;
  return w;
}

FinalWeighting FinalWeighting::qec(int d) {
  if (d < 1) throw std::invalid_argument("weighting: qec distance parameter d must be >= 1");
  FinalWeighting w;
  w.kind = Kind::kQec;
  w.d = d;
  return w;
}

double FinalWeighting::value(int w) const {
  if (kind == Kind::kAqec) return std::pow(lambda, w);
  if (w == 0) return 0.0;
  double sum = 0.0;
  int jmax = std::min(d, w);
  for (int j = 1; j <= jmax; ++j) sum += std::pow(3.0, j) * binom_double(w, j);
  return std::exp2(-static_cast<double>(w)) * sum;
}

bool FinalWeighting::exact_supported() const {
  return kind == Kind::kQec || dyadic_lambda(lambda).has_value();
}

Rational FinalWeighting::exact_value(int w) const {
  if (kind == Kind::kAqec) {
    auto lam = dyadic_lambda(lambda);
    if (!lam) throw std::invalid_argument("exact weighting requires lambda in {1/2, 1, 2}");
    Rational out = 1;
    for (int i = 0; i < w; ++i) out *= *lam;
    return out;
  }
  if (w == 0) return Rational(0);
  BigInt sum = 0;
  BigInt pow3 = 1;
  int jmax = std::min(d, w);
  for (int j = 1; j <= jmax; ++j) {
    pow3 *= 3;
    sum += pow3 * binom_exact(w, j);
  }
  return Rational(sum) / Rational(BigInt(1) << w);
}

template <typename Scalar>
ConfigWeights<Scalar> init_config_vector(const BlockLayout& layout) {
  layout.validate();
  const int n = layout.n();
  if (n > 28) throw std::length_error("init_config_vector: 2^n table too large (n > 28)");
  ConfigWeights<Scalar> v;
  v.n = n;
  v.w.assign(1ull << n, Scalar(0));
  const uint64_t logical = layout.logical_mask();
  const uint64_t ancilla = ((1ull << n) - 1) & ~logical;
  // All submasks of the ancilla positions, logical positions forced to S.
  uint64_t sub = 0;
  while (true) {
    v.w[logical | sub] = Scalar(1);
    if (sub == ancilla) break;
    sub = (sub - ancilla) & ancilla;
  }
  return v;
}

template <typename Scalar>
void apply_gate_transfer(ConfigWeights<Scalar>& v, int x, int y, const Scalar& factor) {
  const uint64_t bx = 1ull << x;
  const uint64_t by = 1ull << y;
  const uint64_t pair = bx | by;
  const uint64_t size = uint64_t(1) << v.n;
  for (uint64_t mask = 0; mask < size; ++mask) {
    if (mask & pair) continue;
    Scalar& w01 = v.w[mask | by];
    Scalar& w10 = v.w[mask | bx];
    Scalar u = w01 + w10;
    if (!(u == Scalar(0))) {
      Scalar moved = factor * u;
      v.w[mask] += moved;
      v.w[mask | pair] += moved;
    }
    w01 = Scalar(0);
    w10 = Scalar(0);
  }
}

template ConfigWeights<double> init_config_vector<double>(const BlockLayout&);
template ConfigWeights<Rational> init_config_vector<Rational>(const BlockLayout&);
template void apply_gate_transfer<double>(ConfigWeights<double>&, int, int, const double&);
template void apply_gate_transfer<Rational>(ConfigWeights<Rational>&, int, int, const Rational&);

namespace {

double reduce(const ConfigWeights<double>& v, const FinalWeighting& weighting, int n, int k) {
  // Group by S-count first; the final weight depends only on the count.
  std::vector<CompensatedSum> by_weight(n + 1);
  for (uint64_t mask = 0; mask < v.w.size(); ++mask)
    by_weight[std::popcount(mask)].add(v.w[mask]);
  CompensatedSum z;
  for (int w = 0; w <= n; ++w) z.add(weighting.value(w) * by_weight[w].total());
  return prefactor(n, k) * z.total();
}

Rational reduce_exact(const ConfigWeights<Rational>& v, const FinalWeighting& weighting, int n,
                      int k) {
  std::vector<Rational> by_weight(n + 1, Rational(0));
  for (uint64_t mask = 0; mask < v.w.size(); ++mask)
    by_weight[std::popcount(mask)] += v.w[mask];
  Rational z = 0;
  for (int w = 0; w <= n; ++w) z += weighting.exact_value(w) * by_weight[w];
  return prefactor_exact(n, k) * z;
}

void fill_metadata(PartitionResult& r, const BrickworkSpec& spec, const FinalWeighting& weighting) {
  r.n = spec.layout.n();
  r.k = spec.layout.k();
  r.a = spec.layout.a;
  r.b = spec.layout.b;
  r.m = spec.layout.m;
  r.depth = spec.depth;
  r.gates = spec.gate_count();
  r.weighting = weighting;
  r.below_one_design = spec.depth == 0;
  if (weighting.kind == FinalWeighting::Kind::kAqec) {
    r.lambda = weighting.lambda;
    r.f = std::log2(weighting.lambda) + 1.0;
  } else {
    r.lambda = kNan;
    r.f = kNan;
  }
}

void check_guard(const BrickworkSpec& spec, const StatmechOptions& opts) {
  spec.validate();
  if (spec.layout.n() > opts.max_qubits)
    throw std::length_error("partition_function: 2^n table exceeds the configured qubit cap (" +
                            std::to_string(opts.max_qubits) + ")");
}

}  // namespace

PartitionResult partition_function(const BrickworkSpec& spec, const FinalWeighting& weighting,
                                   const StatmechOptions& opts) {
  check_guard(spec, opts);
  const int n = spec.layout.n();
  const int k = spec.layout.k();
  const auto schedule = build_schedule(spec);

  PartitionResult result;
  fill_metadata(result, spec, weighting);

  auto v = init_config_vector<double>(spec.layout);
  for (const GateSlot& g : schedule) apply_gate_transfer(v, g.x, g.y, opts.transfer_factor);
  result.value = reduce(v, weighting, n, k);

  if (opts.exact) {
    if (!weighting.exact_supported())
      throw std::invalid_argument(
          "partition_function: exact mode requires a qec weighting or lambda in {1/2, 1, 2}");
    if (opts.transfer_factor != 0.4)
      throw std::invalid_argument("partition_function: exact mode requires the 2/5 factor");
    auto ve = init_config_vector<Rational>(spec.layout);
    const Rational hop(2, 5);
    for (const GateSlot& g : schedule) apply_gate_transfer(ve, g.x, g.y, hop);
    result.exact = reduce_exact(ve, weighting, n, k);
  }
  return result;
}

std::vector<double> partition_function_trace(const BrickworkSpec& spec,
                                             const FinalWeighting& weighting,
                                             const StatmechOptions& opts) {
  check_guard(spec, opts);
  const int n = spec.layout.n();
  const int k = spec.layout.k();
  auto v = init_config_vector<double>(spec.layout);
  std::vector<double> trace;
  trace.reserve(static_cast<size_t>(spec.gate_count()) + 1);
  trace.push_back(reduce(v, weighting, n, k));
  for (const GateSlot& g : build_schedule(spec)) {
    apply_gate_transfer(v, g.x, g.y, opts.transfer_factor);
    trace.push_back(reduce(v, weighting, n, k));
  }
  return trace;
}

double z_infinity_aqec(int n, int k, double f) {
  if (k < 0 || k >= n) throw std::invalid_argument("z_infinity_aqec: requires 0 <= k < n");
  const double nf = n * f;
  return (1.0 - std::exp2(static_cast<double>(k - n)) + std::exp2(k - n + nf) -
          std::exp2(nf - 2.0 * n)) /
         (1.0 - std::exp2(-2.0 * n));
}

double z_infinity_qec(int n, int k, int d) {
  if (d < 1 || 2 * d > n) throw std::invalid_argument("z_infinity_qec: requires 1 <= d <= n/2");
  if (k < 0 || k >= n) throw std::invalid_argument("z_infinity_qec: requires 0 <= k < n");
  double kay = 0.0;
  for (int j = 1; j <= d; ++j) kay += std::pow(3.0, j) * binom_double(n, j);
  return kay * (std::exp2(static_cast<double>(k - n)) - std::exp2(-2.0 * n)) /
         (1.0 - std::exp2(-2.0 * n));
}

double choi_error_bound(double z) {
  return std::pow(std::max(z - 1.0, 0.0), 0.25);
}

double aqec_depth_bound(int n, int k, int b, int depth, double f) {
  if (n <= 0 || k <= 0 || k >= n) throw std::invalid_argument("aqec_depth_bound: bad n, k");
  const double rate = static_cast<double>(k) / n;
  if (f > 1.0 - rate + 1e-15)
    throw std::invalid_argument("aqec_depth_bound: requires f <= 1 - k/n, got f = " +
                                std::to_string(f) + " > " + std::to_string(1.0 - rate));
  const double r = hop_rate(rate);
  // n C r^D in log space: C = 10 * 3^(2b) * 2^b overflows double for large b.
  const double ln_term = std::log(static_cast<double>(n)) + ln_depth_constant(b) +
                         depth * std::log(r);
  const double exponent = std::exp(ln_term);
  if (exponent > 700.0) return std::numeric_limits<double>::infinity();
  return z_infinity_aqec(n, k, f) * std::exp(exponent);
}

double qec_depth_bound(int n, int k, int b, int d, int depth) {
  if (n <= 0 || k <= 0 || k >= n) throw std::invalid_argument("qec_depth_bound: bad n, k");
  if (static_cast<long long>(k) * b % n != 0)
    throw std::invalid_argument("qec_depth_bound: k/n must reduce to a/b for the given b");
  const double rate = static_cast<double>(k) / n;
  const double f = 1.0 - rate;
  if (!(f > 0.0 && f < 1.0)) throw std::invalid_argument("qec_depth_bound: needs 0 < 1 - k/n < 1");
  if (d < 1) throw std::invalid_argument("qec_depth_bound: d must be >= 1");
  const double a_const = std::max(std::exp2(2.0 - f), 3.0 / (f * std::numbers::ln2));
  const double r = hop_rate(rate);
  const double ln_ncrd = std::log(static_cast<double>(n)) + ln_depth_constant(b) +
                         depth * std::log(r);
  const double ncrd = ln_ncrd > 700.0 ? std::numeric_limits<double>::infinity()
                                      : std::exp(ln_ncrd);
  const double exponent = std::log(static_cast<double>(d)) + d * std::log(a_const) +
                          ln_ncrd + ncrd;
  const double tail = exponent > 700.0 ? std::numeric_limits<double>::infinity()
                                       : std::exp(exponent);
  return z_infinity_qec(n, k, d) + tail;
}

double choi_error_scaling(double n, double c, double r) {
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("choi_error_scaling: requires 0 < r < 1");
  const double decay = std::abs(std::log2(r));
  if (!(c > 1.0 / decay))
    throw std::invalid_argument("choi_error_scaling: requires c > 1/|log2 r|");
  return std::pow(n, (1.0 - c * decay) / 4.0);
}

WeightCapSides qec_weight_cap(int w, int d, double f) {
  if (w < 1 || d < 1) throw std::invalid_argument("qec_weight_cap: requires w, d >= 1");
  if (!(f > 0.0 && f < 1.0)) throw std::invalid_argument("qec_weight_cap: requires 0 < f < 1");
  WeightCapSides sides;
  double sum = 0.0;
  int jmax = std::min(d, w);
  for (int j = 1; j <= jmax; ++j) sum += std::pow(3.0, j) * binom_double(w, j);
  sides.lhs = std::exp2(-f * w) * sum;
  const double a_const = std::max(std::exp2(2.0 - f), 3.0 / (f * std::numbers::ln2));
  sides.rhs = d * std::pow(a_const, d);
  return sides;
}

std::vector<ThresholdRow> scan_exact_threshold(const std::vector<int>& n_list, int a, int b,
                                               const std::function<int(int)>& d_of_n, double alpha,
                                               std::optional<double> linear_c) {
  if (!(alpha >= 0.0)) throw std::invalid_argument("scan: alpha must be >= 0");
  std::vector<ThresholdRow> rows;
  for (int n : n_list) {
    if (n % b != 0) throw std::invalid_argument("scan: every n must be a multiple of b");
    ThresholdRow row;
    row.n = n;
    row.k = a * (n / b);
    row.d = d_of_n(n);
    row.depth = static_cast<int>(std::ceil(alpha * row.d));
    row.z_inf_qec = z_infinity_qec(n, row.k, row.d);
    row.bound = qec_depth_bound(n, row.k, b, row.d, row.depth);
    row.below_one = row.bound < 1.0;
    if (linear_c) {
      const double c = *linear_c;
      const double entropy = (c <= 0.0 || c >= 1.0)
                                 ? 0.0
                                 : -c * std::log2(c) - (1.0 - c) * std::log2(1.0 - c);
      row.linear_rate_ok = c * std::log2(3.0) + entropy + static_cast<double>(a) / b < 1.0;
    }
    rows.push_back(row);
  }
  return rows;
}

int choose_scan_alpha(const std::vector<int>& n_list, int a, int b,
                      const std::function<int(int)>& d_of_n, int limit) {
  for (int alpha = 1; alpha <= limit; ++alpha) {
    auto rows = scan_exact_threshold(n_list, a, b, d_of_n, alpha);
    bool decreasing = true;
    for (size_t i = 1; i < rows.size(); ++i)
      if (!(rows[i].bound < rows[i - 1].bound)) decreasing = false;
    if (decreasing && !rows.empty() && rows.back().bound < 1.0) return alpha;
  }
  return limit;
}

}  // namespace brickqec
