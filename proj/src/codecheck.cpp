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

#include "brickqec/codecheck.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "brickqec/parallel.hpp"
#include "brickqec/rng.hpp"

namespace brickqec {

void for_each_low_weight_pauli(int n, int max_weight,
                               const std::function<bool(const PauliOperator&)>& fn) {
  if (max_weight < 1) throw std::invalid_argument("for_each_low_weight_pauli: weight cap < 1");
  max_weight = std::min(max_weight, n);
  std::vector<int> support(max_weight);
  std::vector<int> letters(max_weight);
  PauliOperator p(n);

  std::function<bool(int, int)> choose_letters = [&](int w, int idx) -> bool {
    if (idx == w) return fn(p);
    for (int code = 1; code <= 3; ++code) {
      letters[idx] = code;
      uint64_t bit = 1ull << support[idx];
      p.x_mask = (p.x_mask & ~bit) | ((code & 1) ? bit : 0);
      p.z_mask = (p.z_mask & ~bit) | ((code & 2) ? bit : 0);
      if (!choose_letters(w, idx + 1)) return false;
    }
    uint64_t bit = 1ull << support[idx];
    p.x_mask &= ~bit;
    p.z_mask &= ~bit;
    return true;
  };

  std::function<bool(int, int, int)> choose_support = [&](int w, int idx, int from) -> bool {
    if (idx == w) return choose_letters(w, 0);
    for (int q = from; q <= n - (w - idx); ++q) {
      support[idx] = q;
      if (!choose_support(w, idx + 1, q + 1)) return false;
    }
    return true;
  };

  for (int w = 1; w <= max_weight; ++w)
    if (!choose_support(w, 0, 0)) return;
}

namespace {

bool backprop_fails(const PauliOperator& backprop, uint64_t logical_mask, uint64_t ancilla_mask) {
  // Z-type on every ancilla and non-identity somewhere logical.
  if (backprop.x_mask & ancilla_mask) return false;
  return ((backprop.x_mask | backprop.z_mask) & logical_mask) != 0;
}

}  // namespace

bool is_code(const CliffordTableau& encoder, const BlockLayout& layout, int d,
             FailureWitness* witness) {
  layout.validate();
  if (encoder.n != layout.n()) throw std::invalid_argument("is_code: encoder size mismatch");
  if (d < 1) throw std::invalid_argument("is_code: requires d >= 1");
  const uint64_t logical = layout.logical_mask();
  const uint64_t ancilla = ((1ull << layout.n()) - 1) & ~logical;
  const CliffordTableau inverse = encoder.inverse();
  bool ok = true;
  for_each_low_weight_pauli(layout.n(), d, [&](const PauliOperator& mu) {
    PauliOperator back = inverse.conjugate(mu);
    if (backprop_fails(back, logical, ancilla)) {
      ok = false;
      if (witness) *witness = {mu, back};
      return false;
    }
    return true;
  });
  return ok;
}

DistanceReport code_distance(const CliffordTableau& encoder, const BlockLayout& layout, int cap) {
  if (cap < 1) throw std::invalid_argument("code_distance: requires cap >= 1");
  DistanceReport report;
  report.method = DistanceReport::Method::kBackprop;
  FailureWitness witness;
  // for_each_low_weight_pauli enumerates by increasing weight, so the first
  // failure is minimal.
  if (!is_code(encoder, layout, std::min(cap, layout.n()), &witness)) {
    report.distance = witness.mu.weight();
    report.exact = true;
    report.witness = witness;
  } else {
    report.distance = cap + 1;
    report.exact = false;
  }
  return report;
}

bool forward_enumeration_check(const CliffordTableau& encoder, const BlockLayout& layout, int d,
                               FailureWitness* witness, uint64_t guard) {
  layout.validate();
  if (encoder.n != layout.n()) throw std::invalid_argument("forward check: encoder size mismatch");
  if (d < 1) throw std::invalid_argument("forward check: requires d >= 1");
  const int n = layout.n();
  const int k = layout.k();
  const auto logical_positions = layout.logical_positions();
  std::vector<int> ancilla_positions;
  for (int q = 0; q < n; ++q)
    if (!(layout.logical_mask() >> q & 1)) ancilla_positions.push_back(q);

  const uint64_t total = (uint64_t(1) << (2 * k)) * (uint64_t(1) << (n - k));
  if (total > guard)
    throw std::length_error("forward check: 4^k * 2^(n-k) exceeds the enumeration guard");

  for (uint64_t la = 1; la < (uint64_t(1) << (2 * k)); ++la) {  // la == 0 is the identity
    PauliOperator logical_part(n);
    for (int i = 0; i < k; ++i) {
      int code = static_cast<int>((la >> (2 * i)) & 3);
      uint64_t bit = 1ull << logical_positions[i];
      if (code & 1) logical_part.x_mask |= bit;
      if (code & 2) logical_part.z_mask |= bit;
    }
    for (uint64_t zb = 0; zb < (uint64_t(1) << (n - k)); ++zb) {
      PauliOperator sigma = logical_part;
      for (int i = 0; i < n - k; ++i)
        if ((zb >> i) & 1) sigma.z_mask |= 1ull << ancilla_positions[i];
      PauliOperator image = encoder.conjugate(sigma);
      int w = image.weight();
      if (w >= 1 && w <= d) {
        if (witness) *witness = {image, sigma};
        return false;
      }
    }
  }
  return true;
}

MCEstimate estimate_failure_probability(const BrickworkSpec& spec, int d, long long samples,
                                        uint64_t seed, int workers) {
  spec.validate();
  if (samples < 1) throw std::invalid_argument("estimate: requires samples >= 1");
  std::vector<uint8_t> failed(samples, 0);
  parallel_for_index(samples, workers, [&](long long i) {
    Rng rng = stream_rng(seed, static_cast<uint64_t>(i));
    CliffordTableau u = sample_circuit(spec, rng);
    failed[i] = is_code(u, spec.layout, d) ? 0 : 1;
  });
  long long failures = 0;
  for (uint8_t f : failed) failures += f;
  MCEstimate est;
  est.count = samples;
  est.seed = seed;
  est.mean = static_cast<double>(failures) / static_cast<double>(samples);
  if (samples > 1) {
    double variance = est.mean * (1.0 - est.mean) * samples / (samples - 1);
    est.stderr_of_mean = std::sqrt(variance / samples);
  }
  return est;
}

CliffordTableau four_two_two_encoder() {
  return CliffordTableau::from_image_strings({
      "+XXII", "+XIXI", "+XXXI", "+IIIZ",  // images of X_0..X_3
      "+ZIZI", "+ZZII", "+ZZZZ", "+XXXX",  // images of Z_0..Z_3
  });
}

}  // namespace brickqec
