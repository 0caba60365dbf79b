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

#include "brickqec/noise.hpp"

#include <cmath>
#include <stdexcept>

namespace brickqec {

NoiseModel NoiseModel::pauli(double pi, double px, double py, double pz) {
  NoiseModel m;
  m.kind = Kind::kPauli;
  m.p = {pi, px, py, pz};
  m.validate();
  return m;
}

NoiseModel NoiseModel::depolarizing(double p) {
  return pauli(1.0 - p, p / 3.0, p / 3.0, p / 3.0);
}

NoiseModel NoiseModel::erasure(double p) {
  NoiseModel m;
  m.kind = Kind::kErasure;
  m.erasure_p = p;
  m.validate();
  return m;
}

void NoiseModel::validate() const {
  if (kind == Kind::kPauli) {
    double sum = 0.0;
    for (double v : p) {
      if (!(v >= 0.0)) throw std::invalid_argument("noise: Pauli probabilities must be >= 0");
      sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-12)
      throw std::invalid_argument("noise: Pauli probabilities must sum to 1");
  } else {
    if (!(erasure_p >= 0.0 && erasure_p <= 1.0))
      throw std::invalid_argument("noise: erasure probability must lie in [0, 1]");
  }
}

double NoiseModel::strength_f() const {
  validate();
  if (kind == Kind::kPauli) {
    double s = 0.0;
    for (double v : p) s += std::sqrt(v);
    return 2.0 * std::log2(s);
  }
  return std::log2(1.0 + 3.0 * erasure_p);
}

double lambda_of_f(double f) {
  return std::exp2(f - 1.0);
}

NoiseModel depolarizing_with_strength(double f) {
  if (!(f >= 0.0 && f <= 2.0))
    throw std::invalid_argument("depolarizing_with_strength: f must lie in [0, 2]");
  // Strength is increasing in p on [0, 3/4] and spans [0, 2] there.
  double lo = 0.0, hi = 0.75;
  for (int iter = 0; iter < 200; ++iter) {
    double mid = 0.5 * (lo + hi);
    if (NoiseModel::depolarizing(mid).strength_f() < f)
      lo = mid;
    else
      hi = mid;
  }
  return NoiseModel::depolarizing(0.5 * (lo + hi));
}

}  // namespace brickqec
