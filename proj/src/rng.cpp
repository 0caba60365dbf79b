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

#include "brickqec/rng.hpp"

#include <stdexcept>

namespace brickqec {

uint64_t Rng::below(uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: bound must be >= 1");
  // Largest multiple of bound that fits in 64 bits; reject above it.
  const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

Rng stream_rng(uint64_t base_seed, uint64_t stream_index) {
  uint64_t state = base_seed;
  uint64_t a = splitmix64(state);
  state ^= 0x6A09E667F3BCC909ull * (stream_index + 1);
  uint64_t b = splitmix64(state);
  return Rng(a ^ (b * 0x2545F4914F6CDD1Dull + stream_index));
}

}  // namespace brickqec
