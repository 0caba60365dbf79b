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
#include <map>
#include <vector>

#include "brickqec/statmech.hpp"

namespace brickqec {

/// Domain-wall configuration on the ring: edge e (between sites e and
/// e+1 mod n) is occupied iff the two sites carry different labels. The
/// occupied-edge count is always even.
struct DWConfig {
  int n = 0;
  uint32_t edges = 0;

  int wall_count() const { return std::popcount(edges); }
  bool operator==(const DWConfig&) const = default;
};

DWConfig dw_of_config(uint64_t mask, int n);

/// Inverse of dw_of_config given the label of site 0 (anchor_s: site 0 is S).
/// The two anchors produce complementary masks.
uint64_t config_of_dw(const DWConfig& g, bool anchor_s);

/// Options shared by the enumeration-based operations. The guard bounds the
/// branch count: 2^((b-a)m) initial configurations times 2^s branches.
struct EnumerationOptions {
  int max_qubits = 8;
  int max_depth = 4;
};

/// Exact brute-force sum over all configuration trajectories. Independent of
/// the transfer-matrix code path; this is the oracle partition_function is
/// checked against. Exact rationals when the weighting supports them.
PartitionResult enumerate_trajectories(const BrickworkSpec& spec, const FinalWeighting& weighting,
                                       const EnumerationOptions& opts = {});

/// Visits every configuration trajectory once. configs has gate_count() + 1
/// entries; hops is the number of 2/5 factors the trajectory accumulated.
void for_each_trajectory(const BrickworkSpec& spec,
                         const std::function<void(const std::vector<uint64_t>& configs, int hops)>& visit,
                         const EnumerationOptions& opts = {});

/// Domain-wall view of one configuration trajectory.
struct DWTrajectory {
  struct Event {
    enum class Kind { kNone, kHop, kAnnihilate };
    Kind kind = Kind::kNone;
    int from_edge = -1;
    int to_edge = -1;  // hop target, or the partner edge of an annihilation
  };

  int n = 0;
  std::vector<uint32_t> walls;        // edge masks, one per time step
  std::vector<Event> events;          // one per gate
  std::vector<int8_t> owner;          // (s+1) x n wall ids; -1 = empty edge
  std::vector<int> factors_by_wall;   // 2/5 factors attributed to each wall id
  std::vector<bool> wall_survived;
  int weight_exponent = 0;            // total number of 2/5 factors

  int wall_id_at(int t, int edge) const { return owner[static_cast<size_t>(t) * n + edge]; }
  int surviving_walls() const;
  double weight() const;
};

/// Follows the walls of a configuration trajectory gate by gate. Each gate on
/// pair (x, x+1) acts on edge x: an occupied acted edge either hops to a
/// neighboring edge or annihilates with the wall already there, and
/// contributes one 2/5 factor.
DWTrajectory track_domain_walls(const std::vector<uint64_t>& configs,
                                const std::vector<GateSlot>& schedule, int n);

/// Per-time edge masks and exact weight exponents of the annihilating (g0)
/// and surviving (gu) parts. The weight identity W = W(g0) * W(gu) holds
/// exactly: exponent == g0_exponent + gu_exponent.
struct SurvivorSplit {
  std::vector<uint32_t> g0_walls;
  std::vector<uint32_t> gu_walls;
  int g0_exponent = 0;
  int gu_exponent = 0;
  double g0_weight() const;
  double gu_weight() const;
};

SurvivorSplit decompose_survivors(const DWTrajectory& dwt);

/// Contribution to the partition function grouped by the number of surviving
/// wall pairs k0. The buckets sum to the partition-function value.
struct SurvivorBreakdown {
  std::map<int, double> contribution_by_pairs;
  double total = 0.0;
};

SurvivorBreakdown survivor_breakdown(const BrickworkSpec& spec, const FinalWeighting& weighting,
                                     const EnumerationOptions& opts = {});

}  // namespace brickqec
