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

#include "brickqec/domainwall.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace brickqec {

namespace {

void check_enumeration_guard(const BrickworkSpec& spec, const EnumerationOptions& opts) {
  spec.validate();
  if (spec.layout.n() > opts.max_qubits || spec.depth > opts.max_depth)
    throw std::length_error("trajectory enumeration guard exceeded (n <= " +
                            std::to_string(opts.max_qubits) + ", depth <= " +
                            std::to_string(opts.max_depth) + ")");
}

// Visits initial configurations: logical sites forced to S, ancilla free.
template <typename Fn>
void for_each_initial_config(const BlockLayout& layout, Fn&& fn) {
  const uint64_t logical = layout.logical_mask();
  const uint64_t ancilla = ((1ull << layout.n()) - 1) & ~logical;
  uint64_t sub = 0;
  while (true) {
    fn(logical | sub);
    if (sub == ancilla) break;
    sub = (sub - ancilla) & ancilla;
  }
}

}  // namespace

DWConfig dw_of_config(uint64_t mask, int n) {
  DWConfig g;
  g.n = n;
  // Edge e occupied iff sites e and e+1 (mod n) differ.
  uint64_t rotated = ((mask >> 1) | (mask << (n - 1))) & ((1ull << n) - 1);
  g.edges = static_cast<uint32_t>(mask ^ rotated);
  return g;
}

uint64_t config_of_dw(const DWConfig& g, bool anchor_s) {
  if (g.wall_count() % 2 != 0)
    throw std::invalid_argument("config_of_dw: wall count must be even on a ring");
  uint64_t mask = 0;
  int bit = anchor_s ? 1 : 0;
  for (int site = 0; site < g.n; ++site) {
    mask |= static_cast<uint64_t>(bit) << site;
    if ((g.edges >> site) & 1) bit ^= 1;  // edge `site` separates site and site+1
  }
  return mask;
}

PartitionResult enumerate_trajectories(const BrickworkSpec& spec, const FinalWeighting& weighting,
                                       const EnumerationOptions& opts) {
  check_enumeration_guard(spec, opts);
  const int n = spec.layout.n();
  const int k = spec.layout.k();
  const auto schedule = build_schedule(spec);
  const size_t s = schedule.size();

  // counts[j][w] = number of trajectory leaves with j hop factors and final
  // S-count w. Exact integers; every weighting is assembled from them.
  std::vector<std::vector<uint64_t>> counts(s + 1, std::vector<uint64_t>(n + 1, 0));

  std::function<void(uint64_t, size_t, int)> dfs = [&](uint64_t mask, size_t gi, int hops) {
    if (gi == s) {
      ++counts[hops][std::popcount(mask)];
      return;
    }
    const uint64_t bx = 1ull << schedule[gi].x;
    const uint64_t by = 1ull << schedule[gi].y;
    const bool sx = mask & bx;
    const bool sy = mask & by;
    if (sx == sy) {
      dfs(mask, gi + 1, hops);
    } else {
      dfs(mask & ~(bx | by), gi + 1, hops + 1);
      dfs(mask | bx | by, gi + 1, hops + 1);
    }
  };
  for_each_initial_config(spec.layout, [&](uint64_t mask) { dfs(mask, 0, 0); });

  PartitionResult result;
  result.n = n;
  result.k = k;
  result.a = spec.layout.a;
  result.b = spec.layout.b;
  result.m = spec.layout.m;
  result.depth = spec.depth;
  result.gates = static_cast<long long>(s);
  result.weighting = weighting;
  result.below_one_design = spec.depth == 0;
  if (weighting.kind == FinalWeighting::Kind::kAqec) {
    result.lambda = weighting.lambda;
    result.f = std::log2(weighting.lambda) + 1.0;
  } else {
    result.lambda = std::numeric_limits<double>::quiet_NaN();
    result.f = std::numeric_limits<double>::quiet_NaN();
  }

  const double pref = std::exp2(static_cast<double>(n)) * std::pow(3.0, static_cast<double>(k - n));
  double total = 0.0;
  for (size_t j = 0; j <= s; ++j) {
    double hop_weight = std::pow(0.4, static_cast<double>(j));
    for (int w = 0; w <= n; ++w) {
      if (counts[j][w] == 0) continue;
      total += static_cast<double>(counts[j][w]) * hop_weight * weighting.value(w);
    }
  }
  result.value = pref * total;

  if (weighting.exact_supported()) {
    Rational pref_exact = Rational(BigInt(1) << n);
    BigInt pow3 = 1;
    for (int i = 0; i < n - k; ++i) pow3 *= 3;
    pref_exact /= Rational(pow3);

    Rational sum = 0;
    Rational hop_weight = 1;
    const Rational hop(2, 5);
    for (size_t j = 0; j <= s; ++j) {
      for (int w = 0; w <= n; ++w) {
        if (counts[j][w] == 0) continue;
        sum += Rational(BigInt(counts[j][w])) * hop_weight * weighting.exact_value(w);
      }
      hop_weight *= hop;
    }
    result.exact = pref_exact * sum;
  }
  return result;
}

void for_each_trajectory(
    const BrickworkSpec& spec,
    const std::function<void(const std::vector<uint64_t>&, int)>& visit,
    const EnumerationOptions& opts) {
  check_enumeration_guard(spec, opts);
  const auto schedule = build_schedule(spec);
  const size_t s = schedule.size();
  std::vector<uint64_t> configs(s + 1, 0);

  std::function<void(size_t, int)> dfs = [&](size_t gi, int hops) {
    if (gi == s) {
      visit(configs, hops);
      return;
    }
    const uint64_t mask = configs[gi];
    const uint64_t bx = 1ull << schedule[gi].x;
    const uint64_t by = 1ull << schedule[gi].y;
    if (static_cast<bool>(mask & bx) == static_cast<bool>(mask & by)) {
      configs[gi + 1] = mask;
      dfs(gi + 1, hops);
    } else {
      configs[gi + 1] = mask & ~(bx | by);
      dfs(gi + 1, hops + 1);
      configs[gi + 1] = mask | bx | by;
      dfs(gi + 1, hops + 1);
    }
  };
  for_each_initial_config(spec.layout, [&](uint64_t mask) {
    configs[0] = mask;
    dfs(0, 0);
  });
}

int DWTrajectory::surviving_walls() const {
  int count = 0;
  for (bool alive : wall_survived)
    if (alive) ++count;
  return count;
}

double DWTrajectory::weight() const {
  return std::pow(0.4, weight_exponent);
}

DWTrajectory track_domain_walls(const std::vector<uint64_t>& configs,
                                const std::vector<GateSlot>& schedule, int n) {
  if (configs.size() != schedule.size() + 1)
    throw std::invalid_argument("track_domain_walls: need one config per time step");
  DWTrajectory t;
  t.n = n;
  const size_t s = schedule.size();
  t.walls.resize(s + 1);
  t.events.resize(s);
  t.owner.assign((s + 1) * static_cast<size_t>(n), -1);

  std::vector<int8_t> occupant(n, -1);  // wall id per edge, -1 empty
  t.walls[0] = dw_of_config(configs[0], n).edges;
  int next_id = 0;
  for (int e = 0; e < n; ++e)
    if ((t.walls[0] >> e) & 1) occupant[e] = static_cast<int8_t>(next_id++);
  t.factors_by_wall.assign(next_id, 0);
  t.wall_survived.assign(next_id, true);
  for (int e = 0; e < n; ++e) t.owner[e] = occupant[e];

  for (size_t gi = 0; gi < s; ++gi) {
    const int acted = schedule[gi].x;  // edge between the gate's two qubits
    const uint32_t before = t.walls[gi];
    const uint32_t after = dw_of_config(configs[gi + 1], n).edges;
    const uint64_t pair = (1ull << schedule[gi].x) | (1ull << schedule[gi].y);
    if ((configs[gi] ^ configs[gi + 1]) & ~pair)
      throw std::invalid_argument("track_domain_walls: configs change away from the acted pair");
    DWTrajectory::Event ev;
    if (((before >> acted) & 1) == 0) {
      if (after != before)
        throw std::invalid_argument("track_domain_walls: walls moved without an acted wall");
    } else {
      ++t.weight_exponent;
      const int mover = occupant[acted];
      ++t.factors_by_wall[mover];
      const uint32_t delta = before ^ after;
      const int other = std::countr_zero(delta & ~(1u << acted));
      ev.from_edge = acted;
      ev.to_edge = other;
      if (std::popcount(after) == std::popcount(before)) {
        ev.kind = DWTrajectory::Event::Kind::kHop;
        occupant[other] = static_cast<int8_t>(mover);
        occupant[acted] = -1;
      } else {
        ev.kind = DWTrajectory::Event::Kind::kAnnihilate;
        t.wall_survived[mover] = false;
        t.wall_survived[occupant[other]] = false;
        occupant[other] = -1;
        occupant[acted] = -1;
      }
    }
    t.events[gi] = ev;
    t.walls[gi + 1] = after;
    for (int e = 0; e < n; ++e) t.owner[(gi + 1) * static_cast<size_t>(n) + e] = occupant[e];
  }
  return t;
}

double SurvivorSplit::g0_weight() const { return std::pow(0.4, g0_exponent); }
double SurvivorSplit::gu_weight() const { return std::pow(0.4, gu_exponent); }

SurvivorSplit decompose_survivors(const DWTrajectory& dwt) {
  SurvivorSplit split;
  const size_t steps = dwt.walls.size();
  split.g0_walls.assign(steps, 0);
  split.gu_walls.assign(steps, 0);
  for (size_t time = 0; time < steps; ++time) {
    for (int e = 0; e < dwt.n; ++e) {
      int id = dwt.wall_id_at(static_cast<int>(time), e);
      if (id < 0) continue;
      if (dwt.wall_survived[id])
        split.gu_walls[time] |= 1u << e;
      else
        split.g0_walls[time] |= 1u << e;
    }
  }
  for (size_t id = 0; id < dwt.factors_by_wall.size(); ++id) {
    if (dwt.wall_survived[id])
      split.gu_exponent += dwt.factors_by_wall[id];
    else
      split.g0_exponent += dwt.factors_by_wall[id];
  }
  return split;
}

SurvivorBreakdown survivor_breakdown(const BrickworkSpec& spec, const FinalWeighting& weighting,
                                     const EnumerationOptions& opts) {
  const auto schedule = build_schedule(spec);
  const int n = spec.layout.n();
  const int k = spec.layout.k();
  const double pref = std::exp2(static_cast<double>(n)) * std::pow(3.0, static_cast<double>(k - n));
  SurvivorBreakdown breakdown;
  for_each_trajectory(
      spec,
      [&](const std::vector<uint64_t>& configs, int hops) {
        DWTrajectory dwt = track_domain_walls(configs, schedule, n);
        const int pairs = dwt.surviving_walls() / 2;
        const double contribution = pref * std::pow(0.4, hops) *
                                    weighting.value(std::popcount(configs.back()));
        breakdown.contribution_by_pairs[pairs] += contribution;
        breakdown.total += contribution;
      },
      opts);
  return breakdown;
}

}  // namespace brickqec
