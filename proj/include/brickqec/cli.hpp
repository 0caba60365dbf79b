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
#include <optional>
#include <string>
#include <vector>

#include "brickqec/noise.hpp"
#include "brickqec/statmech.hpp"

namespace brickqec {

/// Thrown on invalid configuration; carries the offending field name.
struct ConfigError : std::invalid_argument {
  std::string field;
  ConfigError(std::string field_name, const std::string& message)
      : std::invalid_argument(field_name + ": " + message), field(std::move(field_name)) {}
};

struct RunConfig {
  int a = 1;
  int b = 2;
  int m = 2;
  std::vector<int> depths{1};

  NoiseModel noise = NoiseModel::pauli(1, 0, 0, 0);
  std::optional<double> direct_f;  // overrides noise-derived strength

  std::string weighting = "aqec";  // "aqec" | "qec"
  int d = 1;                       // qec distance parameter / sample distance

  uint64_t seed = 1;
  long long samples = 1000;
  int workers = 0;  // 0 = default_workers()
  std::string format = "csv";  // "csv" | "jsonl"

  int max_qubits = 26;             // transfer-matrix table guard
  double transfer_factor = 0.4;    // self-test mutation hook
  std::vector<int> scan_n;         // scan subcommand
  std::optional<double> scan_alpha;
  std::optional<double> scan_linear_c;
  bool check = false;              // mc-choi: exit 1 on comparator mismatch
  bool dump_tableau = false;       // sample: emit the first circuit tableau
  std::string dump_trajectories;   // oracle: JSONL trajectory dump path
  std::optional<double> scaling_c; // bounds: append the n^((1-c|log2 r|)/4) column

  void validate_layout() const;
  double strength_f() const;
  BlockLayout layout() const { return BlockLayout{a, b, m}; }

  /// Parses the JSON object form accepted by --config.
  static RunConfig from_json(const std::string& text);
};

struct CommandResult {
  int exit_code = 0;
  std::string output;    // csv/jsonl payload, byte-stable for a fixed config
  std::string warnings;  // human-readable notes, not part of the payload
};

CommandResult cmd_zfunc(const RunConfig& config);
CommandResult cmd_bounds(const RunConfig& config);
CommandResult cmd_oracle(const RunConfig& config);
CommandResult cmd_sample(const RunConfig& config);
CommandResult cmd_mc_choi(const RunConfig& config);
CommandResult cmd_scan(const RunConfig& config);
CommandResult cmd_selftest(const RunConfig& config);

}  // namespace brickqec
