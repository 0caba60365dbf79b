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

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "brickqec/cli.hpp"

namespace {

using brickqec::CommandResult;
using brickqec::ConfigError;
using brickqec::RunConfig;

struct CommonFlags {
  std::string config_path;
  std::string output = "-";
  std::vector<double> pauli;
  double erasure = -1.0;
  double f = -1.0;
  bool f_set = false;
};

void add_common(CLI::App* cmd, RunConfig& config, CommonFlags& flags) {
  cmd->add_option("--config", flags.config_path, "JSON config file; flags override its fields");
  cmd->add_option("--a", config.a, "logical qubits per block");
  cmd->add_option("--b", config.b, "block size");
  cmd->add_option("--m", config.m, "block count");
  cmd->add_option("--depth", config.depths, "circuit depth(s)");
  cmd->add_option("--d", config.d, "distance parameter for qec weighting / sampling");
  cmd->add_option("--weighting", config.weighting, "aqec or qec");
  cmd->add_option("--seed", config.seed, "base seed; per-task streams derive from (seed, index)");
  cmd->add_option("--samples", config.samples, "Monte Carlo sample count");
  cmd->add_option("--workers", config.workers, "worker threads (default BRICKQEC_WORKERS)");
  cmd->add_option("--format", config.format, "csv or jsonl");
  cmd->add_option("--output", flags.output, "output path, - for stdout");
  cmd->add_option("--max-qubits", config.max_qubits, "transfer-matrix size guard");
  cmd->add_option("--pauli", flags.pauli, "Pauli noise probabilities pI pX pY pZ")->expected(4);
  cmd->add_option("--erasure", flags.erasure, "erasure probability");
  cmd->add_option("--f", flags.f, "noise strength f in [0, 2] (overrides --pauli/--erasure)")
      ->check([&flags](const std::string&) {
        flags.f_set = true;
        return std::string();
      });
}

RunConfig finalize(RunConfig config, const CommonFlags& flags) {
  if (!flags.config_path.empty()) {
    std::ifstream in(flags.config_path);
    if (!in) throw ConfigError("config", "cannot open " + flags.config_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    RunConfig from_file = RunConfig::from_json(buffer.str());
    // File supplies the base; explicitly passed flags were already applied to
    // `config`, so copy file values only where flags kept the defaults.
    RunConfig defaults;
    auto keep = [&](auto& flag_value, const auto& default_value, const auto& file_value) {
      if (flag_value == default_value) flag_value = file_value;
    };
    keep(config.a, defaults.a, from_file.a);
    keep(config.b, defaults.b, from_file.b);
    keep(config.m, defaults.m, from_file.m);
    keep(config.depths, defaults.depths, from_file.depths);
    keep(config.d, defaults.d, from_file.d);
    keep(config.weighting, defaults.weighting, from_file.weighting);
    keep(config.seed, defaults.seed, from_file.seed);
    keep(config.samples, defaults.samples, from_file.samples);
    keep(config.workers, defaults.workers, from_file.workers);
    keep(config.format, defaults.format, from_file.format);
    keep(config.max_qubits, defaults.max_qubits, from_file.max_qubits);
    config.noise = from_file.noise;
    if (from_file.direct_f) config.direct_f = from_file.direct_f;
  }
  if (!flags.pauli.empty())
    config.noise = brickqec::NoiseModel::pauli(flags.pauli[0], flags.pauli[1], flags.pauli[2],
                                               flags.pauli[3]);
  if (flags.erasure >= 0.0) config.noise = brickqec::NoiseModel::erasure(flags.erasure);
  if (flags.f_set) config.direct_f = flags.f;
  if (config.format != "csv" && config.format != "jsonl")
    throw ConfigError("format", "must be csv or jsonl");
  return config;
}

int emit(const CommandResult& result, const std::string& output_path) {
  if (!result.warnings.empty()) std::cerr << result.warnings;
  if (output_path == "-" || output_path.empty()) {
    std::cout << result.output;
  } else {
    std::ofstream out(output_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot open output path " << output_path << "\n";
      return 2;
    }
    out << result.output;
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact second-moment analysis of random brickwork Clifford encoders"};
  app.require_subcommand(1);

  RunConfig config;
  CommonFlags flags;
  std::string subcommand;

  auto* zfunc = app.add_subcommand("zfunc", "transfer-matrix partition function");
  auto* bounds = app.add_subcommand("bounds", "closed forms and depth bounds");
  auto* oracle = app.add_subcommand("oracle", "compare against brute-force enumeration");
  auto* sample = app.add_subcommand("sample", "circuit sampling: distance and failure rate");
  auto* mc_choi = app.add_subcommand("mc-choi", "dense Monte Carlo second-moment estimate");
  auto* scan = app.add_subcommand("scan", "exact-threshold scan over n");
  auto* selftest = app.add_subcommand("selftest", "run the full verification suite");
  for (auto* cmd : {zfunc, bounds, oracle, sample, mc_choi, scan, selftest})
    add_common(cmd, config, flags);

  oracle->add_option("--dump-trajectories", config.dump_trajectories,
                     "write one JSON trajectory per line to this path");
  sample->add_flag("--dump-tableau", config.dump_tableau,
                   "emit the first sampled tableau as JSON image strings");
  mc_choi->add_flag("--check", config.check,
                    "exit 1 when the estimate is more than 4 sigma from the exact value");
  double scaling_c = -1.0;
  bounds->add_option("--scaling-c", scaling_c,
                     "append the asymptotic decay column n^((1-c|log2 r|)/4)");
  scan->add_option("--scan-n", config.scan_n, "list of n values");
  double alpha = -1.0, linear_c = -1.0;
  scan->add_option("--alpha", alpha, "depth multiplier D = ceil(alpha * d(n))");
  scan->add_option("--d-linear", linear_c, "use d(n) = c*n instead of ceil(log2 n)");
  double mutate = -1.0;
  selftest->add_option("--mutate-transfer-factor", mutate,
                       "corrupt the gate transfer factor (sensitivity check)");

  CLI11_PARSE(app, argc, argv);

  try {
    config = finalize(config, flags);
    if (alpha >= 0.0) config.scan_alpha = alpha;
    if (linear_c >= 0.0) config.scan_linear_c = linear_c;
    if (mutate >= 0.0) config.transfer_factor = mutate;
    if (scaling_c >= 0.0) config.scaling_c = scaling_c;

    CommandResult result;
    if (zfunc->parsed()) result = brickqec::cmd_zfunc(config);
    else if (bounds->parsed()) result = brickqec::cmd_bounds(config);
    else if (oracle->parsed()) result = brickqec::cmd_oracle(config);
    else if (sample->parsed()) result = brickqec::cmd_sample(config);
    else if (mc_choi->parsed()) result = brickqec::cmd_mc_choi(config);
    else if (scan->parsed()) result = brickqec::cmd_scan(config);
    else if (selftest->parsed()) result = brickqec::cmd_selftest(config);

    if (oracle->parsed() && !config.dump_trajectories.empty()) {
      std::ofstream out(config.dump_trajectories, std::ios::binary);
      if (!out) {
        std::cerr << "cannot open trajectory dump path\n";
        return 2;
      }
      out << result.warnings;  // trajectory payload rides in warnings
      result.warnings.clear();
    }
    return emit(result, flags.output);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "size guard: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
