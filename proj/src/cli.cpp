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

#include "brickqec/cli.hpp"

#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "brickqec/acceptance.hpp"
#include "brickqec/channels.hpp"
#include "brickqec/codecheck.hpp"
#include "brickqec/domainwall.hpp"
#include "brickqec/io.hpp"
#include "brickqec/parallel.hpp"

namespace brickqec {

namespace {

using nlohmann::json;

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::string cell(double v) { return format_double(v); }
std::string cell(long long v) { return std::to_string(v); }
std::string cell(int v) { return std::to_string(v); }
std::string cell(uint64_t v) { return std::to_string(v); }

struct RecordWriter {
  bool jsonl = false;
  std::vector<std::string> header;
  std::ostringstream out;

  explicit RecordWriter(const std::string& format, std::vector<std::string> columns)
      : jsonl(format == "jsonl"), header(std::move(columns)) {
    if (!jsonl) out << csv_line(header);
  }

  void row(const std::vector<std::string>& cells) {
    if (jsonl) {
      json obj = json::object();
      for (size_t i = 0; i < header.size(); ++i) obj[header[i]] = cells[i];
      out << obj.dump() << '\n';
    } else {
      out << csv_line(cells);
    }
  }

  std::string str() const { return out.str(); }
};

FinalWeighting make_weighting(const RunConfig& config) {
  if (config.weighting == "aqec") return FinalWeighting::aqec(lambda_of_f(config.strength_f()));
  if (config.weighting == "qec") return FinalWeighting::qec(config.d);
  throw ConfigError("weighting", "must be \"aqec\" or \"qec\"");
}

StatmechOptions make_statmech_options(const RunConfig& config) {
  StatmechOptions opts;
  opts.max_qubits = config.max_qubits;
  opts.transfer_factor = config.transfer_factor;
  return opts;
}

}  // namespace

void RunConfig::validate_layout() const {
  if (a <= 0) throw ConfigError("a", "must be positive");
  if (b <= a) throw ConfigError("b", "must exceed a");
  if (m <= 0) throw ConfigError("m", "must be positive");
  if ((static_cast<long long>(b) * m) % 2 != 0) throw ConfigError("m", "n = b*m must be even");
  if (depths.empty()) throw ConfigError("depth", "at least one depth required");
  for (int depth : depths)
    if (depth < 0) throw ConfigError("depth", "must be >= 0");
}

double RunConfig::strength_f() const {
  if (direct_f) {
    if (!(*direct_f >= 0.0 && *direct_f <= 2.0)) throw ConfigError("f", "must lie in [0, 2]");
    return *direct_f;
  }
  return noise.strength_f();
}

RunConfig RunConfig::from_json(const std::string& text) {
  json obj;
  try {
    obj = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("config", std::string("JSON parse failure: ") + e.what());
  }
  RunConfig config;
  auto read_int = [&](const char* key, int& slot) {
    if (obj.contains(key)) {
      if (!obj[key].is_number_integer()) throw ConfigError(key, "must be an integer");
      slot = obj[key].get<int>();
    }
  };
  read_int("a", config.a);
  read_int("b", config.b);
  read_int("m", config.m);
  read_int("d", config.d);
  read_int("workers", config.workers);
  read_int("max_qubits", config.max_qubits);
  if (obj.contains("depth")) {
    if (obj["depth"].is_array())
      config.depths = obj["depth"].get<std::vector<int>>();
    else if (obj["depth"].is_number_integer())
      config.depths = {obj["depth"].get<int>()};
    else
      throw ConfigError("depth", "must be an integer or an integer list");
  }
  if (obj.contains("noise")) {
    const auto& noise = obj["noise"];
    if (!noise.is_object() || !noise.contains("kind"))
      throw ConfigError("noise", "must be an object with a \"kind\"");
    std::string kind = noise["kind"].get<std::string>();
    if (kind == "pauli") {
      auto p = noise.at("p").get<std::vector<double>>();
      if (p.size() != 4) throw ConfigError("noise.p", "needs 4 probabilities");
      config.noise = NoiseModel::pauli(p[0], p[1], p[2], p[3]);
    } else if (kind == "erasure") {
      config.noise = NoiseModel::erasure(noise.at("p").get<double>());
    } else {
      throw ConfigError("noise.kind", "must be \"pauli\" or \"erasure\"");
    }
  }
  if (obj.contains("f")) config.direct_f = obj["f"].get<double>();
  if (obj.contains("weighting")) config.weighting = obj["weighting"].get<std::string>();
  if (obj.contains("seed")) config.seed = obj["seed"].get<uint64_t>();
  if (obj.contains("samples")) config.samples = obj["samples"].get<long long>();
  if (obj.contains("format")) config.format = obj["format"].get<std::string>();
  if (config.format != "csv" && config.format != "jsonl")
    throw ConfigError("format", "must be \"csv\" or \"jsonl\"");
  return config;
}

namespace {

const std::vector<std::string> kZfuncColumns = {"n", "k", "a", "b", "m", "D", "s", "f",
                                                "lambda", "weighting", "Z", "Z_inf", "bound",
                                                "choi_bound"};

// Shared by zfunc / bounds / mc-choi so every record carries the full
// parameter tuple.
std::vector<std::string> zfunc_cells(const RunConfig& config, int depth, double f, double z,
                                     double z_inf, double bound, double choi) {
  BlockLayout layout = config.layout();
  long long gates = static_cast<long long>(layout.n()) * depth / 2;
  double lambda = config.weighting == "aqec" ? lambda_of_f(f) : kNan;
  return {cell(layout.n()), cell(layout.k()), cell(config.a),  cell(config.b),
          cell(config.m),   cell(depth),      cell(gates),     cell(f),
          cell(lambda),     config.weighting, cell(z),         cell(z_inf),
          cell(bound),      cell(choi)};
}

double depth_bound_or_nan(const RunConfig& config, int depth, double f) {
  BlockLayout layout = config.layout();
  try {
    if (config.weighting == "aqec")
      return aqec_depth_bound(layout.n(), layout.k(), config.b, depth, f);
    return qec_depth_bound(layout.n(), layout.k(), config.b, config.d, depth);
  } catch (const std::invalid_argument&) {
    return kNan;
  }
}

}  // namespace

CommandResult cmd_zfunc(const RunConfig& config) {
  config.validate_layout();
  const double f = config.strength_f();
  const FinalWeighting weighting = make_weighting(config);
  const BlockLayout layout = config.layout();
  CommandResult result;
  RecordWriter writer(config.format, kZfuncColumns);
  for (int depth : config.depths) {
    BrickworkSpec spec{layout, depth};
    PartitionResult z = partition_function(spec, weighting, make_statmech_options(config));
    double z_inf = config.weighting == "aqec"
                       ? z_infinity_aqec(layout.n(), layout.k(), f)
                       : z_infinity_qec(layout.n(), layout.k(), config.d);
    double bound = depth_bound_or_nan(config, depth, f);
    double choi = config.weighting == "aqec" ? choi_error_bound(z.value) : kNan;
    if (z.below_one_design)
      result.warnings += "depth 0 is below the 1-design regime; value computed anyway\n";
    writer.row(zfunc_cells(config, depth, f, z.value, z_inf, bound, choi));
  }
  result.output = writer.str();
  return result;
}

CommandResult cmd_bounds(const RunConfig& config) {
  config.validate_layout();
  const double f = config.strength_f();
  const BlockLayout layout = config.layout();
  if (config.weighting == "aqec" && f > 1.0 - layout.rate() + 1e-15)
    throw ConfigError("f", "the aqec depth bound requires f <= 1 - k/n");
  make_weighting(config);  // validates weighting name and d
  const double r = 0.4 * (std::exp2(layout.rate()) + std::exp2(-layout.rate()));
  if (config.scaling_c && !(*config.scaling_c > 1.0 / std::abs(std::log2(r))))
    throw ConfigError("scaling-c", "requires c > 1/|log2 r| = " +
                                       format_double(1.0 / std::abs(std::log2(r))));
  CommandResult result;
  std::vector<std::string> columns = kZfuncColumns;
  if (config.scaling_c) {
    columns.push_back("scaling_c");
    columns.push_back("scaling_rate");
  }
  RecordWriter writer(config.format, columns);
  for (int depth : config.depths) {
    double z_inf = config.weighting == "aqec"
                       ? z_infinity_aqec(layout.n(), layout.k(), f)
                       : z_infinity_qec(layout.n(), layout.k(), config.d);
    double bound = config.weighting == "aqec"
                       ? aqec_depth_bound(layout.n(), layout.k(), config.b, depth, f)
                       : qec_depth_bound(layout.n(), layout.k(), config.b, config.d, depth);
    double choi = config.weighting == "aqec" ? choi_error_bound(bound) : kNan;
    auto cells = zfunc_cells(config, depth, f, kNan, z_inf, bound, choi);
    if (config.scaling_c) {
      cells.push_back(cell(*config.scaling_c));
      cells.push_back(cell(choi_error_scaling(layout.n(), *config.scaling_c, r)));
    }
    writer.row(cells);
  }
  result.output = writer.str();
  return result;
}

CommandResult cmd_oracle(const RunConfig& config) {
  config.validate_layout();
  const double f = config.strength_f();
  const FinalWeighting weighting = make_weighting(config);
  const BlockLayout layout = config.layout();
  CommandResult result;
  RecordWriter writer(config.format,
                      {"n", "k", "a", "b", "m", "D", "f", "weighting", "Z_dp", "Z_enum",
                       "rel_err", "exact_equal", "survivor_total_err"});
  EnumerationOptions guard;
  std::ostringstream trajectories;

  for (int depth : config.depths) {
    BrickworkSpec spec{layout, depth};
    StatmechOptions opts = make_statmech_options(config);
    opts.exact = weighting.exact_supported() && opts.transfer_factor == 0.4;
    PartitionResult dp = partition_function(spec, weighting, opts);
    PartitionResult oracle = enumerate_trajectories(spec, weighting, guard);
    double rel = std::abs(dp.value - oracle.value) / std::max(1.0, std::abs(oracle.value));
    std::string exact_equal = "n/a";
    if (dp.exact && oracle.exact) exact_equal = (*dp.exact == *oracle.exact) ? "yes" : "NO";
    SurvivorBreakdown breakdown = survivor_breakdown(spec, weighting, guard);
    double survivor_err = std::abs(breakdown.total - oracle.value) /
                          std::max(1.0, std::abs(oracle.value));
    writer.row({cell(layout.n()), cell(layout.k()), cell(config.a), cell(config.b),
                cell(config.m), cell(depth), cell(f), weighting.name(), cell(dp.value),
                cell(oracle.value), cell(rel), exact_equal, cell(survivor_err)});

    if (!config.dump_trajectories.empty()) {
      const auto schedule = build_schedule(spec);
      for_each_trajectory(
          spec,
          [&](const std::vector<uint64_t>& configs, int hops) {
            DWTrajectory dwt = track_domain_walls(configs, schedule, layout.n());
            json line;
            line["configs"] = configs;
            line["weight"] = std::pow(0.4, hops);
            json events = json::array();
            for (const auto& ev : dwt.events) {
              json e;
              e["kind"] = ev.kind == DWTrajectory::Event::Kind::kNone
                              ? "none"
                              : (ev.kind == DWTrajectory::Event::Kind::kHop ? "hop"
                                                                            : "annihilate");
              if (ev.from_edge >= 0) {
                e["from"] = ev.from_edge;
                e["to"] = ev.to_edge;
              }
              events.push_back(e);
            }
            line["events"] = events;
            trajectories << line.dump() << '\n';
          },
          guard);
    }
  }
  result.output = writer.str();
  if (!config.dump_trajectories.empty()) result.warnings = trajectories.str();
  return result;
}

CommandResult cmd_sample(const RunConfig& config) {
  config.validate_layout();
  const BlockLayout layout = config.layout();
  CommandResult result;
  RecordWriter writer(config.format, {"n", "a", "b", "m", "D", "d", "N", "mean", "stderr",
                                      "seed", "z_qec_bound"});
  for (int depth : config.depths) {
    BrickworkSpec spec{layout, depth};
    MCEstimate est = estimate_failure_probability(spec, config.d, config.samples, config.seed,
                                                  config.workers);
    double z_qec = kNan;
    if (layout.n() <= config.max_qubits) {
      StatmechOptions opts = make_statmech_options(config);
      z_qec = partition_function(spec, FinalWeighting::qec(config.d), opts).value;
    }
    writer.row({cell(layout.n()), cell(config.a), cell(config.b), cell(config.m), cell(depth),
                cell(config.d), cell(est.count), cell(est.mean), cell(est.stderr_of_mean),
                cell(est.seed), cell(z_qec)});
    if (config.dump_tableau) {
      Rng rng = stream_rng(config.seed, 0);
      json dump = json::array();
      for (const auto& image : sample_circuit(spec, rng).image_strings()) dump.push_back(image);
      result.warnings += dump.dump() + "\n";
    }
  }
  result.output = writer.str();
  return result;
}

CommandResult cmd_mc_choi(const RunConfig& config) {
  config.validate_layout();
  if (config.noise.kind != NoiseModel::Kind::kPauli)
    throw ConfigError("noise.kind", "the dense verifier supports Pauli noise only");
  if (config.direct_f)
    throw ConfigError("f", "mc-choi derives f from the Pauli vector; pass --pauli instead");
  const double f = config.noise.strength_f();
  const FinalWeighting weighting = FinalWeighting::aqec(lambda_of_f(f));
  const BlockLayout layout = config.layout();
  CommandResult result;
  RecordWriter writer(config.format,
                      {"n", "k", "a", "b", "m", "D", "s", "f", "lambda", "weighting", "Z",
                       "Z_inf", "bound", "choi_bound", "mc_mean", "mc_stderr", "N"});
  bool all_consistent = true;
  for (int depth : config.depths) {
    BrickworkSpec spec{layout, depth};
    PartitionResult dp = partition_function(spec, weighting, make_statmech_options(config));
    MCEstimate mc = second_moment_sample(spec, config.noise.p, config.samples, config.seed,
                                         config.workers);
    double z_inf = z_infinity_aqec(layout.n(), layout.k(), f);
    double bound = depth_bound_or_nan(config, depth, f);
    auto cells = zfunc_cells(config, depth, f, dp.value, z_inf, bound,
                             choi_error_bound(dp.value));
    cells.push_back(cell(mc.mean));
    cells.push_back(cell(mc.stderr_of_mean));
    cells.push_back(cell(mc.count));
    writer.row(cells);
    if (std::abs(mc.mean - dp.value) > 4.0 * mc.stderr_of_mean + 1e-9) all_consistent = false;
  }
  result.output = writer.str();
  if (config.check && !all_consistent) {
    result.exit_code = 1;
    result.warnings += "mc estimate disagrees with the transfer-matrix value beyond 4 sigma\n";
  }
  return result;
}

CommandResult cmd_scan(const RunConfig& config) {
  if (config.scan_n.empty()) throw ConfigError("scan_n", "needs at least one n");
  if (config.a <= 0 || config.b <= config.a) throw ConfigError("b", "requires 0 < a < b");
  auto d_of_n = [&](int n) {
    if (config.scan_linear_c) return std::max(1, static_cast<int>(*config.scan_linear_c * n));
    return std::max(1, static_cast<int>(std::ceil(std::log2(static_cast<double>(n)))));
  };
  double alpha = config.scan_alpha
                     ? *config.scan_alpha
                     : choose_scan_alpha(config.scan_n, config.a, config.b, d_of_n);
  auto rows = scan_exact_threshold(config.scan_n, config.a, config.b, d_of_n, alpha,
                                   config.scan_linear_c);
  CommandResult result;
  RecordWriter writer(config.format, {"n", "k", "d", "D", "alpha", "z_inf_qec", "qec_bound",
                                      "below_one", "linear_rate_ok"});
  for (const auto& row : rows) {
    writer.row({cell(row.n), cell(row.k), cell(row.d), cell(row.depth), cell(alpha),
                cell(row.z_inf_qec), cell(row.bound), row.below_one ? "yes" : "no",
                row.linear_rate_ok ? (*row.linear_rate_ok ? "yes" : "no") : "n/a"});
  }
  result.output = writer.str();
  return result;
}

CommandResult cmd_selftest(const RunConfig& config) {
  AcceptanceOptions opts;
  opts.workers = config.workers;
  opts.transfer_factor = config.transfer_factor;
  auto results = run_acceptance(opts);
  CommandResult result;
  std::ostringstream out;
  bool all_pass = true;
  for (const auto& r : results) {
    out << format_criterion_line(r) << '\n';
    all_pass = all_pass && r.pass;
  }
  out << (all_pass ? "SELFTEST PASS" : "SELFTEST FAIL") << '\n';
  result.output = out.str();
  result.exit_code = all_pass ? 0 : 1;
  return result;
}

}  // namespace brickqec
