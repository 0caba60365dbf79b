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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brickqec/cli.hpp"

using namespace brickqec;

TEST_CASE("zfunc emits the anchor value") {
  RunConfig config;
  config.a = 1;
  config.b = 2;
  config.m = 2;
  config.depths = {1};
  config.direct_f = 1.0;
  CommandResult result = cmd_zfunc(config);
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("5.7599999999999") != std::string::npos);
  CHECK(result.output.find("n,k,a,b,m,D,s,f,lambda,weighting,Z,Z_inf,bound,choi_bound") == 0);
}

TEST_CASE("depth zero is flagged but computed") {
  RunConfig config;
  config.depths = {0};
  config.direct_f = 1.0;
  CommandResult result = cmd_zfunc(config);
  CHECK(result.exit_code == 0);
  CHECK(result.warnings.find("1-design") != std::string::npos);
}

TEST_CASE("config validation names the field") {
  RunConfig config;
  config.b = 1;
  try {
    cmd_zfunc(config);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.field == "b");
  }
  RunConfig bad_f;
  bad_f.direct_f = 3.0;
  CHECK_THROWS_AS(cmd_zfunc(bad_f), ConfigError);
}

TEST_CASE("bounds rejects a violated hypothesis") {
  RunConfig config;
  config.direct_f = 0.9;  // 1 - k/n = 0.5
  CHECK_THROWS_AS(cmd_bounds(config), ConfigError);
  config.direct_f = 0.5;
  CHECK(cmd_bounds(config).exit_code == 0);
}

TEST_CASE("bounds emits one row per depth") {
  RunConfig config;
  config.depths = {1, 2, 4};
  config.direct_f = 0.5;
  CommandResult result = cmd_bounds(config);
  int lines = 0;
  for (char c : result.output) lines += c == '\n';
  CHECK(lines == 4);  // header + 3 rows
}

TEST_CASE("oracle reports exact equality on the small grid") {
  RunConfig config;
  config.a = 1;
  config.b = 2;
  config.m = 2;
  config.depths = {0, 1, 2};
  config.direct_f = 1.0;
  CommandResult result = cmd_oracle(config);
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("NO") == std::string::npos);
  CHECK(result.output.find("yes") != std::string::npos);

  RunConfig too_big = config;
  too_big.m = 5;
  CHECK_THROWS_AS(cmd_oracle(too_big), std::length_error);
}

TEST_CASE("json config round trip") {
  RunConfig config = RunConfig::from_json(
      R"({"a":1,"b":4,"m":4,"depth":[2,4],"noise":{"kind":"pauli","p":[0.9,0.1,0,0]},)"
      R"("weighting":"qec","d":2,"seed":7,"samples":50,"format":"jsonl"})");
  CHECK(config.b == 4);
  CHECK(config.depths == std::vector<int>{2, 4});
  CHECK(config.weighting == "qec");
  CHECK(config.d == 2);
  CHECK(config.samples == 50);
  CHECK(config.format == "jsonl");
  CHECK_THROWS_AS(RunConfig::from_json("{"), ConfigError);
  CHECK_THROWS_AS(RunConfig::from_json(R"({"noise":{"kind":"thermal"}})"), ConfigError);
  CHECK_THROWS_AS(RunConfig::from_json(R"({"format":"xml"})"), ConfigError);
}

TEST_CASE("jsonl format carries the same fields") {
  RunConfig config;
  config.direct_f = 1.0;
  config.format = "jsonl";
  CommandResult result = cmd_zfunc(config);
  CHECK(result.output.find("\"Z\"") != std::string::npos);
  CHECK(result.output.find("\"lambda\"") != std::string::npos);
}

TEST_CASE("scan produces a decreasing column") {
  RunConfig config;
  config.a = 1;
  config.b = 4;
  config.scan_n = {64, 128, 256, 512, 1024};
  CommandResult result = cmd_scan(config);
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("yes") != std::string::npos);
}

TEST_CASE("sample command is byte-stable across worker counts") {
  RunConfig config;
  config.a = 1;
  config.b = 2;
  config.m = 3;
  config.depths = {2};
  config.weighting = "qec";
  config.d = 1;
  config.samples = 100;
  config.seed = 21;
  RunConfig one = config, four = config;
  one.workers = 1;
  four.workers = 4;
  CHECK(cmd_sample(one).output == cmd_sample(four).output);
}
