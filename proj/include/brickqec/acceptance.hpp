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

#include <string>
#include <vector>

namespace brickqec {

struct CriterionResult {
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  double budget_seconds = 0.0;
  std::string detail;
};

struct AcceptanceOptions {
  int workers = 0;               // 0 = default_workers()
  double transfer_factor = 0.4;  // mutation hook; != 2/5 must trip the suite
};

/// Runs the full verification suite; one result per criterion.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {});

std::string format_criterion_line(const CriterionResult& r);

}  // namespace brickqec
