// Copyright qnet authors
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
#include <string>
#include <vector>

#include "qnet/json_io.hpp"

namespace qnet {

struct CheckResult {
  std::string name;
  double max_abs_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct VerificationReport {
  std::string suite_name;
  std::vector<CheckResult> checks;
  std::int64_t wall_time_ms = 0;

  bool all_passed() const;
};

/// One registered invariant check. criterion groups checks under the
/// acceptance criteria; 0 means the check belongs to no criterion.
struct CheckSpec {
  std::string name;
  std::string scope;
  int criterion = 0;
  double tolerance = 0.0;
  double (*run)(std::uint64_t seed);
};

const std::vector<CheckSpec>& verify_checks();

/// Scopes accepted by the verify suite ("core" holds the dense-algebra and
/// register checks that belong to no single subsystem).
const std::vector<std::string>& verify_scopes();

/// Runs every invariant of the selected scope; deterministic per seed.
/// Throws InvalidInput on an unknown scope.
VerificationReport run_verify_suite(const std::string& scope,
                                    std::uint64_t seed);

Json verification_to_json(const VerificationReport& report,
                          bool include_timing = true);

}  // namespace qnet
