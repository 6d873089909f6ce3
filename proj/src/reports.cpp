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

#include "qnet/reports.hpp"

namespace qnet {

Json shor_report_to_json(const ShorReport& r) {
  Json j;
  j["n_to_factor"] = r.n_to_factor;
  j["base_a"] = r.base_a;
  j["qubits_k"] = r.qubits_k;
  if (r.measured_y.has_value()) {
    j["measured_y"] = *r.measured_y;
  } else {
    j["measured_y"] = nullptr;
  }
  Json conv = Json::array();
  for (const auto& [num, den] : r.cf_convergents) {
    conv.push_back(Json::array({num, den}));
  }
  j["cf_convergents"] = std::move(conv);
  if (r.period_r.has_value()) {
    j["period_r"] = *r.period_r;
  } else {
    j["period_r"] = nullptr;
  }
  if (r.factors.has_value()) {
    j["factors"] = Json::array({r.factors->first, r.factors->second});
  } else {
    j["factors"] = nullptr;
  }
  Json peaks = Json::array();
  for (const auto& [y, p] : r.peak_distribution) {
    peaks.push_back(Json::array({y, p}));
  }
  j["peak_distribution"] = std::move(peaks);
  return j;
}

Json grover_report_to_json(const GroverReport& r) {
  Json j;
  j["qubits_k"] = r.qubits_k;
  j["target_j"] = r.target_j;
  j["iterations"] = r.iterations;
  j["success_probability"] = r.success_probability;
  j["per_iteration_probs"] = r.per_iteration_probs;
  return j;
}

Json comparison_to_json(const ExactComparison& c) {
  Json j;
  j["global_error"] = c.global_error;
  j["norm_history"] = c.norm_history;
  Json table = Json::array();
  for (const ConvergenceRow& row : c.table) {
    Json jr;
    jr["dt"] = row.dt;
    jr["global_error"] = row.global_error;
    table.push_back(std::move(jr));
  }
  j["convergence_table"] = std::move(table);
  j["observed_orders"] = c.observed_orders;
  return j;
}

}  // namespace qnet
