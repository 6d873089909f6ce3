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

#include <doctest.h>

#include <cmath>

#include "qnet/error.hpp"
#include "qnet/json_io.hpp"
#include "qnet/reports.hpp"
#include "qnet/verify.hpp"

using namespace qnet;

TEST_SUITE_BEGIN("cli_reports");

TEST_CASE("emit_report serializes numbers with 17 significant digits") {
  Json j;
  j["value"] = 0.1;
  j["third"] = 1.0 / 3.0;
  const std::string text = emit_report(j);
  CHECK(text.find("0.10000000000000001") != std::string::npos);
  CHECK(text.find("0.33333333333333331") != std::string::npos);
}

TEST_CASE("emit_report round-trips losslessly") {
  Json j;
  j["a"] = 1.0 / 7.0;
  j["b"] = Json::array({2.5e-300, -3.125, 1e17});
  const Json back = Json::parse(emit_report(j));
  CHECK(back["a"].get<double>() == 1.0 / 7.0);
  CHECK(back["b"][0].get<double>() == 2.5e-300);
  CHECK(back["b"][2].get<double>() == 1e17);
}

TEST_CASE("emit_report keeps insertion order and refuses NaN") {
  Json j;
  j["zebra"] = 1;
  j["alpha"] = 2;
  const std::string text = emit_report(j);
  CHECK(text.find("zebra") < text.find("alpha"));

  Json bad;
  bad["oops"] = std::nan("");
  CHECK_THROWS_AS(emit_report(bad), InvalidInput);
}

TEST_CASE("emit_report pretty mode parses back to the same document") {
  Json j;
  j["nested"] = Json::array({Json{{"k", 1.5}}, Json{{"k", 2.5}}});
  const Json compact = Json::parse(emit_report(j, false));
  const Json pretty = Json::parse(emit_report(j, true));
  CHECK(compact == pretty);
}

TEST_CASE("verify suite rejects unknown scopes") {
  CHECK_THROWS_AS(run_verify_suite("bogus", 0), InvalidInput);
}

TEST_CASE("verify elements scope includes the nilpotency check at zero error") {
  const VerificationReport report = run_verify_suite("elements", 0);
  bool found = false;
  for (const CheckResult& c : report.checks) {
    if (c.name.find("square to zero") != std::string::npos) {
      found = true;
      CHECK(c.max_abs_error == 0.0);
      CHECK(c.passed);
    }
  }
  CHECK(found);
}

TEST_CASE("verify reports are deterministic modulo timing") {
  const VerificationReport a = run_verify_suite("network", 7);
  const VerificationReport b = run_verify_suite("network", 7);
  Json ja = verification_to_json(a, /*include_timing=*/false);
  Json jb = verification_to_json(b, /*include_timing=*/false);
  CHECK(emit_report(ja) == emit_report(jb));
}

TEST_CASE("verification report invariant: passed iff error <= tolerance") {
  const VerificationReport report = run_verify_suite("compiler", 3);
  CHECK(!report.checks.empty());
  for (const CheckResult& c : report.checks) {
    CHECK(c.passed == (c.max_abs_error <= c.tolerance));
  }
}

TEST_CASE("registered checks cover every acceptance criterion") {
  bool criterion_seen[13] = {};
  for (const CheckSpec& spec : verify_checks()) {
    if (spec.criterion > 0) {
      REQUIRE(spec.criterion <= 12);
      criterion_seen[spec.criterion] = true;
    }
  }
  for (int i = 1; i <= 12; ++i) CHECK(criterion_seen[i]);
}

TEST_CASE("shor report JSON uses the documented field names") {
  ShorReport r;
  r.n_to_factor = 15;
  r.base_a = 7;
  r.qubits_k = 8;
  r.measured_y = 64;
  r.cf_convergents = {{0, 1}, {1, 4}};
  r.period_r = 4;
  r.factors = {{3, 5}};
  r.peak_distribution = {{0, 0.25}, {64, 0.25}};
  const Json j = shor_report_to_json(r);
  CHECK(j.contains("n_to_factor"));
  CHECK(j.contains("cf_convergents"));
  CHECK(j.contains("peak_distribution"));
  CHECK(j["factors"][0] == 3);
  const std::string text = emit_report(j);
  CHECK(Json::parse(text) == Json::parse(emit_report(j)));
}

TEST_SUITE_END();
