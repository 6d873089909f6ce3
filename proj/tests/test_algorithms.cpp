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
#include <numbers>

#include "qnet/algorithms.hpp"
#include "qnet/error.hpp"
#include "qnet/kernels.hpp"
#include "qnet/linalg.hpp"
#include "qnet/reports.hpp"
#include "qnet/rng.hpp"

using namespace qnet;

TEST_SUITE_BEGIN("algorithms");

TEST_CASE("qft_matrix small cases") {
  SUBCASE("k = 1 is the Hadamard") {
    const Matrix f = qft_matrix(1);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(f(0, 0).real() == doctest::Approx(r));
    CHECK(f(1, 1).real() == doctest::Approx(-r));
    CHECK(f(1, 1).imag() == 0.0);
  }
  SUBCASE("k = 2 entries are i^{mn}/2, exactly") {
    const Matrix f = qft_matrix(2);
    const Complex i(0.0, 1.0);
    for (std::size_t m = 0; m < 4; ++m) {
      for (std::size_t n = 0; n < 4; ++n) {
        Complex expected(0.25, 0.0);
        for (std::size_t p = 0; p < (m * n) % 4; ++p) expected *= i;
        expected *= 2.0;  // 1/sqrt(4) = 1/2
        CHECK(f(m, n) == expected);
      }
    }
  }
}

TEST_CASE("qft_matrix is unitary") {
  for (std::size_t k = 1; k <= 6; ++k) {
    const Matrix f = qft_matrix(k);
    CHECK(max_abs_diff(conj_transpose(f) * f,
                       Matrix::identity(f.rows())) <= 1e-13);
  }
}

TEST_CASE("qft network branch-1 action equals the matrix") {
  Rng rng(61);
  for (std::size_t k = 1; k <= 4; ++k) {
    const Matrix f = qft_matrix(k);
    const Network net = qft_network(k);
    const RegisterLayout layout({f.rows()}, true);
    for (int rep = 0; rep < 10; ++rep) {
      const CVec psi = random_state(rng, f.rows());
      const AugmentedState out = evaluate(net, make_augmented(psi, layout));
      CHECK(max_abs_diff(project_aux(out, 1), mat_apply(f, psi)) <= 1e-12);
    }
  }
}

TEST_CASE("qft network on |0> gives the uniform column") {
  const Network net = qft_network(1);
  const AugmentedState out = evaluate(
      net, make_augmented(basis_vector(2, 0), RegisterLayout({2}, true)));
  const CVec branch = project_aux(out, 1);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(branch[0].real() == doctest::Approx(r));
  CHECK(branch[1].real() == doctest::Approx(r));
}

TEST_CASE("inverse transform undoes the transform") {
  for (std::size_t k = 1; k <= 5; ++k) {
    const Matrix prod = qft_inverse_matrix(k) * qft_matrix(k);
    CHECK(max_abs_diff(prod, Matrix::identity(prod.rows())) <= 1e-13);
  }
}

TEST_CASE("grover k=2 reaches certainty in one iteration, exactly") {
  for (std::size_t j = 0; j < 4; ++j) {
    const GroverReport report = grover_run(2, j, 1);
    CHECK(report.success_probability == 1.0);
  }
}

TEST_CASE("grover with zero iterations stays uniform") {
  const GroverReport report = grover_run(3, 5, 0);
  CHECK(report.success_probability == doctest::Approx(1.0 / 8.0).epsilon(1e-14));
}

TEST_CASE("grover auto iteration count") {
  const GroverReport report = grover_run(4, 3);
  CHECK(report.iterations == 3);  // floor(pi * 4 / 4)
  const double expected = std::pow(std::sin(7.0 * std::asin(0.25)), 2);
  CHECK(report.success_probability == doctest::Approx(expected).epsilon(1e-6));
}

TEST_CASE("grover trajectory follows sin^2((2t+1) theta)") {
  const std::size_t k = 3;
  const double theta = std::asin(std::pow(2.0, -1.5));
  const GroverReport report = grover_run(k, 1);
  REQUIRE(report.per_iteration_probs.size() == report.iterations + 1);
  for (std::size_t t = 0; t < report.per_iteration_probs.size(); ++t) {
    const double expected =
        std::pow(std::sin((2.0 * static_cast<double>(t) + 1.0) * theta), 2);
    CHECK(std::abs(report.per_iteration_probs[t] - expected) <= 1e-10);
  }
}

TEST_CASE("grover rejects an out-of-range target") {
  CHECK_THROWS_AS(grover_run(2, 4), InvalidInput);
}

TEST_CASE("continued fractions") {
  using P = std::pair<std::uint64_t, std::uint64_t>;
  SUBCASE("192/256 ends at 3/4") {
    const auto conv = continued_fraction(192, 256);
    REQUIRE(!conv.empty());
    CHECK(conv.front() == P{0, 1});
    CHECK(conv.back() == P{3, 4});
  }
  SUBCASE("0/256 is just 0/1") {
    const auto conv = continued_fraction(0, 256);
    REQUIRE(conv.size() == 1);
    CHECK(conv.front() == P{0, 1});
  }
  SUBCASE("128/256 reduces to 1/2") {
    const auto conv = continued_fraction(128, 256);
    REQUIRE(conv.size() == 2);
    CHECK(conv[0] == P{0, 1});
    CHECK(conv[1] == P{1, 2});
  }
  SUBCASE("denominators ascend") {
    const auto conv = continued_fraction(177, 256);
    for (std::size_t i = 1; i < conv.size(); ++i) {
      CHECK(conv[i].second >= conv[i - 1].second);
    }
  }
  CHECK_THROWS_AS(continued_fraction(1, 0), InvalidInput);
}

TEST_CASE("shor postprocessing recovers the period from a good peak") {
  const ShorPostprocess good = shor_postprocess(192, 256, 7, 15);
  REQUIRE(good.period.has_value());
  CHECK(*good.period == 4);
  REQUIRE(good.factors.has_value());
  CHECK(good.factors->first == 3);
  CHECK(good.factors->second == 5);

  // y = 0 carries no information: the retry case.
  const ShorPostprocess zero = shor_postprocess(0, 256, 7, 15);
  CHECK(!zero.period.has_value());
  CHECK(!zero.factors.has_value());

  // y = 128 reduces to 1/2; 7^2 = 4 mod 15, so no period either.
  const ShorPostprocess half = shor_postprocess(128, 256, 7, 15);
  CHECK(!half.period.has_value());
}

TEST_CASE("measure_register") {
  Rng rng(62);
  SUBCASE("basis state measures to itself") {
    const AugmentedState s = make_augmented(basis_vector(8, 5),
                                            RegisterLayout({8}, true));
    const MeasureOutcome mo = measure_register(s, 0, MeasureKind::Sample, &rng);
    CHECK(mo.outcome == 5);
    CHECK(mo.distribution[5].second == doctest::Approx(1.0));
  }
  SUBCASE("uniform state is uniform over outcomes") {
    const std::size_t dim = 8;
    CVec psi(dim, Complex(1.0 / std::sqrt(8.0), 0.0));
    const AugmentedState s = make_augmented(psi, RegisterLayout({dim}, true));
    const MeasureOutcome mo =
        measure_register(s, 0, MeasureKind::Distribution);
    for (const auto& [v, p] : mo.distribution) {
      CHECK(p == doctest::Approx(1.0 / 8.0).epsilon(1e-12));
    }
  }
  SUBCASE("zero-norm state is rejected") {
    const AugmentedState s{RegisterLayout({4}, true), CVec(8)};
    CHECK_THROWS_AS(measure_register(s, 0, MeasureKind::Distribution),
                    DegenerateState);
  }
  SUBCASE("impossible fixed outcome is rejected") {
    const AugmentedState s = make_augmented(basis_vector(4, 1),
                                            RegisterLayout({4}, true));
    CHECK_THROWS_AS(
        measure_register(s, 0, MeasureKind::Fixed, nullptr, 2),
        DegenerateState);
  }
}

TEST_CASE("post-map second register distribution for N=15, a=7") {
  // The modular-map image cycles through 7, 4, 13, 1 with equal weight.
  const ShorReport report = shor_run(15, 7, 4);
  REQUIRE(report.period_r.has_value());
  CHECK(*report.period_r == 4);
  REQUIRE(report.factors.has_value());
  CHECK(report.factors->first == 3);
  CHECK(report.factors->second == 5);
  // k = 4: peaks at multiples of 16/4 = 4.
  REQUIRE(report.peak_distribution.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(report.peak_distribution[i].first == 4 * i);
    CHECK(report.peak_distribution[i].second ==
          doctest::Approx(0.25).epsilon(1e-10));
  }
}

TEST_CASE("shor full distribution at the canonical scale") {
  const ShorReport report = shor_run(15, 7, 8);
  REQUIRE(report.peak_distribution.size() == 4);
  const std::uint64_t support[] = {0, 64, 128, 192};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(report.peak_distribution[i].first == support[i]);
    CHECK(std::abs(report.peak_distribution[i].second - 0.25) <= 1e-10);
  }
  CHECK(*report.period_r == 4);
  CHECK(report.factors->first == 3);
  CHECK(report.factors->second == 5);
  REQUIRE(report.measured_y.has_value());
  CHECK(*report.measured_y == 64);
}

TEST_CASE("shor a=11 has period 2") {
  const ShorReport report = shor_run(15, 11, 8);
  REQUIRE(report.period_r.has_value());
  CHECK(*report.period_r == 2);
  REQUIRE(report.factors.has_value());
  CHECK(report.factors->first == 3);
  CHECK(report.factors->second == 5);
  REQUIRE(report.peak_distribution.size() == 2);
  CHECK(report.peak_distribution[0].first == 0);
  CHECK(report.peak_distribution[1].first == 128);
}

TEST_CASE("shor trivial gcd shortcut") {
  const ShorReport report = shor_run(15, 5, 4);
  REQUIRE(report.factors.has_value());
  CHECK(report.factors->first == 3);
  CHECK(report.factors->second == 5);
  CHECK(!report.period_r.has_value());
  CHECK(report.peak_distribution.empty());
}

TEST_CASE("shor fixed-m mode collapses the second register deterministically") {
  const ShorMeasurement mode{ShorMeasurement::Kind::FixedM, 0, 1};
  const ShorReport report = shor_run(15, 7, 8, mode);
  // Conditioned on a^1 = 7, the first register still peaks at the same
  // multiples of 64.
  REQUIRE(report.peak_distribution.size() == 4);
  CHECK(*report.period_r == 4);
}

TEST_CASE("shor sampling is deterministic per seed") {
  const ShorMeasurement mode{ShorMeasurement::Kind::Sample, 1234, 0};
  const ShorReport a = shor_run(15, 7, 8, mode);
  const ShorReport b = shor_run(15, 7, 8, mode);
  CHECK(emit_report(shor_report_to_json(a)) ==
        emit_report(shor_report_to_json(b)));
  REQUIRE(a.measured_y.has_value());
  CHECK(a.peak_distribution.empty());
}

TEST_CASE("shor default qubit count") {
  CHECK(shor_default_qubits(15) == 8);
}

TEST_CASE("shor input validation") {
  CHECK_THROWS_AS(shor_run(15, 1, 8), InvalidInput);
  CHECK_THROWS_AS(shor_run(15, 15, 8), InvalidInput);
  CHECK_THROWS_AS(shor_run(15, 7, 2), InvalidInput);
}

TEST_CASE("heterotic swaps leave the reports unchanged") {
  SUBCASE("grover") {
    const GroverReport native = grover_run(3, 2);
    GroverOptions opt;
    opt.external_qft = true;
    opt.external_prep = true;
    const GroverReport swapped = grover_run(3, 2, {}, opt);
    CHECK(std::abs(native.success_probability -
                   swapped.success_probability) <= 1e-10);
    REQUIRE(native.per_iteration_probs.size() ==
            swapped.per_iteration_probs.size());
    for (std::size_t t = 0; t < native.per_iteration_probs.size(); ++t) {
      CHECK(std::abs(native.per_iteration_probs[t] -
                     swapped.per_iteration_probs[t]) <= 1e-10);
    }
  }
  SUBCASE("shor") {
    const ShorReport native = shor_run(15, 7, 4);
    ShorOptions opt;
    opt.external_qft = true;
    opt.external_prep = true;
    const ShorReport swapped = shor_run(15, 7, 4, {}, opt);
    REQUIRE(native.peak_distribution.size() ==
            swapped.peak_distribution.size());
    for (std::size_t i = 0; i < native.peak_distribution.size(); ++i) {
      CHECK(native.peak_distribution[i].first ==
            swapped.peak_distribution[i].first);
      CHECK(std::abs(native.peak_distribution[i].second -
                     swapped.peak_distribution[i].second) <= 1e-10);
    }
    CHECK(native.period_r == swapped.period_r);
    CHECK(native.factors == swapped.factors);
  }
}

TEST_SUITE_END();
