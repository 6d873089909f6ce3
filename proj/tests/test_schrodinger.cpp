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

#include "qnet/error.hpp"
#include "qnet/kernels.hpp"
#include "qnet/linalg.hpp"
#include "qnet/rng.hpp"
#include "qnet/schrodinger.hpp"

using namespace qnet;

namespace {

EvolutionSpec harmonic_spec(double dt, double total_t, double omega = 1.0) {
  EvolutionSpec spec;
  spec.mass_mu = 1.0;
  spec.dt = dt;
  spec.total_t = total_t;
  spec.potential.kind = Potential::Kind::Harmonic;
  spec.potential.omega = omega;
  return spec;
}

}  // namespace

TEST_SUITE_BEGIN("schrodinger");

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(Grid(12, 1.0), InvalidInput);
  CHECK_THROWS_AS(Grid(16, 0.0), InvalidInput);
  const Grid g(16, 4.0);
  CHECK(g.dx() == doctest::Approx(0.25));
  CHECK(g.position(3) == doctest::Approx(0.75));
}

TEST_CASE("momentum operator is Hermitian and kills constants") {
  const Grid g(16, 4.0);
  const Matrix p = momentum_op(g);
  CHECK(max_abs_diff(p, conj_transpose(p)) == 0.0);
  const CVec ones(16, Complex(1.0, 0.0));
  CHECK(max_abs(mat_apply(p, ones)) == 0.0);
}

TEST_CASE("momentum spectrum is (N/L) sin(2 pi q / N)") {
  const Grid g(16, 4.0);
  const Matrix p = momentum_op(g);
  const double scale = 16.0 / 4.0;
  for (std::size_t q = 0; q < 16; ++q) {
    CVec v(16);
    for (std::size_t m = 0; m < 16; ++m) {
      v[m] = std::polar(1.0, 2.0 * std::numbers::pi *
                                 static_cast<double>(q * m) / 16.0);
    }
    const double lambda =
        scale * std::sin(2.0 * std::numbers::pi * static_cast<double>(q) / 16.0);
    CHECK(max_abs_diff(mat_apply(p, v), Complex(lambda, 0.0) * v) <= 1e-10);
  }
}

TEST_CASE("periodic wrap places signed corner entries") {
  const Grid g(8, 2.0);
  const Matrix p = momentum_op(g);
  const double s = 0.5 * 8.0 / 2.0;
  CHECK(p(0, 7) == Complex(0.0, s));
  CHECK(p(7, 0) == Complex(0.0, -s));
  CHECK(p(0, 1) == Complex(0.0, -s));
}

TEST_CASE("kinetic operator equals momentum^2 / (2 mu)") {
  for (std::size_t n : {4, 8, 16, 64}) {
    const Grid g(n, 5.0);
    const double mu = 1.7;
    const Matrix p = momentum_op(g);
    const Matrix expected =
        Complex(1.0 / (2.0 * mu), 0.0) * kernels::matmul(p, p);
    CHECK(max_abs_diff(kinetic_op(g, mu), expected) <= 1e-12);
  }
}

TEST_CASE("kinetic operator kills constants and is PSD on plane waves") {
  const Grid g(16, 4.0);
  const Matrix t = kinetic_op(g, 1.0);
  const CVec ones(16, Complex(1.0, 0.0));
  CHECK(max_abs(mat_apply(t, ones)) <= 1e-14);
  // Plane waves are eigenvectors with eigenvalue (N/L)^2 sin^2(2pi q/N)/(2mu).
  for (std::size_t q = 0; q < 16; ++q) {
    CVec v(16);
    for (std::size_t m = 0; m < 16; ++m) {
      v[m] = std::polar(1.0, 2.0 * std::numbers::pi *
                                 static_cast<double>(q * m) / 16.0);
    }
    const double s = 4.0 * std::sin(2.0 * std::numbers::pi *
                                    static_cast<double>(q) / 16.0);
    const double lambda = s * s / 2.0;
    CHECK(lambda >= -1e-12);
    CHECK(max_abs_diff(mat_apply(t, v), Complex(lambda, 0.0) * v) <= 1e-10);
  }
}

TEST_CASE("potential operator forms") {
  const Grid g(8, 4.0);
  SUBCASE("zero and constant") {
    EvolutionSpec spec;
    spec.potential.kind = Potential::Kind::Zero;
    for (double v : sample_potential(g, spec)) CHECK(v == 0.0);
    spec.potential.kind = Potential::Kind::Constant;
    spec.potential.constant = 2.5;
    for (double v : sample_potential(g, spec)) CHECK(v == 2.5);
  }
  SUBCASE("harmonic matches the formula pointwise") {
    EvolutionSpec spec;
    spec.mass_mu = 2.0;
    spec.potential.kind = Potential::Kind::Harmonic;
    spec.potential.omega = 1.5;
    const std::vector<double> v = sample_potential(g, spec);
    for (std::size_t m = 0; m < 8; ++m) {
      const double d = g.position(m) - 2.0;
      CHECK(v[m] == doctest::Approx(0.5 * 2.0 * 1.5 * 1.5 * d * d));
    }
  }
  SUBCASE("function-driven diagonal") {
    const Matrix d = potential_op(g, [](double x) { return 3.0 * x; });
    for (std::size_t m = 0; m < 8; ++m) {
      CHECK(d(m, m).real() == doctest::Approx(3.0 * g.position(m)));
    }
    CHECK_THROWS_AS(
        potential_op(g, [](double) { return std::nan(""); }), InvalidInput);
  }
  SUBCASE("tabulated values must match the grid") {
    EvolutionSpec spec;
    spec.potential.kind = Potential::Kind::Tabulated;
    spec.potential.table = {1.0, 2.0};
    CHECK_THROWS_AS(sample_potential(g, spec), InvalidInput);
  }
}

TEST_CASE("euler step with dt = 0 acts as the identity") {
  const Grid g(8, 4.0);
  EvolutionSpec spec = harmonic_spec(0.0, 1.0);
  const Network net = euler_step_network(g, spec);
  Rng rng(71);
  const CVec psi = random_state(rng, 8);
  const AugmentedState out =
      evaluate(net, make_augmented(psi, RegisterLayout({8}, true)));
  CHECK(max_abs_diff(project_aux(out, 1), psi) == 0.0);
}

TEST_CASE("euler step branch-1 equals (1 - i dt H) psi") {
  Rng rng(72);
  const Grid g(8, 4.0);
  const EvolutionSpec spec = harmonic_spec(0.01, 0.01);
  const Matrix h = hamiltonian(g, spec);
  const Network net = euler_step_network(g, spec);
  for (int rep = 0; rep < 10; ++rep) {
    const CVec psi = random_state(rng, 8);
    const AugmentedState out =
        evaluate(net, make_augmented(psi, RegisterLayout({8}, true)));
    CVec expected = psi;
    const CVec h_psi = mat_apply(h, psi);
    for (std::size_t m = 0; m < 8; ++m) {
      expected[m] -= Complex(0.0, spec.dt) * h_psi[m];
    }
    CHECK(max_abs_diff(project_aux(out, 1), expected) <= 1e-12);
  }
}

TEST_CASE("one evolution step equals the euler step network") {
  Rng rng(73);
  const Grid g(8, 4.0);
  const EvolutionSpec spec = harmonic_spec(0.01, 0.01);
  const CVec psi = random_state(rng, 8);
  const RegisterLayout layout({8}, true);
  const CVec via_step = project_aux(
      evaluate(euler_step_network(g, spec), make_augmented(psi, layout)), 1);
  const CVec via_evolve = project_aux(
      evaluate(evolve_network(g, spec), make_augmented(psi, layout)), 1);
  CHECK(max_abs_diff(via_step, via_evolve) <= 1e-13);
}

TEST_CASE("two steps square the euler operator") {
  Rng rng(74);
  const Grid g(8, 4.0);
  const EvolutionSpec spec = harmonic_spec(0.01, 0.02);
  CHECK(spec.steps() == 2);
  const Matrix h = hamiltonian(g, spec);
  const CVec psi = random_state(rng, 8);
  const AugmentedState out = evaluate(
      evolve_network(g, spec), make_augmented(psi, RegisterLayout({8}, true)));
  CVec expected = psi;
  for (int s = 0; s < 2; ++s) {
    const CVec h_psi = mat_apply(h, expected);
    for (std::size_t m = 0; m < 8; ++m) {
      expected[m] -= Complex(0.0, spec.dt) * h_psi[m];
    }
  }
  CHECK(max_abs_diff(project_aux(out, 1), expected) <= 1e-12);
}

TEST_CASE("plane-wave eigenstate evolves by the scalar euler factor") {
  const Grid g(16, 4.0);
  EvolutionSpec spec;
  spec.mass_mu = 1.0;
  spec.dt = 0.005;
  spec.total_t = 0.05;
  spec.potential.kind = Potential::Kind::Zero;
  const std::size_t q = 3;
  CVec psi(16);
  for (std::size_t m = 0; m < 16; ++m) {
    psi[m] = std::polar(0.25, 2.0 * std::numbers::pi *
                                  static_cast<double>(q * m) / 16.0);
  }
  const double s = 4.0 * std::sin(2.0 * std::numbers::pi * 3.0 / 16.0);
  const Complex factor = Complex(1.0, 0.0) - Complex(0.0, spec.dt) *
                                                 Complex(s * s / 2.0, 0.0);
  Complex scale(1.0, 0.0);
  for (std::size_t step = 0; step < spec.steps(); ++step) scale *= factor;
  const AugmentedState out = evaluate(
      evolve_network(g, spec), make_augmented(psi, RegisterLayout({16}, true)));
  CHECK(max_abs_diff(project_aux(out, 1), scale * psi) <= 1e-12);
}

TEST_CASE("network evolution matches dense euler stepping") {
  Rng rng(75);
  const Grid g(16, 5.0);
  const EvolutionSpec spec = harmonic_spec(0.002, 0.04);
  const Network net = evolve_network(g, spec);
  for (int rep = 0; rep < 5; ++rep) {
    const CVec psi = random_state(rng, 16);
    const AugmentedState out =
        evaluate(net, make_augmented(psi, RegisterLayout({16}, true)));
    CHECK(max_abs_diff(project_aux(out, 1),
                       euler_evolve_dense(g, spec, psi)) <= 1e-10);
  }
}

TEST_CASE("free evolution with H = 0 has zero error") {
  const Grid g(8, 4.0);
  EvolutionSpec spec;
  spec.mass_mu = 1.0;
  spec.dt = 0.01;
  spec.total_t = 0.1;
  spec.potential.kind = Potential::Kind::Zero;
  // Zero out the kinetic part by using a constant vector (eigenvalue 0).
  CVec psi(8, Complex(1.0 / std::sqrt(8.0), 0.0));
  const ExactComparison cmp = compare_exact(g, spec, psi);
  CHECK(cmp.global_error <= 1e-12);
}

TEST_CASE("harmonic convergence is first order") {
  const Grid g(64, 8.0);
  const EvolutionSpec spec = harmonic_spec(0.1 / 64.0, 0.1);
  const CVec psi0 = gaussian_packet(g, 4.0, 0.8, 2.0);
  const ExactComparison cmp = compare_exact(g, spec, psi0);
  REQUIRE(cmp.table.size() == 3);
  REQUIRE(cmp.observed_orders.size() == 2);
  for (double p : cmp.observed_orders) {
    CHECK(p > 0.8);
    CHECK(p < 1.2);
  }
}

TEST_CASE("norm history grows monotonically by the step identity") {
  const Grid g(32, 6.0);
  const EvolutionSpec spec = harmonic_spec(0.004, 0.04, 2.0);
  const CVec psi0 = gaussian_packet(g, 3.0, 0.7, 1.0);
  std::vector<double> norms;
  euler_evolve_dense(g, spec, psi0, false, &norms);
  REQUIRE(norms.size() == spec.steps() + 1);
  for (std::size_t i = 1; i < norms.size(); ++i) {
    CHECK(norms[i] >= norms[i - 1] - 1e-14);
  }

  // One step, checked against 1 + dt^2 ||H psi||^2 exactly.
  const Matrix h = hamiltonian(g, spec);
  const CVec h_psi = mat_apply(h, psi0);
  const double expected =
      std::sqrt(1.0 + spec.dt * spec.dt * norm2_sq(h_psi));
  CHECK(norms[1] == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("renormalized stepping keeps unit norm") {
  const Grid g(16, 4.0);
  const EvolutionSpec spec = harmonic_spec(0.01, 0.05);
  const CVec psi0 = gaussian_packet(g, 2.0, 0.5, 0.0);
  std::vector<double> norms;
  euler_evolve_dense(g, spec, psi0, true, &norms);
  for (std::size_t i = 1; i < norms.size(); ++i) {
    CHECK(norms[i] == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("step count uses rounding and enforces the cap") {
  EvolutionSpec spec = harmonic_spec(0.03, 0.1);
  CHECK(spec.steps() == 3);
  spec.dt = -1.0;
  CHECK_THROWS_AS(spec.steps(), InvalidInput);
  spec.dt = 1e-9;
  spec.total_t = 10.0;
  CHECK_THROWS_AS(spec.steps(), CapacityError);
}

TEST_SUITE_END();
