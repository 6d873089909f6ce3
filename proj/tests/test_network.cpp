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

#include "qnet/error.hpp"
#include "qnet/json_io.hpp"
#include "qnet/kernels.hpp"
#include "qnet/linalg.hpp"
#include "qnet/network.hpp"
#include "qnet/rng.hpp"

using namespace qnet;

namespace {

AugmentedState augmented(const CVec& psi) {
  return make_augmented(psi, RegisterLayout({psi.size()}, true));
}

}  // namespace

TEST_SUITE_BEGIN("network");

TEST_CASE("q_of of the zero matrix is the empty network (identity)") {
  const Network net = q_of(Matrix(3, 3));
  CHECK(net.size() == 0);
  Rng rng(31);
  const CVec psi = random_state(rng, 3);
  const AugmentedState out = evaluate(net, augmented(psi));
  CHECK(max_abs_diff(out.amplitudes, augmented(psi).amplitudes) == 0.0);
}

TEST_CASE("q_of(I2) realizes the universal output form") {
  const AugmentedState out =
      evaluate(q_of(Matrix::identity(2)), augmented(basis_vector(2, 0)));
  CHECK(out.at(0, 0) == Complex(1.0, 0.0));
  CHECK(out.at(0, 1) == Complex(1.0, 0.0));
  CHECK(out.at(1, 0) == Complex(0.0, 0.0));
  CHECK(out.at(1, 1) == Complex(0.0, 0.0));
}

TEST_CASE("q_of branch-1 equals U psi for random non-unitary U") {
  Rng rng(32);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t dim = 2 + rng.index(7);
    const Matrix u = random_matrix(rng, dim, dim);
    const CVec psi = random_state(rng, dim);
    const AugmentedState out = evaluate(q_of(u), augmented(psi));
    CHECK(max_abs_diff(project_aux(out, 1), mat_apply(u, psi)) <= 1e-12);
    CHECK(max_abs_diff(project_aux(out, 0), psi) == 0.0);
  }
}

TEST_CASE("q_of skips zero entries") {
  Matrix u(4, 4);
  u(1, 2) = Complex(0.5, 0.0);
  u(3, 3) = Complex(0.0, -1.0);
  const Network net = q_of(u);
  CHECK(net.size() == 2);
}

TEST_CASE("q_of rejects non-square input") {
  CHECK_THROWS_AS(q_of(Matrix(2, 3)), InvalidInput);
}

TEST_CASE("evaluate validates dimensions and aux") {
  const Network net = q_of(Matrix::identity(4));
  Rng rng(33);
  CHECK_THROWS_AS(evaluate(net, augmented(random_state(rng, 8))),
                  InvalidInput);
}

TEST_CASE("materialized q_of has the block form [[I,0],[U,I]]") {
  Rng rng(34);
  const std::size_t dim = 5;
  const Matrix u = random_matrix(rng, dim, dim);
  const Matrix m = materialize_network(q_of(u));
  Matrix expected = Matrix::identity(2 * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      expected(dim + i, j) = u(i, j);
    }
  }
  CHECK(max_abs_diff(m, expected) <= 1e-13);
}

TEST_CASE("inverse_network negates amplitudes and inverts the matrix") {
  Rng rng(35);
  const Matrix u = random_matrix(rng, 8, 8);
  const Network net = q_of(u);
  const Network inv = inverse_network(net);
  const Matrix prod = kernels::matmul(materialize_network(inv),
                                      materialize_network(net));
  CHECK(max_abs_diff(prod, Matrix::identity(16)) <= 1e-12);

  // inverse(q_of(U)) = q_of(-U), element by element.
  const Network neg = q_of(Complex(-1.0, 0.0) * u);
  CHECK(emit_report(network_to_json(inv)) ==
        emit_report(network_to_json(neg)));

  CHECK_THROWS_AS(inverse_network(compose_product({net})),
                  CompositionError);
}

TEST_CASE("inverse of the empty network is empty") {
  const Network inv = inverse_network(Network(4));
  CHECK(inv.size() == 0);
}

TEST_CASE("compose_sum concatenates and matches q_of of the sum") {
  Rng rng(36);
  for (int rep = 0; rep < 10; ++rep) {
    const std::size_t dim = 2 + rng.index(3);
    const Matrix a = random_matrix(rng, dim, dim);
    const Matrix b = random_matrix(rng, dim, dim);
    const Matrix lhs = materialize_network(compose_sum({q_of(a), q_of(b)}));
    const Matrix rhs = materialize_network(q_of(a + b));
    CHECK(max_abs_diff(lhs, rhs) <= 1e-12);
  }
}

TEST_CASE("compose_sum of a network with its negation acts as identity") {
  Rng rng(37);
  const Matrix u = random_matrix(rng, 4, 4);
  const Network net = compose_sum({q_of(u), q_of(Complex(-1.0, 0.0) * u)});
  CHECK(max_abs_diff(materialize_network(net), Matrix::identity(8)) <=
        1e-14);
}

TEST_CASE("compose_sum validation") {
  const Network a = q_of(Matrix::identity(2));
  const Network b = q_of(Matrix::identity(4));
  CHECK_THROWS_AS(compose_sum({a, b}), CompositionError);
  CHECK_THROWS_AS(compose_sum({compose_product({a})}), CompositionError);
  const Network single = compose_sum({a});
  CHECK(single.size() == a.size());
}

TEST_CASE("compose_product fixes the ordering convention: first factor acts last") {
  Rng rng(38);
  const std::size_t dim = 4;
  const Matrix a = random_matrix(rng, dim, dim);
  const Matrix b = random_matrix(rng, dim, dim);
  const CVec psi = random_state(rng, dim);
  const AugmentedState out =
      evaluate(compose_product({q_of(a), q_of(b)}), augmented(psi));
  const CVec expected = mat_apply(a, mat_apply(b, psi));
  CHECK(max_abs_diff(project_aux(out, 1), expected) <= 1e-12);
  // The identity term preserves the input branch.
  CHECK(max_abs_diff(project_aux(out, 0), psi) <= 1e-14);
}

TEST_CASE("compose_product interior squares to zero") {
  Rng rng(39);
  const Network net = compose_product(
      {q_of(random_matrix(rng, 4, 4)), q_of(random_matrix(rng, 4, 4)),
       q_of(random_matrix(rng, 4, 4))});
  const Matrix interior = materialize_network(net.interior());
  CHECK(max_abs(kernels::matmul(interior, interior)) == 0.0);
}

TEST_CASE("compose_product of a single q_of slot behaves like it") {
  Rng rng(40);
  const Matrix u = random_matrix(rng, 4, 4);
  const CVec psi = random_state(rng, 4);
  const AugmentedState lhs = evaluate(compose_product({q_of(u)}),
                                      augmented(psi));
  const AugmentedState rhs = evaluate(q_of(u), augmented(psi));
  CHECK(max_abs_diff(lhs.amplitudes, rhs.amplitudes) <= 1e-13);
  CHECK_THROWS_AS(compose_product({}), InvalidInput);
}

TEST_CASE("compose_product marks slots by label") {
  const Network net =
      compose_product({q_of(Matrix::identity(2)), qnet::Network(2, "noop")});
  REQUIRE(net.marks().size() == 2);
  CHECK(net.marks()[1].label == "slot 0");
  CHECK(net.marks()[0].label == "noop");
}

TEST_CASE("swap_slot exchanges a marked subnetwork") {
  Rng rng(41);
  const Matrix a = random_matrix(rng, 4, 4);
  const Matrix b = random_matrix(rng, 4, 4);
  Network qa = q_of(a);
  qa.set_label("stage-a");
  Network net = compose_product({qa, q_of(b)});
  const CVec psi = random_state(rng, 4);
  const CVec before = project_aux(evaluate(net, augmented(psi)), 1);

  // Swapping the a-stage for its dense external equivalent changes nothing.
  CHECK(swap_slot(net, "stage-a", embed_external(a, false)));
  const CVec after = project_aux(evaluate(net, augmented(psi)), 1);
  CHECK(max_abs_diff(before, after) <= 1e-12);
  CHECK_FALSE(swap_slot(net, "missing", embed_external(a, false)));
}

TEST_CASE("two_register_lift keeps the in register and maps the out register") {
  Rng rng(42);
  const std::size_t dim = 3;
  const Matrix u = random_matrix(rng, dim, dim);
  const Network lifted = two_register_lift({q_of(u)});
  CHECK(lifted.dim() == dim * dim);
  CHECK_FALSE(lifted.identity_plus());

  const CVec psi_in = random_state(rng, dim);
  const CVec psi_out = random_state(rng, dim);
  CVec joint(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      joint[i * dim + j] = psi_in[i] * psi_out[j];
    }
  }
  const AugmentedState out = evaluate(
      lifted, make_augmented(joint, RegisterLayout({dim, dim}, true)));
  const CVec mapped = mat_apply(u, psi_out);
  CVec expected(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      expected[i * dim + j] = psi_in[i] * mapped[j];
    }
  }
  CHECK(max_abs_diff(project_aux(out, 1), expected) <= 1e-12);
  CHECK(max_abs(project_aux(out, 0)) == 0.0);

  // Norm factorizes: |out| = |U psi_out| * |psi_in|.
  CHECK(norm2(project_aux(out, 1)) ==
        doctest::Approx(norm2(mapped) * norm2(psi_in)).epsilon(1e-12));
}

TEST_CASE("tensor_lift emits the lifted operator without dense kron") {
  Rng rng(43);
  Matrix x(2, 2);
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;
  // Lift X into slot 0 of a two-qubit register: |00> -> |10> on branch 1.
  const Network net = tensor_lift(x, 0, {2, 2});
  const AugmentedState out = evaluate(net, augmented(basis_vector(4, 0)));
  CHECK(max_abs_diff(project_aux(out, 1), basis_vector(4, 2)) == 0.0);

  // Lifting the identity gives q_of(identity) on the full space.
  const Network ident = tensor_lift(Matrix::identity(2), 1, {2, 2});
  CHECK(max_abs_diff(network_action(ident), Matrix::identity(4)) == 0.0);

  CHECK_THROWS_AS(tensor_lift(x, 2, {2, 2}), InvalidInput);
  CHECK_THROWS_AS(tensor_lift(x, 0, {4, 2}), InvalidInput);
}

TEST_CASE("product of single-slot lifts equals q_of of the kron") {
  Rng rng(44);
  const Matrix u1 = random_matrix(rng, 2, 2);
  const Matrix u2 = random_matrix(rng, 2, 2);
  const Network lifted = compose_product(
      {tensor_lift(u1, 0, {2, 2}), tensor_lift(u2, 1, {2, 2})});
  const CVec psi = random_state(rng, 4);
  const AugmentedState out = evaluate(lifted, augmented(psi));
  const CVec expected = mat_apply(kron(u1, u2), psi);
  CHECK(max_abs_diff(project_aux(out, 1), expected) <= 1e-12);
}

TEST_CASE("embed_external composes like a native subnetwork") {
  Rng rng(45);
  const Matrix a = random_matrix(rng, 4, 4);
  const Matrix b = random_matrix(rng, 4, 4);
  const CVec psi = random_state(rng, 4);

  const AugmentedState native =
      evaluate(compose_product({q_of(a), q_of(b)}), augmented(psi));
  const AugmentedState mixed = evaluate(
      compose_product({embed_external(a, false), q_of(b)}), augmented(psi));
  CHECK(max_abs_diff(project_aux(native, 1), project_aux(mixed, 1)) <=
        1e-12);

  // Identity embedding acts as the identity.
  const AugmentedState ident =
      evaluate(embed_external(Matrix::identity(4), true), augmented(psi));
  CHECK(max_abs_diff(project_aux(ident, 0), psi) == 0.0);
}

TEST_CASE("register-only external slots splice into a product chain") {
  Rng rng(46);
  const Matrix a = random_matrix(rng, 4, 4);
  const Matrix b = random_matrix(rng, 4, 4);
  const CVec psi = random_state(rng, 4);
  const AugmentedState native =
      evaluate(compose_product({q_of(a), q_of(b)}), augmented(psi));
  const AugmentedState heterotic = evaluate(
      compose_product({q_of(a), embed_external(b, true)}), augmented(psi));
  CHECK(max_abs_diff(project_aux(native, 1), project_aux(heterotic, 1)) <=
        1e-12);
}

TEST_CASE("network JSON round-trips bit-exactly") {
  Rng rng(47);
  Network net = compose_product(
      {q_of(random_matrix(rng, 3, 3)), embed_external(random_matrix(rng, 3, 3), true)});
  const Json j1 = network_to_json(net);
  const Network back = network_from_json(j1);
  const Json j2 = network_to_json(back);
  CHECK(emit_report(j1) == emit_report(j2));
  CHECK(back.identity_plus() == net.identity_plus());
  CHECK(back.marks().size() == net.marks().size());
}

TEST_CASE("operation counting stays element-local") {
  Rng rng(48);
  const std::size_t dim = 32;
  const Matrix u = random_matrix(rng, dim, dim);
  const Network net = q_of(u);
  EvalStats stats;
  evaluate(net, augmented(random_state(rng, dim)), &stats);
  // One amplitude update per nonzero entry of U.
  CHECK(stats.amplitude_ops == dim * dim);
}

TEST_SUITE_END();
