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

#include "qnet/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>

#include "qnet/algorithms.hpp"
#include "qnet/compiler.hpp"
#include "qnet/elements.hpp"
#include "qnet/kernels.hpp"
#include "qnet/linalg.hpp"
#include "qnet/network.hpp"
#include "qnet/reports.hpp"
#include "qnet/rng.hpp"
#include "qnet/schrodinger.hpp"

namespace qnet {

namespace {

const std::size_t kSmallDims[] = {2, 4, 8, 16};

Element random_pure_element(Rng& rng, std::size_t dim) {
  const std::size_t m = rng.index(dim);
  if (rng.uniform01() < 0.3 || dim == 1) {
    return Rotator{m, rng.complex_unit_box()};
  }
  std::size_t n = rng.index(dim - 1);
  if (n >= m) ++n;
  return Transitor{m, n, rng.complex_unit_box()};
}

AugmentedState random_augmented(Rng& rng, std::size_t dim) {
  return AugmentedState{RegisterLayout({dim}, true),
                        random_state(rng, 2 * dim, false)};
}

// --- core ---------------------------------------------------------------

double check_mat_apply_composition(std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t n = 1 + rng.index(64);
    const std::size_t m = 1 + rng.index(64);
    const std::size_t k = 1 + rng.index(64);
    const Matrix a = random_matrix(rng, m, k);
    const Matrix b = random_matrix(rng, k, n);
    const CVec v = random_state(rng, n);
    const CVec left = mat_apply(a, mat_apply(b, v));
    const CVec right = mat_apply(kernels::matmul(a, b), v);
    err = std::max(err, max_abs_diff(left, right));
  }
  return err;
}

double check_kron_mixed_product(std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (int rep = 0; rep < 25; ++rep) {
    const std::size_t p = 2 + rng.index(3);
    const std::size_t q = 2 + rng.index(3);
    const Matrix a = random_matrix(rng, p, p);
    const Matrix b = random_matrix(rng, q, q);
    const Matrix c = random_matrix(rng, p, p);
    const Matrix d = random_matrix(rng, q, q);
    const Matrix lhs = kernels::matmul(kron(a, b), kron(c, d));
    const Matrix rhs = kron(kernels::matmul(a, c), kernels::matmul(b, d));
    err = std::max(err, max_abs_diff(lhs, rhs));
  }
  return err;
}

double check_expm_inverse(std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (int rep = 0; rep < 10; ++rep) {
    const std::size_t n = 2 + rng.index(7);
    Matrix a = random_matrix(rng, n, n);
    const double nrm = one_norm(a);
    if (nrm > 5.0) a = Complex(5.0 / nrm, 0.0) * a;
    const Matrix prod = kernels::matmul(
        expm_oracle(a), expm_oracle(Complex(-1.0, 0.0) * a));
    err = std::max(err, max_abs_diff(prod, Matrix::identity(n)));
  }
  return err;
}

double check_expm_unitarity(std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (int rep = 0; rep < 10; ++rep) {
    const std::size_t n = 2 + rng.index(7);
    const Matrix h = random_hermitian(rng, n, 2.0);
    const Matrix u = expm_oracle(Complex(0.0, -1.0) * h);
    const Matrix gram = kernels::matmul(conj_transpose(u), u);
    err = std::max(err, max_abs_diff(gram, Matrix::identity(n)));
  }
  return err;
}

double check_parallel_kernels(std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  {
    const Matrix a = random_matrix(rng, 97, 71);
    const Matrix b = random_matrix(rng, 71, 83);
    err = std::max(err, max_abs_diff(kernels::matmul(a, b),
                                     kernels::serial::matmul(a, b)));
  }
  {
    const Matrix a = random_matrix(rng, 600, 600);
    const CVec x = random_state(rng, 600, false);
    err = std::max(err, max_abs_diff(kernels::matvec(a, x),
                                     kernels::serial::matvec(a, x)));
  }
  {
    const Matrix a = random_matrix(rng, 20, 20);
    const Matrix b = random_matrix(rng, 15, 15);
    err = std::max(err, max_abs_diff(kernels::kron(a, b),
                                     kernels::serial::kron(a, b)));
  }
  return err;
}

double check_branch_norm_additivity(std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t dim = 2 + rng.index(31);
    const AugmentedState s = random_augmented(rng, dim);
    const double whole = norm2_sq(s.amplitudes);
    const double parts = branch_norm_sq(s, 0) + branch_norm_sq(s, 1);
    err = std::max(err, std::abs(whole - parts));
  }
  return err;
}

double check_encode_bijection(std::uint64_t) {
  for (std::size_t k = 1; k <= 10; ++k) {
    std::vector<bool> seen(std::size_t{1} << k, false);
    for (std::size_t v = 0; v < (std::size_t{1} << k); ++v) {
      std::vector<int> bits(k);
      for (std::size_t i = 0; i < k; ++i) {
        bits[i] = static_cast<int>((v >> (k - 1 - i)) & 1);
      }
      const std::size_t enc = encode_index(bits);
      if (enc != v || seen[enc]) return 1.0;
      seen[enc] = true;
    }
  }
  return 0.0;
}

// --- elements ------------------------------------------------------------

double check_jointer_nilpotent(std::uint64_t) {
  double err = 0.0;
  for (std::size_t dim : kSmallDims) {
    const Matrix j = materialize_element(Jointer{}, dim);
    const Matrix c = materialize_element(Connector{}, dim);
    err = std::max(err, max_abs(kernels::matmul(j, j)));
    err = std::max(err, max_abs(kernels::matmul(c, c)));
  }
  return err;
}

double check_anticommutator(std::uint64_t) {
  double err = 0.0;
  for (std::size_t dim : kSmallDims) {
    const Matrix j = materialize_element(Jointer{}, dim);
    const Matrix c = materialize_element(Connector{}, dim);
    const Matrix anti =
        kernels::matmul(c, j) + kernels::matmul(j, c);
    err = std::max(err, max_abs_diff(anti, Matrix::identity(2 * dim)));
  }
  return err;
}

double check_factor_commutativity(std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (std::size_t dim : kSmallDims) {
    for (int rep = 0; rep < 8; ++rep) {
      const Matrix a =
          materialize_element(random_pure_element(rng, dim), dim);
      const Matrix b =
          materialize_element(random_pure_element(rng, dim), dim);
      err = std::max(err, max_abs_diff(kernels::matmul(a, b),
                                       kernels::matmul(b, a)));
    }
  }
  return err;
}

double check_apply_matches_dense(std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (std::size_t dim : kSmallDims) {
    std::vector<Element> elements = {
        random_pure_element(rng, dim), Jointer{}, Connector{}, ProjectorD{},
        ProjectorP{},
        External{random_matrix(rng, dim, dim), true},
        External{random_matrix(rng, dim, dim), false}};
    for (const Element& e : elements) {
      const AugmentedState s = random_augmented(rng, dim);
      const AugmentedState fast = apply_element(e, s);
      const CVec dense =
          mat_apply(materialize_element(e, dim), s.amplitudes);
      err = std::max(err, max_abs_diff(fast.amplitudes, dense));
    }
  }
  return err;
}

double check_exchange_small_gates(std::uint64_t) {
  Matrix cnot(4, 4);
  cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
  Matrix swap(4, 4);
  swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1.0;
  double err = max_abs_diff(exchange_gate(2, 3, 4), cnot);
  err = std::max(err, max_abs_diff(exchange_gate(1, 2, 4), swap));
  err = std::max(err, max_abs_diff(exchange_gate(3, 3, 4),
                                   Matrix::identity(4)));
  return err;
}

double check_exchange_defining_property(std::uint64_t) {
  double err = 0.0;
  for (std::size_t dim : {2, 4, 8, 16, 32, 64}) {
    for (std::size_t m = 0; m < dim; ++m) {
      for (std::size_t n = 0; n < dim; ++n) {
        const std::vector<Matrix> factors = exchange_factors(m, n, dim);
        // Column action E|n> = |m>: apply the factors right to left.
        CVec v = basis_vector(dim, n);
        for (std::size_t f = factors.size(); f-- > 0;) {
          v = kernels::matvec(factors[f], v);
        }
        err = std::max(err, max_abs_diff(v, basis_vector(dim, m)));
        // Row action <m|E = <n| via the conjugate transposes.
        CVec w = basis_vector(dim, m);
        for (const Matrix& f : factors) {
          w = kernels::matvec(conj_transpose(f), w);
        }
        err = std::max(err, max_abs_diff(w, basis_vector(dim, n)));
      }
    }
  }
  return err;
}

// The construction formula's literal ordering moves |n> a single step for
// |m-n| > 1; the library uses the reversed ordering. This check records
// that the reversal is required and in effect.
double check_exchange_ordering_note(std::uint64_t) {
  const Matrix printed = exchange_gate_printed_order(3, 0, 8);
  const CVec wrong = mat_apply(printed, basis_vector(8, 0));
  // The literal ordering must NOT satisfy the defining property...
  if (max_abs_diff(wrong, basis_vector(8, 3)) < 0.5) return 1.0;
  // ...and the validated ordering must.
  const CVec right = mat_apply(exchange_gate(3, 0, 8), basis_vector(8, 0));
  return max_abs_diff(right, basis_vector(8, 3));
}

double check_adjacent_exchange_involution(std::uint64_t) {
  double err = 0.0;
  for (std::size_t dim : {4, 8, 16}) {
    for (std::size_t m = 0; m + 1 < dim; ++m) {
      const Matrix e = exchange_gate(m, m + 1, dim);
      err = std::max(err, max_abs_diff(e, conj_transpose(e)));
      err = std::max(err, max_abs_diff(kernels::matmul(e, e),
                                       Matrix::identity(dim)));
    }
  }
  return err;
}

double check_element_costs(std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t dim = 64;
  AugmentedState s = random_augmented(rng, dim);
  EvalStats stats;
  apply_element_inplace(Rotator{3, {0.5, 0.5}}, s, &stats);
  if (stats.amplitude_ops != 1) return 1.0;
  stats = {};
  apply_element_inplace(Transitor{3, 5, {0.5, 0.5}}, s, &stats);
  if (stats.amplitude_ops != 1) return 1.0;
  stats = {};
  apply_element_inplace(Jointer{}, s, &stats);
  apply_element_inplace(Connector{}, s, &stats);
  apply_element_inplace(ProjectorD{}, s, &stats);
  apply_element_inplace(ProjectorP{}, s, &stats);
  return stats.amplitude_ops <= 6 * dim ? 0.0 : 1.0;
}

// --- network -------------------------------------------------------------

double check_universal_action(std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t dim = 2 + rng.index(15);
    const Matrix u = random_matrix(rng, dim, dim);  // generally non-unitary
    const CVec psi = random_state(rng, dim);
    const AugmentedState out =
        evaluate(q_of(u), make_augmented(psi, RegisterLayout({dim}, true)));
    err = std::max(err, max_abs_diff(project_aux(out, 1), mat_apply(u, psi)));
    err = std::max(err, max_abs_diff(project_aux(out, 0), psi));
  }
  return err;
}

double check_closed_form(std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (int rep = 0; rep < 30; ++rep) {
    const std::size_t dim = 2 + rng.index(15);
    const Matrix u = random_matrix(rng, dim, dim);
    Matrix expected(2 * dim, 2 * dim);
    for (std::size_t i = 0; i < 2 * dim; ++i) expected(i, i) = 1.0;
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        expected(dim + i, j) = u(i, j);
      }
    }
    err = std::max(err, max_abs_diff(materialize_network(q_of(u)), expected));
  }
  return err;
}

double check_sum_law(std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t dim = 2 + rng.index(15);
    const Matrix a = random_matrix(rng, dim, dim);
    const Matrix b = random_matrix(rng, dim, dim);
    const Matrix lhs =
        materialize_network(compose_sum({q_of(a), q_of(b)}));
    const Matrix rhs = materialize_network(q_of(a + b));
    err = std::max(err, max_abs_diff(lhs, rhs));
  }
  return err;
}

double check_sum_permutation_invariance(std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (int rep = 0; rep < 10; ++rep) {
    const std::size_t dim = 2 + rng.index(7);
    const Matrix a = random_matrix(rng, dim, dim);
    const Matrix b = random_matrix(rng, dim, dim);
    const Matrix c = random_matrix(rng, dim, dim);
    const Matrix lhs =
        materialize_network(compose_sum({q_of(a), q_of(b), q_of(c)}));
    const Matrix rhs =
        materialize_network(compose_sum({q_of(c), q_of(a), q_of(b)}));
    err = std::max(err, max_abs_diff(lhs, rhs));
  }
  return err;
}

double check_product_law(std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t dim = 2 + rng.index(15);
    const std::size_t r = 1 + rng.index(6);
    std::vector<Network> slots;
    Matrix product = Matrix::identity(dim);
    for (std::size_t j = 0; j < r; ++j) {
      const Matrix u = random_matrix(rng, dim, dim);
      slots.push_back(q_of(u));
      product = kernels::matmul(product, u);
    }
    const CVec psi = random_state(rng, dim);
    const AugmentedState out = evaluate(
        compose_product(slots), make_augmented(psi, RegisterLayout({dim}, true)));
    err = std::max(err,
                   max_abs_diff(project_aux(out, 1), mat_apply(product, psi)));
    err = std::max(err, max_abs_diff(project_aux(out, 0), psi));
  }
  return err;
}

double check_product_interior_nilpotent(std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t dim = 2 + rng.index(7);
    const std::size_t r = 1 + rng.index(4);
    std::vector<Network> slots;
    for (std::size_t j = 0; j < r; ++j) {
      slots.push_back(q_of(random_matrix(rng, dim, dim)));
    }
    const Matrix interior =
        materialize_network(compose_product(slots).interior());
    err = std::max(err, max_abs(kernels::matmul(interior, interior)));
  }
  return err;
}

double check_inverse_network(std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t dim = 2 + rng.index(7);
    const Network net = q_of(random_matrix(rng, dim, dim));
    const Matrix prod = kernels::matmul(
        materialize_network(inverse_network(net)), materialize_network(net));
    err = std::max(err, max_abs_diff(prod, Matrix::identity(2 * dim)));
  }
  return err;
}

double check_two_register_lift(std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (int rep = 0; rep < 10; ++rep) {
    const std::size_t dim = 2 + rng.index(3);
    const Matrix u1 = random_matrix(rng, dim, dim);
    const Matrix u2 = random_matrix(rng, dim, dim);
    const Network lifted = two_register_lift({q_of(u1), q_of(u2)});
    const CVec psi_in = random_state(rng, dim);
    const CVec psi_out = random_state(rng, dim);
    CVec joint(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        joint[i * dim + j] = psi_in[i] * psi_out[j];
      }
    }
    const AugmentedState out = evaluate(
        lifted,
        make_augmented(joint, RegisterLayout({dim, dim}, true)));
    const CVec mapped = mat_apply(kernels::matmul(u1, u2), psi_out);
    CVec expected(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        expected[i * dim + j] = psi_in[i] * mapped[j];
      }
    }
    err = std::max(err, max_abs_diff(project_aux(out, 1), expected));
    err = std::max(err, max_abs(project_aux(out, 0)));
  }
  return err;
}

double check_tensor_lift(std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (int rep = 0; rep < 10; ++rep) {
    const Matrix a = random_matrix(rng, 2, 2);
    const Matrix b = random_matrix(rng, 3, 3);
    const Matrix c = random_matrix(rng, 2, 2);
    const std::vector<std::size_t> dims = {2, 3, 2};
    const Matrix eye2 = Matrix::identity(2);
    const Matrix eye3 = Matrix::identity(3);
    err = std::max(err, max_abs_diff(network_action(tensor_lift(a, 0, dims)),
                                     kron(kron(a, eye3), eye2)));
    err = std::max(err, max_abs_diff(network_action(tensor_lift(b, 1, dims)),
                                     kron(kron(eye2, b), eye2)));
    err = std::max(err, max_abs_diff(network_action(tensor_lift(c, 2, dims)),
                                     kron(kron(eye2, eye3), c)));
  }
  return err;
}

double check_operation_count_bound(std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t dim = 1024;
  const Matrix u = random_matrix(rng, dim, dim);
  const Network net = q_of(u);
  const CVec psi = random_state(rng, dim);
  EvalStats stats;
  evaluate(net, make_augmented(psi, RegisterLayout({dim}, true)), &stats);
  const std::uint64_t bound =
      4 * static_cast<std::uint64_t>(dim) * dim + 16 * dim;
  if (stats.amplitude_ops > bound) {
    return static_cast<double>(stats.amplitude_ops - bound);
  }
  return 0.0;
}

double check_network_json_roundtrip(std::uint64_t seed) {
  Rng rng(seed);
  Network net(6, "roundtrip");
  net.push(Rotator{2, rng.complex_unit_box()});
  net.push(Transitor{1, 4, rng.complex_unit_box()});
  net.push(Jointer{});
  net.push(Connector{});
  net.push(ProjectorD{});
  net.push(ProjectorP{});
  net.push(External{random_matrix(rng, 6, 6), true});
  net.set_identity_plus(true);
  net.add_mark({"inner", 0, 2});
  const Json first = network_to_json(net);
  const Json second = network_to_json(network_from_json(first));
  return emit_report(first) == emit_report(second) ? 0.0 : 1.0;
}

// --- compiler ------------------------------------------------------------

double check_pauli_reconstruction(std::uint64_t) {
  double err = 0.0;
  for (std::size_t k = 1; k <= 3; ++k) {
    const std::size_t dim = std::size_t{1} << k;
    for (std::size_t m = 0; m < dim; ++m) {
      for (std::size_t n = 0; n < dim; ++n) {
        Matrix expected(dim, dim);
        expected(m, n) = 1.0;
        err = std::max(
            err, max_abs_diff(pauli_expand(pauli_decompose(m, n, k)),
                              expected));
      }
    }
  }
  return err;
}

double check_exchange_reconstruction(std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (std::size_t dim : kSmallDims) {
    // Cache the exchange columns E(m,n)|n>; they are U-independent.
    std::vector<CVec> columns(dim * dim);
    for (std::size_t m = 0; m < dim; ++m) {
      for (std::size_t n = 0; n < dim; ++n) {
        columns[m * dim + n] =
            mat_apply(exchange_gate(m, n, dim), basis_vector(dim, n));
      }
    }
    for (int rep = 0; rep < 25; ++rep) {
      const Matrix u = random_matrix(rng, dim, dim);
      Matrix rebuilt(dim, dim);
      for (std::size_t m = 0; m < dim; ++m) {
        for (std::size_t n = 0; n < dim; ++n) {
          const CVec& col = columns[m * dim + n];
          for (std::size_t row = 0; row < dim; ++row) {
            rebuilt(row, n) += u(m, n) * col[row];
          }
        }
      }
      err = std::max(err, max_abs_diff(rebuilt, u));
    }
  }
  return err;
}

double check_exchange_form_network(std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (int rep = 0; rep < 10; ++rep) {
    const Matrix u = random_matrix(rng, 8, 8);
    err = std::max(err, max_abs_diff(materialize_network(exchange_form(u)),
                                     materialize_network(q_of(u))));
  }
  return err;
}

double check_toffoli(std::uint64_t) {
  Matrix expected = Matrix::identity(8);
  expected(6, 6) = expected(7, 7) = 0.0;
  expected(6, 7) = expected(7, 6) = 1.0;
  return max_abs_diff(network_action(gate_toffoli()), expected);
}

double check_controlled(std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (int rep = 0; rep < 50; ++rep) {
    const Matrix u = random_matrix(rng, 2, 2);
    Matrix expected(4, 4);
    expected(0, 0) = expected(1, 1) = 1.0;
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        expected(2 + i, 2 + j) = u(i, j);
      }
    }
    err = std::max(err,
                   max_abs_diff(network_action(gate_controlled(u)), expected));
  }
  return err;
}

double check_gate_library(std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  // Phase: alpha = pi is the reflection, alpha = pi/2 gives diag(1, i).
  {
    Matrix reflect = Matrix::identity(4);
    reflect(2, 2) = -1.0;
    err = std::max(
        err, max_abs_diff(network_action(gate_phase(2, std::numbers::pi, 4)),
                          reflect));
    Matrix quarter = Matrix::identity(2);
    quarter(1, 1) = Complex(0.0, 1.0);
    err = std::max(err, max_abs_diff(
                            network_action(gate_phase(1, std::numbers::pi / 2, 2)),
                            quarter));
    err = std::max(err, max_abs_diff(network_action(gate_phase(0, 0.0, 2)),
                                     Matrix::identity(2)));
  }
  // Diagonal transformation.
  {
    CVec entries(8);
    for (Complex& z : entries) z = rng.complex_unit_box();
    Matrix expected(8, 8);
    for (std::size_t m = 0; m < 8; ++m) expected(m, m) = entries[m];
    err = std::max(err,
                   max_abs_diff(network_action(gate_diagonal(entries)),
                                expected));
  }
  // Single-qubit lift.
  {
    const Matrix u1 = random_matrix(rng, 2, 2);
    const Matrix expected =
        kron(kron(Matrix::identity(2), u1), Matrix::identity(2));
    err = std::max(err, max_abs_diff(
                            network_action(gate_single_qubit(u1, 1, 3)),
                            expected));
  }
  return err;
}

double check_gate_paths_agree(std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (int rep = 0; rep < 5; ++rep) {
    const Matrix u = random_matrix(rng, 8, 8);
    const Matrix via_q = network_action(q_of(u));
    const Matrix via_exchange = network_action(exchange_form(u));
    err = std::max(err, max_abs_diff(via_q, via_exchange));
  }
  CVec diag(4);
  for (Complex& z : diag) z = rng.complex_unit_box();
  Matrix u(4, 4);
  for (std::size_t m = 0; m < 4; ++m) u(m, m) = diag[m];
  err = std::max(err, max_abs_diff(network_action(gate_diagonal(diag)),
                                   network_action(q_of(u))));
  return err;
}

// --- algorithms ----------------------------------------------------------

double check_qft_unitarity(std::uint64_t) {
  double err = 0.0;
  for (std::size_t k = 1; k <= 8; ++k) {
    const Matrix f = qft_matrix(k);
    const Matrix gram = kernels::matmul(conj_transpose(f), f);
    err = std::max(err, max_abs_diff(gram, Matrix::identity(f.rows())));
  }
  return err;
}

double check_qft_network_action(std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (std::size_t k = 1; k <= 4; ++k) {
    const Matrix f = qft_matrix(k);
    const Network net = qft_network(k);
    const std::size_t dim = f.rows();
    for (int rep = 0; rep < 50; ++rep) {
      const CVec psi = random_state(rng, dim);
      const AugmentedState out =
          evaluate(net, make_augmented(psi, RegisterLayout({dim}, true)));
      err = std::max(err,
                     max_abs_diff(project_aux(out, 1), mat_apply(f, psi)));
    }
  }
  return err;
}

double check_qft_inverse_pair(std::uint64_t) {
  double err = 0.0;
  for (std::size_t k = 1; k <= 6; ++k) {
    const Matrix prod =
        kernels::matmul(qft_inverse_matrix(k), qft_matrix(k));
    err = std::max(err, max_abs_diff(prod, Matrix::identity(prod.rows())));
  }
  return err;
}

double check_grover_exact_small(std::uint64_t) {
  double err = 0.0;
  for (std::size_t j = 0; j < 4; ++j) {
    const GroverReport report = grover_run(2, j, 1);
    err = std::max(err, std::abs(report.success_probability - 1.0));
  }
  return err;
}

double check_grover_trajectory(std::uint64_t) {
  double err = 0.0;
  for (std::size_t k = 3; k <= 6; ++k) {
    const double theta =
        std::asin(std::pow(2.0, -static_cast<double>(k) / 2.0));
    const GroverReport report = grover_run(k, (std::size_t{1} << k) - 1);
    for (std::size_t t = 0; t < report.per_iteration_probs.size(); ++t) {
      const double expected =
          std::pow(std::sin((2.0 * static_cast<double>(t) + 1.0) * theta), 2);
      err = std::max(err,
                     std::abs(report.per_iteration_probs[t] - expected));
    }
  }
  return err;
}

double shor_report_deviation(const ShorReport& report,
                             const std::vector<std::uint64_t>& support,
                             double peak_prob, std::uint64_t period,
                             std::pair<std::uint64_t, std::uint64_t> factors) {
  if (report.peak_distribution.size() != support.size()) return 1.0;
  double err = 0.0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (report.peak_distribution[i].first != support[i]) return 1.0;
    err = std::max(err,
                   std::abs(report.peak_distribution[i].second - peak_prob));
  }
  if (!report.period_r.has_value() || *report.period_r != period) return 1.0;
  if (!report.factors.has_value() || report.factors->first != factors.first ||
      report.factors->second != factors.second) {
    return 1.0;
  }
  return err;
}

double check_shor_15_7(std::uint64_t) {
  const ShorReport report = shor_run(15, 7, 8);
  return shor_report_deviation(report, {0, 64, 128, 192}, 0.25, 4, {3, 5});
}

double check_shor_15_11(std::uint64_t) {
  const ShorReport report = shor_run(15, 11, 8);
  return shor_report_deviation(report, {0, 128}, 0.5, 2, {3, 5});
}

double check_shor_sampling_reproducible(std::uint64_t seed) {
  const ShorMeasurement mode{ShorMeasurement::Kind::Sample, seed, 0};
  const ShorReport a = shor_run(15, 7, 8, mode);
  const ShorReport b = shor_run(15, 7, 8, mode);
  return emit_report(shor_report_to_json(a)) ==
                 emit_report(shor_report_to_json(b))
             ? 0.0
             : 1.0;
}

double check_continued_fraction_cases(std::uint64_t) {
  const auto conv = continued_fraction(192, 256);
  if (conv.empty() || conv.back() != std::pair<std::uint64_t, std::uint64_t>{3, 4}) {
    return 1.0;
  }
  const auto zero = continued_fraction(0, 256);
  if (zero.size() != 1 || zero.front() != std::pair<std::uint64_t, std::uint64_t>{0, 1}) {
    return 1.0;
  }
  const auto half = continued_fraction(128, 256);
  if (half.back() != std::pair<std::uint64_t, std::uint64_t>{1, 2}) {
    return 1.0;
  }
  return 0.0;
}

double check_measurement_distribution(std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (int rep = 0; rep < 10; ++rep) {
    AugmentedState s{RegisterLayout({4, 8}, true),
                     random_state(rng, 64, false)};
    const MeasureOutcome mo = measure_register(s, 1, MeasureKind::Distribution);
    double total = 0.0;
    for (const auto& [v, p] : mo.distribution) total += p;
    err = std::max(err, std::abs(total - 1.0));
  }
  return err;
}

double grover_report_difference(const GroverReport& a, const GroverReport& b) {
  double err = std::abs(a.success_probability - b.success_probability);
  if (a.per_iteration_probs.size() != b.per_iteration_probs.size()) return 1.0;
  for (std::size_t i = 0; i < a.per_iteration_probs.size(); ++i) {
    err = std::max(err, std::abs(a.per_iteration_probs[i] -
                                 b.per_iteration_probs[i]));
  }
  return err;
}

double check_heterotic_grover(std::uint64_t) {
  double err = 0.0;
  for (std::size_t k : {3, 4}) {
    const GroverReport native = grover_run(k, 2);
    GroverOptions swap_qft;
    swap_qft.external_qft = true;
    err = std::max(err, grover_report_difference(native,
                                                 grover_run(k, 2, {}, swap_qft)));
    GroverOptions swap_prep;
    swap_prep.external_prep = true;
    err = std::max(err, grover_report_difference(
                            native, grover_run(k, 2, {}, swap_prep)));
  }
  return err;
}

double shor_distribution_difference(const ShorReport& a, const ShorReport& b) {
  if (a.peak_distribution.size() != b.peak_distribution.size()) return 1.0;
  double err = 0.0;
  for (std::size_t i = 0; i < a.peak_distribution.size(); ++i) {
    if (a.peak_distribution[i].first != b.peak_distribution[i].first) {
      return 1.0;
    }
    err = std::max(err, std::abs(a.peak_distribution[i].second -
                                 b.peak_distribution[i].second));
  }
  if (a.period_r != b.period_r || a.factors != b.factors ||
      a.measured_y != b.measured_y) {
    return 1.0;
  }
  return err;
}

double check_heterotic_shor(std::uint64_t) {
  const ShorReport native = shor_run(15, 7, 4);
  ShorOptions swap_qft;
  swap_qft.external_qft = true;
  double err = shor_distribution_difference(native, shor_run(15, 7, 4, {}, swap_qft));
  ShorOptions swap_prep;
  swap_prep.external_prep = true;
  err = std::max(err, shor_distribution_difference(
                          native, shor_run(15, 7, 4, {}, swap_prep)));
  return err;
}

// --- schrodinger ---------------------------------------------------------

double check_grid_hermiticity(std::uint64_t) {
  double err = 0.0;
  for (std::size_t n : {4, 8, 16, 64}) {
    const Grid g(n, 5.0);
    const Matrix p = momentum_op(g);
    const Matrix t = kinetic_op(g, 1.3);
    err = std::max(err, max_abs_diff(p, conj_transpose(p)));
    err = std::max(err, max_abs_diff(t, conj_transpose(t)));
  }
  return err;
}

double check_kinetic_identity(std::uint64_t) {
  double err = 0.0;
  for (std::size_t n : {4, 8, 16, 64}) {
    const Grid g(n, 5.0);
    const double mu = 1.3;
    const Matrix p = momentum_op(g);
    const Matrix p2 = Complex(1.0 / (2.0 * mu), 0.0) * kernels::matmul(p, p);
    err = std::max(err, max_abs_diff(kinetic_op(g, mu), p2));
  }
  return err;
}

double check_momentum_spectrum(std::uint64_t) {
  double err = 0.0;
  const Grid g(16, 4.0);
  const Matrix p = momentum_op(g);
  const double scale = static_cast<double>(g.points_n) / g.length_l;
  for (std::size_t q = 0; q < g.points_n; ++q) {
    CVec v(g.points_n);
    for (std::size_t m = 0; m < g.points_n; ++m) {
      v[m] = std::polar(1.0, 2.0 * std::numbers::pi *
                                 static_cast<double>(q * m) /
                                 static_cast<double>(g.points_n));
    }
    const double lambda =
        scale * std::sin(2.0 * std::numbers::pi * static_cast<double>(q) /
                         static_cast<double>(g.points_n));
    const CVec lhs = mat_apply(p, v);
    const CVec rhs = Complex(lambda, 0.0) * v;
    err = std::max(err, max_abs_diff(lhs, rhs));
  }
  return err;
}

double check_periodic_corners(std::uint64_t) {
  const Grid g(8, 2.0);
  const Matrix p = momentum_op(g);
  const double s = 0.5 * static_cast<double>(g.points_n) / g.length_l;
  double err = std::abs(p(0, 7) - Complex(0.0, s));
  err = std::max(err, std::abs(p(7, 0) - Complex(0.0, -s)));
  return err;
}

double check_euler_network_vs_dense(std::uint64_t seed) {
  Rng rng(seed);
  EvolutionSpec spec;
  spec.mass_mu = 1.0;
  spec.dt = 0.002;
  spec.total_t = 0.04;  // 20 steps
  spec.potential.kind = Potential::Kind::Harmonic;
  spec.potential.omega = 1.0;
  const Grid g(16, 4.0);
  const Network net = evolve_network(g, spec);
  double err = 0.0;
  for (int rep = 0; rep < 20; ++rep) {
    const CVec psi = random_state(rng, g.points_n);
    const AugmentedState out = evaluate(
        net, make_augmented(psi, RegisterLayout({g.points_n}, true)));
    const CVec dense = euler_evolve_dense(g, spec, psi);
    err = std::max(err, max_abs_diff(project_aux(out, 1), dense));
  }
  return err;
}

double check_first_order_convergence(std::uint64_t) {
  EvolutionSpec spec;
  spec.mass_mu = 1.0;
  spec.dt = 0.1 / 64.0;
  spec.total_t = 0.1;
  spec.potential.kind = Potential::Kind::Harmonic;
  spec.potential.omega = 1.0;
  const Grid g(64, 8.0);
  const CVec psi0 = gaussian_packet(g, 4.0, 0.8, 2.0);
  const ExactComparison cmp = compare_exact(g, spec, psi0);
  double err = 0.0;
  for (std::size_t i = 0; i + 1 < cmp.table.size(); ++i) {
    const double ratio =
        cmp.table[i].global_error / cmp.table[i + 1].global_error;
    if (ratio < 1.7) err = std::max(err, 1.7 - ratio);
    if (ratio > 2.3) err = std::max(err, ratio - 2.3);
  }
  return err;
}

double check_norm_growth_identity(std::uint64_t seed) {
  Rng rng(seed);
  EvolutionSpec spec;
  spec.mass_mu = 1.0;
  spec.dt = 0.003;
  spec.total_t = 0.03;
  spec.potential.kind = Potential::Kind::Harmonic;
  spec.potential.omega = 2.0;
  const Grid g(32, 6.0);
  const Matrix h = hamiltonian(g, spec);
  CVec psi = random_state(rng, g.points_n);
  double err = 0.0;
  for (int s = 0; s < 10; ++s) {
    const CVec h_psi = mat_apply(h, psi);
    const double before = norm2_sq(psi);
    const double expected =
        before + spec.dt * spec.dt * norm2_sq(h_psi);
    for (std::size_t m = 0; m < psi.size(); ++m) {
      psi[m] += Complex(0.0, -spec.dt) * h_psi[m];
    }
    const double after = norm2_sq(psi);
    err = std::max(err, std::abs(after - expected) / expected);
  }
  return err;
}

double check_euler_step_action(std::uint64_t seed) {
  Rng rng(seed);
  EvolutionSpec spec;
  spec.mass_mu = 0.7;
  spec.dt = 0.01;
  spec.total_t = 0.01;
  spec.potential.kind = Potential::Kind::Constant;
  spec.potential.constant = 0.4;
  const Grid g(8, 3.0);
  const Matrix h = hamiltonian(g, spec);
  const Network net = euler_step_network(g, spec);
  double err = 0.0;
  for (int rep = 0; rep < 10; ++rep) {
    const CVec psi = random_state(rng, g.points_n);
    const AugmentedState out = evaluate(
        net, make_augmented(psi, RegisterLayout({g.points_n}, true)));
    CVec expected = psi;
    const CVec h_psi = mat_apply(h, psi);
    for (std::size_t m = 0; m < psi.size(); ++m) {
      expected[m] -= Complex(0.0, spec.dt) * h_psi[m];
    }
    err = std::max(err, max_abs_diff(project_aux(out, 1), expected));
  }
  return err;
}

// --- registry ------------------------------------------------------------

std::vector<CheckSpec> build_registry() {
  return {
      // core
      {"mat_apply composition", "core", 0, 1e-12, check_mat_apply_composition},
      {"kron mixed product", "core", 0, 1e-12, check_kron_mixed_product},
      {"expm inverse identity", "core", 0, 1e-10, check_expm_inverse},
      {"expm unitary for skew-hermitian", "core", 0, 1e-10,
       check_expm_unitarity},
      {"parallel kernels match serial reference", "core", 0, 0.0,
       check_parallel_kernels},
      {"branch norm additivity", "core", 0, 1e-12,
       check_branch_norm_additivity},
      {"index encoding bijection", "core", 0, 0.0, check_encode_bijection},
      // elements
      {"jointer and connector square to zero", "elements", 1, 1e-14,
       check_jointer_nilpotent},
      {"anticommutator C C+ + C+ C = I", "elements", 1, 1e-14,
       check_anticommutator},
      {"rotator/transitor factors commute", "elements", 1, 1e-14,
       check_factor_commutativity},
      {"element apply matches dense form", "elements", 0, 1e-12,
       check_apply_matches_dense},
      {"exchange E(2,3)=CNOT, E(1,2)=SWAP", "elements", 5, 0.0,
       check_exchange_small_gates},
      {"exchange defining property E(m,n)|n>=|m>", "elements", 5, 1e-14,
       check_exchange_defining_property},
      {"exchange construction ordering reversed from formula", "elements", 0,
       0.0, check_exchange_ordering_note},
      {"adjacent exchanges hermitian involutions", "elements", 0, 1e-14,
       check_adjacent_exchange_involution},
      {"element application costs", "elements", 0, 0.0, check_element_costs},
      // network
      {"universal action on random (non-unitary) U", "network", 2, 1e-11,
       check_universal_action},
      {"materialized closed form [[I,0],[U,I]]", "network", 0, 1e-12,
       check_closed_form},
      {"sum law", "network", 3, 1e-12, check_sum_law},
      {"sum permutation invariance", "network", 0, 1e-12,
       check_sum_permutation_invariance},
      {"product law", "network", 4, 1e-11, check_product_law},
      {"product interior squares to zero", "network", 4, 1e-12,
       check_product_interior_nilpotent},
      {"inverse network", "network", 0, 1e-12, check_inverse_network},
      {"two-register lift", "network", 0, 1e-11, check_two_register_lift},
      {"tensor lift matches dense kron", "network", 0, 1e-12,
       check_tensor_lift},
      {"evaluation operation-count bound (dim 1024)", "network", 12, 0.0,
       check_operation_count_bound},
      {"network JSON round-trip", "network", 0, 0.0,
       check_network_json_roundtrip},
      // compiler
      {"pauli expansion reproduces |m><n| (k<=3)", "compiler", 5, 1e-14,
       check_pauli_reconstruction},
      {"exchange reconstruction of U", "compiler", 5, 1e-12,
       check_exchange_reconstruction},
      {"exchange-form network equals q_of", "compiler", 0, 1e-12,
       check_exchange_form_network},
      {"toffoli network is the permutation matrix", "compiler", 6, 1e-14,
       check_toffoli},
      {"controlled-U matches the block form", "compiler", 6, 1e-12,
       check_controlled},
      {"gate library dense forms", "compiler", 0, 1e-12, check_gate_library},
      {"construction paths agree", "compiler", 0, 1e-12,
       check_gate_paths_agree},
      // algorithms
      {"qft unitary (k<=8)", "algorithms", 7, 1e-12, check_qft_unitarity},
      {"qft network action (k<=4)", "algorithms", 7, 1e-11,
       check_qft_network_action},
      {"qft inverse pair", "algorithms", 0, 1e-12, check_qft_inverse_pair},
      {"grover k=2 single-iteration certainty", "algorithms", 8, 0.0,
       check_grover_exact_small},
      {"grover trajectory sin^2((2t+1)theta)", "algorithms", 8, 1e-8,
       check_grover_trajectory},
      {"shor 15/7 peaks, period, factors", "algorithms", 9, 1e-10,
       check_shor_15_7},
      {"shor 15/11 peaks, period, factors", "algorithms", 9, 1e-10,
       check_shor_15_11},
      {"shor sampling byte-reproducible", "algorithms", 9, 0.0,
       check_shor_sampling_reproducible},
      {"continued fraction convergents", "algorithms", 0, 0.0,
       check_continued_fraction_cases},
      {"measurement distribution sums to one", "algorithms", 0, 1e-12,
       check_measurement_distribution},
      {"heterotic swap: grover unchanged", "algorithms", 11, 1e-10,
       check_heterotic_grover},
      {"heterotic swap: shor unchanged", "algorithms", 11, 1e-10,
       check_heterotic_shor},
      // schrodinger
      {"momentum/kinetic hermitian", "schrodinger", 0, 1e-14,
       check_grid_hermiticity},
      {"kinetic equals momentum^2/(2mu)", "schrodinger", 10, 1e-12,
       check_kinetic_identity},
      {"momentum spectrum (N/L) sin(2 pi q/N)", "schrodinger", 0, 1e-10,
       check_momentum_spectrum},
      {"periodic wrap corners", "schrodinger", 0, 1e-14,
       check_periodic_corners},
      {"evolution network matches dense euler", "schrodinger", 0, 1e-10,
       check_euler_network_vs_dense},
      {"first-order convergence under dt halving", "schrodinger", 10, 0.0,
       check_first_order_convergence},
      {"per-step norm growth identity", "schrodinger", 10, 1e-12,
       check_norm_growth_identity},
      {"euler step branch-1 action", "schrodinger", 0, 1e-12,
       check_euler_step_action},
  };
}

}  // namespace

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

const std::vector<CheckSpec>& verify_checks() {
  static const std::vector<CheckSpec> registry = build_registry();
  return registry;
}

const std::vector<std::string>& verify_scopes() {
  static const std::vector<std::string> scopes = {
      "core",      "elements",    "network", "compiler",
      "algorithms", "schrodinger", "all"};
  return scopes;
}

VerificationReport run_verify_suite(const std::string& scope,
                                    std::uint64_t seed) {
  const auto& scopes = verify_scopes();
  if (std::find(scopes.begin(), scopes.end(), scope) == scopes.end()) {
    throw InvalidInput("verify: unknown scope '" + scope + "'");
  }
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.suite_name = scope;
  for (const CheckSpec& spec : verify_checks()) {
    if (scope != "all" && spec.scope != scope) continue;
    CheckResult result;
    result.name = spec.name;
    result.tolerance = spec.tolerance;
    result.max_abs_error = spec.run(seed);
    result.passed = result.max_abs_error <= result.tolerance;
    report.checks.push_back(std::move(result));
  }
  const auto stop = std::chrono::steady_clock::now();
  report.wall_time_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(stop - start)
          .count();
  return report;
}

Json verification_to_json(const VerificationReport& report,
                          bool include_timing) {
  Json j;
  j["suite_name"] = report.suite_name;
  Json checks = Json::array();
  for (const CheckResult& c : report.checks) {
    Json jc;
    jc["name"] = c.name;
    jc["max_abs_error"] = c.max_abs_error;
    jc["tolerance"] = c.tolerance;
    jc["passed"] = c.passed;
    checks.push_back(std::move(jc));
  }
  j["checks"] = std::move(checks);
  if (include_timing) j["wall_time_ms"] = report.wall_time_ms;
  j["all_passed"] = report.all_passed();
  return j;
}

}  // namespace qnet
